#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isofrag/element_set.hpp"
#include "isofrag/errors.hpp"

namespace isofrag {

/// Which way to multiply by a fixed element.
enum class Side { Left, Right };

/// Recipe for building a group: a named family or an explicit Cayley table.
/// CLI grammar: "cyclic:7", "dihedral:8", "q8", "s3", "s4", "product:2x4"
/// (cyclic factors), or "@file.json" with the JSON form handled in json_io.
struct GroupDescriptor {
    enum class Family { Cyclic, Dihedral, Quaternion, Symmetric, Product, Table };

    Family family = Family::Cyclic;
    int n = 1;                           // cyclic order / dihedral order / symmetric degree
    std::vector<GroupDescriptor> parts;  // Product factors
    std::vector<std::vector<int>> table; // Table

    static GroupDescriptor cyclic(int n);
    static GroupDescriptor dihedral(int order);
    static GroupDescriptor quaternion();
    static GroupDescriptor symmetric(int degree);
    static GroupDescriptor product(std::vector<GroupDescriptor> parts);
    static GroupDescriptor explicit_table(std::vector<std::vector<int>> table);

    /// Parse the CLI grammar above (not the JSON form).
    static GroupDescriptor parse(const std::string& text);

    std::string name() const;  // "Z7", "D8", "Q8", "S4", "Z2xZ4", "table[6]"
    int order() const;
};

/// A finite group given by its full multiplication table. Elements are dense
/// indices 0..n-1 with the identity fixed at index 0. Immutable after
/// construction; all four group axioms are verified by the constructor.
///
/// Canonical numbering of the named families:
///   cyclic n      — residues 0..n-1
///   dihedral 2m   — rotations r^i at i, reflections r^i*s at m+i
///   quaternion    — 1,i,j,k,-1,-i,-j,-k at 0..7
///   symmetric d   — permutations of {0..d-1} in lexicographic order,
///                   composed as (p*q)(x) = p(q(x))
///   product       — mixed-radix pairs, first factor most significant
class FiniteGroup {
public:
    /// Validates the table: n x n Latin square over 0..n-1, identity at
    /// index 0, two-sided inverses, associativity. Throws NotAGroupError.
    explicit FiniteGroup(std::vector<std::vector<int>> table, std::string name = "");

    static FiniteGroup build(const GroupDescriptor& spec);
    static std::shared_ptr<const FiniteGroup> build_shared(const GroupDescriptor& spec);

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    static constexpr int identity = 0;

    const std::string& name() const { return name_; }
    const GroupDescriptor& descriptor() const { return descriptor_; }

    ElementSet universe() const { return ElementSet::full_set(order_); }

    bool is_abelian() const;

private:
    friend struct GroupBuilder;
    int order_ = 0;
    std::vector<std::uint16_t> table_;  // row-major n*n
    std::vector<std::uint16_t> inv_;
    std::string name_;
    GroupDescriptor descriptor_;
};

/// A validated subgroup: contains the identity, closed under product and
/// inverse. Construction checks the invariants.
class Subgroup {
public:
    Subgroup(const FiniteGroup& group, ElementSet elements);

    const ElementSet& elements() const { return elements_; }
    int order() const { return elements_.count(); }

private:
    ElementSet elements_;
};

/// Minkowski product AB = {xy : x in A, y in B}.
ElementSet set_product(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);

/// {x^-1 : x in A}. Involutive.
ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a);

/// gA (left) or Ag (right). Cardinality-preserving.
ElementSet translate(const FiniteGroup& g, const ElementSet& a, int x, Side side);

/// Smallest subgroup containing S (closure iteration); <{}> = {e}.
Subgroup generated_subgroup(const FiniteGroup& g, const ElementSet& s);

/// Complete, deduplicated subgroup list, {e} and G included, ordered by
/// (order, lex). Throws BudgetExceededError when order() > budget.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int budget = 64);

/// Left stabilizer Q = {x : xA = A} and the count t of right Q-cosets whose
/// union is A; t = |{a^-1 A : a in A}| = |A|/|Q|.
struct CosetDecomposition {
    Subgroup stabilizer;
    int coset_count;
};
CosetDecomposition stabilizer_and_cosets(const FiniteGroup& g, const ElementSet& a);

/// Witness that S = {start, r*start, ..., r^j*start} (right) or the mirror
/// left form. Sets of size <= 1 count as (degenerate) progressions.
struct ProgressionWitness {
    int ratio = 0;
    Side side = Side::Right;
    int start = 0;
    int length = 0;
};
std::optional<ProgressionWitness> is_progression(const FiniteGroup& g, const ElementSet& s);

}  // namespace isofrag
