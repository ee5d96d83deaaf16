#pragma once

#include <memory>
#include <utility>

#include "isofrag/group.hpp"
#include "isofrag/relation.hpp"

namespace isofrag {

/// Cay(G,S): vertex set G, edge (x,y) iff x^-1 y in S. Requires e in S so
/// the relation is reflexive. Row x equals xS, so the graph is |S|-regular
/// and vertex-transitive under left translations.
class CayleyGraph {
public:
    CayleyGraph(std::shared_ptr<const FiniteGroup> group, ElementSet connection_set);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    const ElementSet& connection_set() const { return connection_set_; }
    const Relation& relation() const { return relation_; }

private:
    std::shared_ptr<const FiniteGroup> group_;
    ElementSet connection_set_;
    Relation relation_;
};

/// Builds the relation rows of Cay(G,S) without wrapping them in a
/// CayleyGraph. Throws NotReflexiveError when e is not in S.
Relation cayley_relation(const FiniteGroup& g, const ElementSet& s);

/// Picks a in S (lowest index) and returns (S a^-1, a); e lies in S a^-1 and
/// Cay(G, S a^-1) has the same k-fragments as Cay(G, S).
std::pair<ElementSet, int> normalize_connection_set(const FiniteGroup& g, const ElementSet& s);

/// True iff gB = B or gB disjoint from B for every g, i.e. B is a right
/// coset of its left stabilizer. Only translation automorphisms are
/// consulted.
bool is_block_under_translations(const CayleyGraph& graph, const ElementSet& b);
bool is_block_under_translations(const FiniteGroup& g, const ElementSet& b);

/// Lex-least bitset among the left translates {gX}. Idempotent and
/// orbit-invariant; the designated reducer for subset scans.
ElementSet orbit_canonical(const FiniteGroup& g, const ElementSet& x);
ElementSet orbit_canonical(const CayleyGraph& graph, const ElementSet& x);

/// Canonical representative plus the number of distinct left translates.
struct OrbitIndex {
    ElementSet representative;
    int orbit_size = 0;
};
OrbitIndex orbit_index(const FiniteGroup& g, const ElementSet& x);

}  // namespace isofrag
