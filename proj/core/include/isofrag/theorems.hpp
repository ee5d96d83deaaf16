#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isofrag/cayley.hpp"
#include "isofrag/group.hpp"
#include "isofrag/isoperimetry.hpp"

namespace isofrag {

enum class Verdict { Pass, Fail, HypothesisNotMet };
const char* to_string(Verdict v);

/// Structures proving a satisfied clause: the subgroup H, the element a,
/// an auxiliary set, a progression decomposition. Every field a verifier
/// fills can be re-validated from scratch by the caller.
struct TheoremWitness {
    std::optional<ElementSet> subgroup;
    std::optional<int> element;
    std::optional<ElementSet> set;
    std::optional<ProgressionWitness> progression;
    std::string note;
};

struct ClauseResult {
    std::string id;
    bool holds = false;
    std::optional<TheoremWitness> witness;
};

/// One verifier run on one instance. hypothesis_met == false leaves the
/// clause list empty; a Pass carries at least one true clause.
struct VerdictRecord {
    std::string theorem_id;
    GroupDescriptor group;
    std::string group_name;
    std::vector<ElementSet> sets;  // the subset arguments (S, or A)
    bool hypothesis_met = false;
    Verdict verdict = Verdict::HypothesisNotMet;
    std::vector<ClauseResult> clauses;
    std::string note;
};

/// |A u AS| >= min(|G|-1, |A|+|S|) for every A with |A| >= 2. Brute force
/// with left-translation orbit reduction on A.
bool check_vosper_subset(const FiniteGroup& g, const ElementSet& s);

/// Theorem 1.1: A with |A^-1 A| < 2|A| and |A A^-1| < 2|A| (hypothesis
/// computed internally, G = <A^-1 A>) satisfies one of
///   (i)   AA^-1 = G\{u} or A^-1A = G\{u} for some u in G with u^2 = e,
///   (ii)  A is a progression,
///   (iii) A^-1 H A = A^-1A u a^-1 H a for a non-null subgroup H of G, a in A,
///   (iv)  A H A^-1 = AA^-1 u a H a^-1 for a non-null subgroup H of G, a in A.
/// Subgroup search ascends by (order, lex), elements ascend; first witness
/// wins. H = G is admitted and flagged in the record note.
VerdictRecord verify_main_theorem(const FiniteGroup& g, const ElementSet& a,
                                  const SearchOptions& opts = {});

/// Cay(G,S) degenerate and reverse-degenerate, S generating with e in S:
/// some finite subgroup H is a 2-fragment or reverse-2-fragment, or both
/// graphs are 2-faithful Cauchy and some H u Ha is a 2-atom or
/// reverse-2-atom.
VerdictRecord verify_2atom_structure(const FiniteGroup& g, const ElementSet& s,
                                     const SearchOptions& opts = {});

/// Same alternative with |H| >= 2, under the added bound
/// |S| < (1 - 1/p)|G| + 1 (p = smallest nontrivial subgroup order), unless
/// S is a progression.
VerdictRecord verify_dl(const FiniteGroup& g, const ElementSet& s,
                        const SearchOptions& opts = {});

/// Equivalence of
///   (i)  some A, |A| >= 2: min(|AS|,|SA|) <= min(|G|-2, |A|+|S|-1)
///   (ii) some subgroup H and a not in H:
///        min(|H{e,a}S|, |S{e,a}H|) <= min(|G|-2, 2|H|+|S|-1).
VerdictRecord verify_astercay(const FiniteGroup& g, const ElementSet& s,
                              const SearchOptions& opts = {});

/// Cay(G,S) degenerate with a subgroup H that is a 2-fragment: for each such
/// H there is a in S with S^-1 H S = S^-1 S u a^-1 H a.
VerdictRecord verify_groupfrag(const FiniteGroup& g, const ElementSet& s,
                               const SearchOptions& opts = {});

/// Cay(G,S) 1-separable, S generating with e in S: the 1-atom containing e
/// is a subgroup, or the reverse 1-atom containing e is a subgroup. Also
/// reports (without asserting) how the subgroup bound
/// min(|HS|,|SH|) vs min(|G|,|H|+|S|-1) relates to the Cauchy property,
/// per subgroup, since the paper's biconditional direction is garbled.
VerdictRecord verify_cauchy_cayley(const FiniteGroup& g, const ElementSet& s,
                                   const SearchOptions& opts = {});

/// Vertex-transitive alternative for degenerate + reverse-degenerate Cayley
/// graphs: (i) a non-Cauchy side has a 1-atom or reverse-1-atom block,
/// (ii) a non-2-faithful side has all reverse-2-super-fragments blocks,
/// (iii) both sides 2-faithful Cauchy and no vertex lies in three distinct
/// 2-atoms and three distinct reverse-2-atoms, or (iv) some atom side has
/// cardinality 2. Blocks are checked against left translations only.
VerdictRecord verify_vtvosper(const FiniteGroup& g, const ElementSet& s,
                              const SearchOptions& opts = {});

struct ScanConfig {
    std::vector<GroupDescriptor> groups;  // empty -> default_roster(max_order)
    int max_order = 12;
    bool generating_only = true;   // Cayley scans: keep only <S> = G
    bool require_identity = true;  // Cayley scans: keep only S containing e
    bool orbit_reduce = true;
    int threads = 1;
    SearchOptions search;
};

/// Pass/fail bookkeeping for one theorem over a family of instances.
/// Weighted counts expand each canonical representative by its orbit size;
/// canonical_instances counts the representatives actually run.
struct ScanSummary {
    std::string theorem_id;
    std::uint64_t canonical_instances = 0;
    std::uint64_t instances = 0;  // orbit-weighted
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t hypothesis_not_met = 0;
    std::map<std::string, std::uint64_t> clause_counts;  // orbit-weighted
    std::vector<VerdictRecord> failures;                 // replayable witnesses
};

using RecordSink = std::function<void(const VerdictRecord&, int orbit_size)>;

/// Known ids: kneser, cauchycayley, 2atomcay, dl, astercay, groupfrag,
/// vtvosper. Instances are generated in deterministic order (groups as
/// configured, subsets ascending by canonical representative); records are
/// emitted in that order for any thread count. Throws UnknownTheoremError.
ScanSummary scan(const ScanConfig& config, const std::string& theorem_id,
                 const RecordSink& sink = {});

std::vector<std::string> known_theorems();

/// All cyclic groups up to max_order, dihedral orders 6..16, Q8, Z2xZ2,
/// Z2xZ4, Z2xZ2xZ2, Z3xZ3, S3 and S4, filtered by order <= max_order.
std::vector<GroupDescriptor> default_roster(int max_order);

}  // namespace isofrag
