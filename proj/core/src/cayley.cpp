#include "isofrag/cayley.hpp"

namespace isofrag {

Relation cayley_relation(const FiniteGroup& g, const ElementSet& s) {
    if (!s.test(FiniteGroup::identity))
        throw NotReflexiveError("connection set misses the identity");
    const int n = g.order();
    std::vector<ElementSet> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) rows.push_back(translate(g, s, x, Side::Left));  // row x = xS
    return Relation(std::move(rows));
}

CayleyGraph::CayleyGraph(std::shared_ptr<const FiniteGroup> group, ElementSet connection_set)
    : group_(std::move(group)),
      connection_set_(std::move(connection_set)),
      relation_(cayley_relation(*group_, connection_set_)) {}

std::pair<ElementSet, int> normalize_connection_set(const FiniteGroup& g, const ElementSet& s) {
    if (s.empty()) throw EmptySetError("normalize_connection_set");
    int a = s.lowest();
    return {translate(g, s, g.inv(a), Side::Right), a};  // S a^-1
}

bool is_block_under_translations(const FiniteGroup& g, const ElementSet& b) {
    for (int x = 0; x < g.order(); ++x) {
        ElementSet t = translate(g, b, x, Side::Left);
        if (t != b && t.intersects(b)) return false;
    }
    return true;
}

bool is_block_under_translations(const CayleyGraph& graph, const ElementSet& b) {
    return is_block_under_translations(graph.group(), b);
}

ElementSet orbit_canonical(const FiniteGroup& g, const ElementSet& x) {
    ElementSet best = x;
    for (int t = 0; t < g.order(); ++t) {
        ElementSet cand = translate(g, x, t, Side::Left);
        if (ElementSet::lex_less(cand, best)) best = cand;
    }
    return best;
}

ElementSet orbit_canonical(const CayleyGraph& graph, const ElementSet& x) {
    return orbit_canonical(graph.group(), x);
}

OrbitIndex orbit_index(const FiniteGroup& g, const ElementSet& x) {
    OrbitIndex oi;
    oi.representative = x;
    std::vector<ElementSet> seen;
    for (int t = 0; t < g.order(); ++t) {
        ElementSet cand = translate(g, x, t, Side::Left);
        if (ElementSet::lex_less(cand, oi.representative)) oi.representative = cand;
        bool fresh = true;
        for (const auto& s : seen)
            if (s == cand) {
                fresh = false;
                break;
            }
        if (fresh) seen.push_back(cand);
    }
    oi.orbit_size = static_cast<int>(seen.size());
    return oi;
}

}  // namespace isofrag
