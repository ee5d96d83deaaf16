#include "isofrag/relation.hpp"

#include <string>

namespace isofrag {

Relation::Relation(std::vector<ElementSet> rows) : rows_(std::move(rows)) {
    n_ = static_cast<int>(rows_.size());
    if (n_ == 0) throw Error("relation needs at least one vertex");
    if (n_ > kMaxUniverse)
        throw BudgetExceededError("relation on " + std::to_string(n_) + " vertices exceeds cap");
    for (int v = 0; v < n_; ++v) {
        const auto& row = rows_[static_cast<std::size_t>(v)];
        if (row.universe_size() != n_) throw Error("relation row universe mismatch");
        if (!row.test(v)) throw NotReflexiveError("vertex " + std::to_string(v) + " has no loop");
    }
}

ElementSet image(const Relation& r, const ElementSet& x) {
    ElementSet out(r.vertex_count());
    x.for_each([&](int v) { out |= r.row(v); });
    return out;
}

ElementSet board(const Relation& r, const ElementSet& x) { return image(r, x) - x; }

ElementSet exterior(const Relation& r, const ElementSet& x) { return image(r, x).complement(); }

Relation reverse(const Relation& r) {
    int n = r.vertex_count();
    std::vector<ElementSet> rows(static_cast<std::size_t>(n), ElementSet(n));
    for (int x = 0; x < n; ++x)
        r.row(x).for_each([&](int y) { rows[static_cast<std::size_t>(y)].add(x); });
    return Relation(std::move(rows));
}

DegreeProfile degree_profile(const Relation& r) {
    int n = r.vertex_count();
    DegreeProfile p;
    p.delta = n;
    p.delta_minus = n;
    int max_out = 0, max_in = 0;
    std::vector<int> in_deg(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        int d = r.row(v).count();
        p.delta = std::min(p.delta, d);
        max_out = std::max(max_out, d);
        r.row(v).for_each([&](int w) { ++in_deg[static_cast<std::size_t>(w)]; });
    }
    for (int v = 0; v < n; ++v) {
        p.delta_minus = std::min(p.delta_minus, in_deg[static_cast<std::size_t>(v)]);
        max_in = std::max(max_in, in_deg[static_cast<std::size_t>(v)]);
    }
    p.regular = p.delta == max_out;
    p.reverse_regular = p.delta_minus == max_in;
    return p;
}

}  // namespace isofrag
