#pragma once

#include <vector>

#include "isofrag/element_set.hpp"
#include "isofrag/errors.hpp"

namespace isofrag {

/// A finite reflexive directed graph on vertices 0..n-1, stored as one
/// out-neighborhood bitset row per vertex. Non-reflexive input is rejected
/// at construction, not repaired. Immutable.
class Relation {
public:
    explicit Relation(std::vector<ElementSet> rows);

    int vertex_count() const { return n_; }
    const ElementSet& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    const std::vector<ElementSet>& rows() const { return rows_; }

    bool operator==(const Relation& o) const { return rows_ == o.rows_; }

private:
    int n_ = 0;
    std::vector<ElementSet> rows_;
};

/// Image of X: union of the rows over X. X is contained in the image.
ElementSet image(const Relation& r, const ElementSet& x);

/// Board of X: image(X) minus X.
ElementSet board(const Relation& r, const ElementSet& x);

/// Exterior of X: vertices outside the image. (X, board, exterior)
/// partitions the vertex set.
ElementSet exterior(const Relation& r, const ElementSet& x);

/// Edge (x,y) present iff (y,x) is present in r. Involutive, keeps
/// reflexivity.
Relation reverse(const Relation& r);

struct DegreeProfile {
    int delta = 0;        // min out-degree
    int delta_minus = 0;  // min in-degree
    bool regular = false;
    bool reverse_regular = false;
};
DegreeProfile degree_profile(const Relation& r);

}  // namespace isofrag
