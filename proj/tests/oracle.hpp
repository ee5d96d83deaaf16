#pragma once

// Independent ground truth for kappa / fragment enumeration: a plain scan of
// all 2^n subsets with images recomputed row-by-row per mask. Shares no
// search code with the library; used to certify the pruned engine.

#include <cstdint>
#include <vector>

#include "isofrag/relation.hpp"

namespace oracle {

struct BruteReport {
    bool separable = false;
    int kappa = 0;
    std::vector<std::uint64_t> fragments;  // masks, ascending
    std::vector<std::uint64_t> atoms;
    std::vector<std::uint64_t> super_fragments;
};

inline std::uint64_t row_mask(const isofrag::Relation& r, int v) {
    std::uint64_t m = 0;
    r.row(v).for_each([&](int i) { m |= std::uint64_t{1} << i; });
    return m;
}

inline std::uint64_t image_mask(const isofrag::Relation& r, std::uint64_t x) {
    std::uint64_t img = 0;
    for (int v = 0; v < r.vertex_count(); ++v)
        if (x >> v & 1) img |= row_mask(r, v);
    return img;
}

inline BruteReport brute_fragments(const isofrag::Relation& r, int k) {
    const int n = r.vertex_count();
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    BruteReport rep;
    int best = n + 1;
    for (std::uint64_t x = 1; x <= full; ++x) {
        if (std::popcount(x) < k) continue;
        std::uint64_t img = image_mask(r, x);
        if (std::popcount(full & ~img) < k) continue;
        best = std::min(best, std::popcount(img & ~x));
    }
    if (best > n) return rep;
    rep.separable = true;
    rep.kappa = best;
    int min_size = n + 1, max_size = -1;
    for (std::uint64_t x = 1; x <= full; ++x) {
        if (std::popcount(x) < k) continue;
        std::uint64_t img = image_mask(r, x);
        if (std::popcount(full & ~img) < k) continue;
        if (std::popcount(img & ~x) != best) continue;
        rep.fragments.push_back(x);
        min_size = std::min(min_size, std::popcount(x));
        max_size = std::max(max_size, std::popcount(x));
    }
    for (std::uint64_t x : rep.fragments) {
        if (std::popcount(x) == min_size) rep.atoms.push_back(x);
        if (std::popcount(x) == max_size) rep.super_fragments.push_back(x);
    }
    return rep;
}

inline std::uint64_t set_mask(const isofrag::ElementSet& s) {
    std::uint64_t m = 0;
    s.for_each([&](int i) { m |= std::uint64_t{1} << i; });
    return m;
}

inline std::vector<std::uint64_t> set_masks(const std::vector<isofrag::ElementSet>& sets) {
    std::vector<std::uint64_t> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(set_mask(s));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
