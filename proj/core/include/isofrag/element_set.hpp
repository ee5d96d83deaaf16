#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace isofrag {

// Universe cap. One 64-bit word by default; configure a larger cap at build
// time (-DISOFRAG_MAX_UNIVERSE=128) when groups above order 64 are needed.
#ifndef ISOFRAG_MAX_UNIVERSE
#define ISOFRAG_MAX_UNIVERSE 64
#endif
inline constexpr int kMaxUniverse = ISOFRAG_MAX_UNIVERSE;
inline constexpr int kSetWords = (kMaxUniverse + 63) / 64;

/// A subset of {0..universe_size-1}, bitset-encoded. The universal currency
/// of the library: group subsets, vertex sets, neighborhoods are all
/// ElementSets. Value type, cheap to copy.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(int universe_size) : universe_(universe_size) {
        assert(universe_size >= 0 && universe_size <= kMaxUniverse);
        words_.fill(0);
    }

    static ElementSet empty_set(int universe) { return ElementSet(universe); }

    static ElementSet full_set(int universe) {
        ElementSet s(universe);
        for (int i = 0; i < universe; ++i) s.add(i);
        return s;
    }

    static ElementSet single(int universe, int v) {
        ElementSet s(universe);
        s.add(v);
        return s;
    }

    static ElementSet of(int universe, std::initializer_list<int> xs) {
        ElementSet s(universe);
        for (int v : xs) s.add(v);
        return s;
    }

    static ElementSet from_indices(int universe, const std::vector<int>& xs) {
        ElementSet s(universe);
        for (int v : xs) s.add(v);
        return s;
    }

    int universe_size() const { return universe_; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool test(int i) const {
        assert(i >= 0 && i < universe_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void add(int i) {
        assert(i >= 0 && i < universe_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void remove(int i) {
        assert(i >= 0 && i < universe_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    /// Smallest member; -1 when empty.
    int lowest() const {
        for (int w = 0; w < kSetWords; ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    bool contains(const ElementSet& o) const {  // superset-or-equal
        for (int w = 0; w < kSetWords; ++w)
            if ((o.words_[w] & ~words_[w]) != 0) return false;
        return true;
    }

    bool intersects(const ElementSet& o) const {
        for (int w = 0; w < kSetWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    ElementSet operator|(const ElementSet& o) const {
        ElementSet r = *this;
        for (int w = 0; w < kSetWords; ++w) r.words_[w] |= o.words_[w];
        return r;
    }

    ElementSet operator&(const ElementSet& o) const {
        ElementSet r = *this;
        for (int w = 0; w < kSetWords; ++w) r.words_[w] &= o.words_[w];
        return r;
    }

    /// Set difference: elements of *this not in o.
    ElementSet operator-(const ElementSet& o) const {
        ElementSet r = *this;
        for (int w = 0; w < kSetWords; ++w) r.words_[w] &= ~o.words_[w];
        return r;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (int w = 0; w < kSetWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }

    ElementSet& operator&=(const ElementSet& o) {
        for (int w = 0; w < kSetWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }

    ElementSet complement() const {
        ElementSet r(universe_);
        for (int w = 0; w < kSetWords; ++w) r.words_[w] = ~words_[w];
        r.trim();
        return r;
    }

    bool operator==(const ElementSet& o) const {
        return words_ == o.words_ && universe_ == o.universe_;
    }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }

    /// Element-sequence order: the lowest element on which two sets differ
    /// belongs to the smaller set. {0,3} < {1,2}, {0,1} < {0,2}.
    static bool lex_less(const ElementSet& a, const ElementSet& b) {
        for (int w = 0; w < kSetWords; ++w) {
            std::uint64_t d = a.words_[w] ^ b.words_[w];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return (a.words_[w] & low) != 0;
            }
        }
        return false;
    }

    /// Report order: ascending cardinality, then lex_less.
    struct CanonicalLess {
        bool operator()(const ElementSet& a, const ElementSet& b) const {
            int ca = a.count(), cb = b.count();
            if (ca != cb) return ca < cb;
            return lex_less(a, b);
        }
    };

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < kSetWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int i = w * 64 + std::countr_zero(bits);
                f(i);
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::uint64_t word(int w) const { return words_[w]; }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(universe_);
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    void trim() {
        if (universe_ == 0) {
            words_.fill(0);
            return;
        }
        int last = (universe_ - 1) >> 6;
        int used = universe_ - last * 64;
        if (used < 64) words_[last] &= (std::uint64_t{1} << used) - 1;
        for (int w = last + 1; w < kSetWords; ++w) words_[w] = 0;
    }

    std::array<std::uint64_t, kSetWords> words_{};
    int universe_ = 0;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace isofrag
