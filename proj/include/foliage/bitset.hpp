#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace foliage {

/// Fixed-universe bitset over [0, universe). Backs adjacency rows and vertex
/// subsets; sized at construction, never grows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int intersect_count(const Bitset& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }
    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    Bitset intersect(const Bitset& o) const {
        assert(n_ == o.n_);
        Bitset r(n_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }

    /// Lowest set bit, or -1 when empty.
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(64 * k + std::countr_zero(w_[k]));
        return -1;
    }

    /// Visits set bits in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                f(int(64 * k + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    /// Word 0; only meaningful for universes <= 64 (fast mask paths).
    uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    bool operator==(const Bitset&) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace foliage
