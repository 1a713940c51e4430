#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace polytc {

// Fixed-width GF(2) row vector. 512 columns cover every monomial basis this
// library builds (largest subgee family encountered is 256, at the size-six
// monogenic sweep's widest admissible gee).
struct Gf2Vec {
    static constexpr int kWords = 8;
    static constexpr int kBits = kWords * 64;
    std::array<std::uint64_t, kWords> w{};

    bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
    void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }
    void flip(int i) { w[static_cast<std::size_t>(i >> 6)] ^= 1ull << (i & 63); }

    Gf2Vec& operator^=(const Gf2Vec& o) {
        for (int i = 0; i < kWords; ++i) w[static_cast<std::size_t>(i)] ^= o.w[static_cast<std::size_t>(i)];
        return *this;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    // First set column at or after `from`, -1 if none.
    int first_set(int from = 0) const {
        for (int wi = from >> 6; wi < kWords; ++wi) {
            std::uint64_t x = w[static_cast<std::size_t>(wi)];
            if (wi == (from >> 6)) x &= ~0ull << (from & 63);
            if (x) return (wi << 6) + std::countr_zero(x);
        }
        return -1;
    }
    // Parity of the intersection with another row.
    int dot(const Gf2Vec& o) const {
        std::uint64_t acc = 0;
        for (int i = 0; i < kWords; ++i) acc ^= w[static_cast<std::size_t>(i)] & o.w[static_cast<std::size_t>(i)];
        return std::popcount(acc) & 1;
    }
    friend bool operator==(const Gf2Vec& a, const Gf2Vec& b) { return a.w == b.w; }
};

// Reduced row-echelon basis of a GF(2) row space, kept fully back-eliminated
// so reduce() is a single pass and canonical forms vanish on pivot columns.
class Gf2Echelon {
  public:
    // Inserts a row; returns true if it enlarged the span.
    bool add(Gf2Vec v) {
        reduce(v);
        const int p = v.first_set();
        if (p < 0) return false;
        for (auto& r : rows_)
            if (r.test(p)) r ^= v;
        std::size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), v);
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    void reduce(Gf2Vec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.test(pivots_[i])) v ^= rows_[i];
    }
    Gf2Vec reduced(Gf2Vec v) const {
        reduce(v);
        return v;
    }
    bool in_span(Gf2Vec v) const { return reduced(v).none(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<Gf2Vec>& rows() const { return rows_; }

  private:
    std::vector<Gf2Vec> rows_;
    std::vector<int> pivots_;  // ascending, parallel to rows_
};

}  // namespace polytc
