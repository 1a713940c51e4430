#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polytc {

// A subset of {1,...,15}, element j stored at bit j-1. Small enough to pass
// by value everywhere; iteration yields elements in increasing order.
struct SubsetMask {
    std::uint32_t bits = 0;

    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint32_t raw) : bits(raw) {}

    static SubsetMask of(std::initializer_list<int> elems) {
        SubsetMask s;
        for (int e : elems) s = s.with(e);
        return s;
    }
    // {1,...,k}
    static constexpr SubsetMask interval(int k) {
        return SubsetMask((k <= 0) ? 0u : ((1u << k) - 1u));
    }

    constexpr bool contains(int e) const { return e >= 1 && (bits >> (e - 1)) & 1u; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }

    constexpr SubsetMask with(int e) const {
        if (e < 1 || e > 15) throw std::invalid_argument("SubsetMask element out of range 1..15");
        return SubsetMask(bits | (1u << (e - 1)));
    }
    constexpr SubsetMask without(int e) const {
        return SubsetMask(e >= 1 ? bits & ~(1u << (e - 1)) : bits);
    }
    constexpr SubsetMask unite(SubsetMask o) const { return SubsetMask(bits | o.bits); }
    constexpr SubsetMask intersect(SubsetMask o) const { return SubsetMask(bits & o.bits); }
    constexpr SubsetMask minus(SubsetMask o) const { return SubsetMask(bits & ~o.bits); }
    constexpr bool disjoint_from(SubsetMask o) const { return (bits & o.bits) == 0; }
    constexpr bool subset_of(SubsetMask o) const { return (bits & ~o.bits) == 0; }

    int smallest() const {
        if (empty()) throw std::domain_error("smallest() of empty set");
        return std::countr_zero(bits) + 1;
    }
    int largest() const {
        if (empty()) throw std::domain_error("largest() of empty set");
        return std::bit_width(bits);
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }
    std::vector<int> elements_desc() const {
        auto v = elements();
        return std::vector<int>(v.rbegin(), v.rend());
    }

    friend constexpr bool operator==(SubsetMask a, SubsetMask b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(SubsetMask a, SubsetMask b) { return a.bits != b.bits; }
    friend constexpr bool operator<(SubsetMask a, SubsetMask b) { return a.bits < b.bits; }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ',';
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }
};

// Dominance order: S <= T iff T contains elementwise-larger representatives
// for S. Tested greedily by pairing i-th largest elements; equivalent to the
// existential definition because the sorted pairing is the easiest witness.
inline bool dominates(SubsetMask s, SubsetMask t) {
    if (s.size() > t.size()) return false;
    std::uint32_t sb = s.bits, tb = t.bits;
    while (sb) {
        const int se = std::bit_width(sb);   // largest remaining element of S
        const int te = std::bit_width(tb);
        if (te < se) return false;
        sb &= ~(1u << (se - 1));
        tb &= ~(1u << (te - 1));
    }
    return true;
}

inline bool strictly_dominates(SubsetMask s, SubsetMask t) {
    return s != t && dominates(s, t);
}

}  // namespace polytc
