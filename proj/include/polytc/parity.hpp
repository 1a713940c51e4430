#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polytc/subsets.hpp"

namespace polytc {

// C(n,k) mod 2 by Lucas: odd iff k's binary digits fit inside n's.
// Out of range (k<0 or k>n) gives 0; C(n,0)=1 for any n>=0.
inline int binom_mod2(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binom_mod2: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    return ((static_cast<std::uint64_t>(k) & static_cast<std::uint64_t>(n - k)) == 0) ? 1 : 0;
}

inline int floor_log2(std::int64_t x) {
    if (x <= 0) throw std::domain_error("floor_log2: x must be positive");
    return std::bit_width(static_cast<std::uint64_t>(x)) - 1;
}

struct TwoAdic {
    int nu;  // exponent of the largest power of 2 dividing x
    int lg;  // floor(log2(x))
};

inline TwoAdic two_adic(std::int64_t x) {
    if (x <= 0) throw std::domain_error("two_adic: x must be positive");
    return TwoAdic{std::countr_zero(static_cast<std::uint64_t>(x)),
                   floor_log2(x)};
}

using KTuple = std::vector<int>;

// Membership in the lattice-path set: every prefix sum of B is at most its
// length so far.
inline bool in_Sk(const KTuple& b) {
    long long sum = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        sum += b[j];
        if (sum > static_cast<long long>(j) + 1) return false;
    }
    return true;
}

// theta(J, g): component i counts elements of J in the half-open gap
// (g_{i+1}, g_i], with g_{k+1} = 0. g must be strictly decreasing positive.
inline KTuple theta(SubsetMask j, const std::vector<int>& g) {
    const int k = static_cast<int>(g.size());
    for (int i = 0; i + 1 < k; ++i)
        if (g[i] <= g[i + 1])
            throw std::invalid_argument("theta: g must be strictly decreasing");
    if (k > 0 && g.back() < 1) throw std::invalid_argument("theta: g must be positive");
    if (!j.empty() && (k == 0 || j.largest() > g.front()))
        throw std::domain_error("theta: element of J exceeds g_1");
    KTuple th(static_cast<std::size_t>(k), 0);
    for (int e : j.elements()) {
        for (int i = 0; i < k; ++i) {
            const int lo = (i + 1 < k) ? g[i + 1] : 0;
            if (lo < e && e <= g[i]) {
                ++th[static_cast<std::size_t>(i)];
                break;
            }
        }
    }
    return th;
}

}  // namespace polytc
