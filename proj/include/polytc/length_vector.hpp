#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytc/subsets.hpp"

namespace polytc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Nondecreasing positive side lengths of an n-gon, exact rationals.
// Construction enforces the nonempty-space condition l_n < l_1 + ... + l_{n-1}.
class LengthVector {
  public:
    explicit LengthVector(std::vector<Rational> lengths) : len_(std::move(lengths)) {
        if (len_.size() < 3) throw std::invalid_argument("LengthVector: need n >= 3");
        if (len_.size() > 16) throw std::invalid_argument("LengthVector: n > 16 unsupported");
        Rational total = 0;
        for (std::size_t i = 0; i < len_.size(); ++i) {
            if (len_[i] <= 0) throw std::invalid_argument("LengthVector: lengths must be positive");
            if (i > 0 && len_[i] < len_[i - 1])
                throw std::invalid_argument("LengthVector: lengths must be nondecreasing");
            total += len_[i];
        }
        if (2 * len_.back() >= total)
            throw std::invalid_argument("LengthVector: empty moduli space (l_n >= sum of the rest)");
        total_ = total;
    }

    static LengthVector from_ints(const std::vector<long long>& v) {
        std::vector<Rational> r(v.begin(), v.end());
        return LengthVector(std::move(r));
    }

    int n() const { return static_cast<int>(len_.size()); }
    // 1-based access, matching subset element numbering.
    const Rational& at(int i) const { return len_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Rational>& lengths() const { return len_; }
    const Rational& total() const { return total_; }

    bool is_integral() const {
        for (const auto& q : len_)
            if (boost::multiprecision::denominator(q) != 1) return false;
        return true;
    }
    std::vector<BigInt> integral_lengths() const {
        if (!is_integral()) throw std::domain_error("LengthVector: not integral");
        std::vector<BigInt> out;
        out.reserve(len_.size());
        for (const auto& q : len_) out.push_back(boost::multiprecision::numerator(q));
        return out;
    }

    Rational subset_sum(SubsetMask s) const {
        Rational acc = 0;
        for (int e : s.elements()) acc += at(e);
        return acc;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < len_.size(); ++i) {
            if (i) out += ',';
            out += len_[i].str();
        }
        return out;
    }

  private:
    std::vector<Rational> len_;
    Rational total_;
};

namespace detail {
// Scaled integer lengths sharing a common denominator; subset sums on these
// are exact and cheap.
inline std::vector<BigInt> common_denominator_values(const LengthVector& l) {
    BigInt lcm = 1;
    for (const auto& q : l.lengths())
        lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(q)));
    std::vector<BigInt> vals;
    vals.reserve(static_cast<std::size_t>(l.n()));
    for (const auto& q : l.lengths())
        vals.push_back(BigInt(boost::multiprecision::numerator(q)) *
                       (lcm / BigInt(boost::multiprecision::denominator(q))));
    return vals;
}
}  // namespace detail

// Generic: no subset sums to exactly half the perimeter. Exact arithmetic;
// scans complement pairs via subsets not containing n.
inline bool is_generic(const LengthVector& l) {
    const int n = l.n();
    const auto vals = detail::common_denominator_values(l);
    BigInt total = 0;
    for (const auto& v : vals) total += v;
    const std::uint32_t lim = 1u << (n - 1);
    std::vector<BigInt> sum(lim);
    sum[0] = 0;
    for (std::uint32_t mask = 1; mask < lim; ++mask) {
        const std::uint32_t low = mask & (mask - 1);
        sum[mask] = sum[low] + vals[static_cast<std::size_t>(std::countr_zero(mask))];
        if (2 * sum[mask] == total) return false;
    }
    return true;
}

// Exact shortness test: sum over S strictly below the complementary sum.
// S is a subset of {1,...,n}. Requires a generic vector.
inline bool is_short(const LengthVector& l, SubsetMask s) {
    if (!s.empty() && s.largest() > l.n())
        throw std::invalid_argument("is_short: subset element exceeds n");
    if (!is_generic(l)) throw std::domain_error("is_short: length vector is not generic");
    return 2 * l.subset_sum(s) < l.total();
}

}  // namespace polytc
