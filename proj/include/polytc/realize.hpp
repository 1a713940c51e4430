#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polytc/genetic_code.hpp"
#include "polytc/length_vector.hpp"

namespace polytc {

namespace fm {

// Homogeneous constraint sum(coef[i] * x[i]) > 0 (strict) or >= 0.
struct Constraint {
    std::vector<Rational> coef;
    bool strict = false;
};

namespace detail {

// Scale so the largest |coefficient| is 1. Returns false for the zero row.
inline bool normalize_row(Constraint& c) {
    Rational maxabs = 0;
    for (const auto& q : c.coef)
        if (abs(q) > maxabs) maxabs = abs(q);
    if (maxabs == 0) return false;
    for (auto& q : c.coef) q /= maxabs;
    return true;
}

// Drops trivial rows and duplicates; nullopt when a row reads 0 > 0.
inline std::optional<std::vector<Constraint>> prune_rows(std::vector<Constraint> cs) {
    std::vector<Constraint> out;
    for (auto& c : cs) {
        if (!normalize_row(c)) {
            if (c.strict) return std::nullopt;
            continue;
        }
        bool dup = false;
        for (auto& o : out)
            if (o.coef == c.coef) {
                o.strict = o.strict || c.strict;
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace detail

// Exact Fourier-Motzkin feasibility for a homogeneous strict/non-strict
// system. Returns a satisfying rational point, or nullopt when infeasible.
inline std::optional<std::vector<Rational>> feasible_point(std::vector<Constraint> cons,
                                                           int nvars) {
    std::vector<int> order;
    std::vector<std::vector<Constraint>> levels;
    std::vector<bool> eliminated(static_cast<std::size_t>(nvars), false);

    auto pruned = detail::prune_rows(std::move(cons));
    if (!pruned) return std::nullopt;
    cons = std::move(*pruned);

    for (int step = 0; step < nvars; ++step) {
        int best = -1;
        long long best_cost = 0;
        for (int v = 0; v < nvars; ++v) {
            if (eliminated[static_cast<std::size_t>(v)]) continue;
            long long pos = 0, neg = 0;
            for (const auto& c : cons) {
                const auto& q = c.coef[static_cast<std::size_t>(v)];
                if (q > 0) ++pos;
                else if (q < 0) ++neg;
            }
            const long long cost = pos * neg;
            if (best < 0 || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        order.push_back(best);
        levels.push_back(cons);
        eliminated[static_cast<std::size_t>(best)] = true;

        std::vector<Constraint> next;
        std::vector<const Constraint*> pos, neg;
        for (const auto& c : cons) {
            const auto& q = c.coef[static_cast<std::size_t>(best)];
            if (q > 0) pos.push_back(&c);
            else if (q < 0) neg.push_back(&c);
            else next.push_back(c);
        }
        for (const auto* p : pos)
            for (const auto* g : neg) {
                Constraint comb;
                comb.coef.resize(static_cast<std::size_t>(nvars));
                const Rational pc = p->coef[static_cast<std::size_t>(best)];
                const Rational gc = -g->coef[static_cast<std::size_t>(best)];
                for (int v = 0; v < nvars; ++v)
                    comb.coef[static_cast<std::size_t>(v)] =
                        gc * p->coef[static_cast<std::size_t>(v)] +
                        pc * g->coef[static_cast<std::size_t>(v)];
                comb.strict = p->strict || g->strict;
                next.push_back(std::move(comb));
            }
        auto ok = detail::prune_rows(std::move(next));
        if (!ok) return std::nullopt;
        cons = std::move(*ok);
    }

    // Back-substitute, picking interior values.
    std::vector<Rational> x(static_cast<std::size_t>(nvars), 0);
    for (int step = nvars - 1; step >= 0; --step) {
        const int v = order[static_cast<std::size_t>(step)];
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rational lo = 0, hi = 0;
        for (const auto& c : levels[static_cast<std::size_t>(step)]) {
            const Rational& cv = c.coef[static_cast<std::size_t>(v)];
            if (cv == 0) continue;
            Rational rest = 0;
            for (int u = 0; u < nvars; ++u)
                if (u != v)
                    rest += c.coef[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(u)];
            const Rational bound = -rest / cv;
            if (cv > 0) {
                if (!has_lo || bound > lo) {
                    lo = bound;
                    lo_strict = c.strict;
                } else if (bound == lo) {
                    lo_strict = lo_strict || c.strict;
                }
                has_lo = true;
            } else {
                if (!has_hi || bound < hi) {
                    hi = bound;
                    hi_strict = c.strict;
                } else if (bound == hi) {
                    hi_strict = hi_strict || c.strict;
                }
                has_hi = true;
            }
        }
        Rational val;
        if (has_lo && has_hi) {
            if (lo > hi || (lo == hi && (lo_strict || hi_strict)))
                throw std::logic_error("fourier-motzkin: inconsistent bounds after elimination");
            val = (lo == hi) ? lo : (lo + hi) / 2;
        } else if (has_lo) {
            val = lo_strict ? lo + 1 : lo;
        } else if (has_hi) {
            val = hi_strict ? hi - 1 : hi;
        } else {
            val = 1;
        }
        x[static_cast<std::size_t>(v)] = val;
    }
    return x;
}

}  // namespace fm

namespace detail {

// Dominance-minimal non-subgees: every elementary down-move (drop an element,
// or lower one by one) lands inside the family.
inline std::vector<SubsetMask> minimal_non_subgees(const SubgeeFamily& fam) {
    const int n = fam.n();
    const std::uint32_t lim = 1u << (n - 1);
    std::vector<SubsetMask> out;
    for (std::uint32_t mask = 1; mask < lim; ++mask) {
        const SubsetMask s(mask);
        if (fam.contains(s)) continue;
        bool minimal = true;
        for (int e : s.elements()) {
            if (!fam.contains(s.without(e))) {
                minimal = false;
                break;
            }
            if (e > 1 && !s.contains(e - 1) && !fam.contains(s.without(e).with(e - 1))) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(s);
    }
    return out;
}

}  // namespace detail

// Integer length vector realizing the code, with odd total (hence generic),
// or nullopt when no length vector has this genetic code. Short constraints
// are imposed on the genes, long constraints on the dominance-minimal
// non-subgees; the system is solved exactly and the result round-trip checked.
inline std::optional<LengthVector> realize(const GeneticCode& code) {
    if (!is_admissible(code)) return std::nullopt;
    const int n = code.n;
    const SubgeeFamily fam(code);

    std::vector<fm::Constraint> cons;
    auto zero = [&] { return std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)); };
    {
        fm::Constraint c;  // x_1 > 0
        c.coef = zero();
        c.coef[0] = 1;
        c.strict = true;
        cons.push_back(std::move(c));
    }
    for (int i = 1; i < n; ++i) {  // x_{i+1} - x_i >= 0
        fm::Constraint c;
        c.coef = zero();
        c.coef[static_cast<std::size_t>(i)] = 1;
        c.coef[static_cast<std::size_t>(i - 1)] = -1;
        cons.push_back(std::move(c));
    }
    auto side_constraint = [&](SubsetMask s, bool short_side) {
        // short: sum over the complement of S u {n} beats sum over S u {n}.
        fm::Constraint c;
        c.coef = zero();
        for (int i = 1; i <= n; ++i) {
            const bool in = (i == n) || s.contains(i);
            c.coef[static_cast<std::size_t>(i - 1)] = (in == short_side) ? -1 : 1;
        }
        c.strict = true;
        cons.push_back(std::move(c));
    };
    for (const auto& g : code.gees) side_constraint(g, true);
    for (const auto& s : detail::minimal_non_subgees(fam)) side_constraint(s, false);

    auto point = fm::feasible_point(std::move(cons), n);
    if (!point) return std::nullopt;

    // Clear denominators and reduce; if the total is even, double everything
    // and bump the top entry, which keeps every inequality strict.
    BigInt lcm = 1;
    for (const auto& q : *point)
        lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(q)));
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& q : *point) {
        BigInt v = BigInt(boost::multiprecision::numerator(q)) *
                   (lcm / BigInt(boost::multiprecision::denominator(q)));
        ints.push_back(v);
        g = boost::multiprecision::gcd(g, v);
    }
    BigInt total = 0;
    for (auto& v : ints) {
        v /= g;
        total += v;
    }
    if (total % 2 == 0) {
        for (auto& v : ints) v *= 2;
        ints.back() += 1;
    }

    std::vector<Rational> lens(ints.begin(), ints.end());
    LengthVector result{std::move(lens)};
    if (genetic_code(result) != code)
        throw std::logic_error("realize: feasible point does not reproduce the code");
    return result;
}

// Reduces an equivalent integer vector until l_n + l_{n-1} <= l_1+...+l_{n-2}+1,
// preserving the genetic code. Moves, applied while the bound fails:
//   (a) l_{n-1} > l_{n-2}: lower the two largest by one;
//   (b) l_n above an equal block l_{n-1} = ... = l_{n-t}: lower the block by
//       one each and l_n by t;
//   (c) three largest equal: lower them by two each.
inline LengthVector normalize(const LengthVector& l) {
    if (!l.is_integral()) throw std::domain_error("normalize: integer entries required");
    if (!is_generic(l)) throw std::domain_error("normalize: generic vector required");
    const GeneticCode before = genetic_code(l);
    std::vector<BigInt> v = l.integral_lengths();
    const std::size_t n = v.size();
    auto head_sum = [&] {
        BigInt s = 0;
        for (std::size_t i = 0; i + 2 < n; ++i) s += v[i];
        return s;
    };
    while (v[n - 1] + v[n - 2] > head_sum() + 1) {
        const BigInt below = (n >= 4) ? v[n - 4] : BigInt(0);
        if (v[n - 2] > ((n >= 4) ? v[n - 3] : BigInt(0))) {
            v[n - 1] -= 1;
            v[n - 2] -= 1;
        } else if (v[n - 1] > v[n - 2]) {
            std::size_t t = 2;
            while (t + 1 < n + 1 && n >= t + 2 && v[n - 1 - (t + 1)] == v[n - 2]) ++t;
            for (std::size_t j = 2; j <= t + 0; ++j) v[n - j] -= 1;
            v[n - 1] -= static_cast<long long>(t) - 0;
        } else {
            v[n - 1] -= 2;
            v[n - 2] -= 2;
            v[n - 3] -= 2;
        }
        (void)below;
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] <= 0) throw std::domain_error("normalize: reduction hit a nonpositive length");
            if (i > 0 && v[i] < v[i - 1])
                throw std::logic_error("normalize: reduction broke monotonicity");
        }
    }
    std::vector<Rational> lens(v.begin(), v.end());
    LengthVector out{std::move(lens)};
    if (genetic_code(out) != before) throw std::logic_error("normalize: genetic code changed");
    return out;
}

// One stabilization step: appends an edge while keeping the gees, producing
// (l_1,...,l_{n-1}, (|l|+1)/2 - l_n, (|l|+1)/2). Requires odd integer total
// and l_n + l_{n-1} <= l_1 + ... + l_{n-2} + 1.
inline LengthVector stabilize(const LengthVector& l) {
    if (!l.is_integral()) throw std::domain_error("stabilize: integer entries required");
    auto v = l.integral_lengths();
    const std::size_t n = v.size();
    BigInt total = 0, head = 0;
    for (std::size_t i = 0; i < n; ++i) total += v[i];
    for (std::size_t i = 0; i + 2 < n; ++i) head += v[i];
    if (total % 2 == 0) throw std::domain_error("stabilize: odd total required");
    if (v[n - 1] + v[n - 2] > head + 1)
        throw std::domain_error("stabilize: l_n + l_{n-1} <= l_1+...+l_{n-2}+1 required");
    const BigInt half = (total + 1) / 2;
    std::vector<Rational> out(v.begin(), v.end() - 1);
    out.emplace_back(half - v[n - 1]);
    out.emplace_back(half);
    return LengthVector{std::move(out)};
}

}  // namespace polytc
