#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytc/length_vector.hpp"
#include "polytc/subsets.hpp"

namespace polytc {

// Genetic code of an n-gon space: n together with the antichain of gees
// (dominance-maximal subsets S of {1,...,n-1} such that S+{n} is short).
// Construction validates the antichain structure; admissibility is a
// separate, stronger predicate (see is_admissible).
struct GeneticCode {
    int n = 0;
    std::vector<SubsetMask> gees;  // sorted ascending by mask value, deduplicated

    GeneticCode() = default;
    GeneticCode(int n_, std::vector<SubsetMask> gees_) : n(n_), gees(std::move(gees_)) {
        if (n < 3) throw std::invalid_argument("GeneticCode: n must be at least 3");
        if (n > 16) throw std::invalid_argument("GeneticCode: n > 16 unsupported");
        if (gees.empty()) throw std::invalid_argument("GeneticCode: a code has at least one gene");
        std::sort(gees.begin(), gees.end());
        gees.erase(std::unique(gees.begin(), gees.end()), gees.end());
        for (const auto& g : gees)
            if (!g.empty() && g.largest() >= n)
                throw std::invalid_argument("GeneticCode: gee element must be below n");
        for (std::size_t i = 0; i < gees.size(); ++i)
            for (std::size_t j = 0; j < gees.size(); ++j)
                if (i != j && dominates(gees[i], gees[j]))
                    throw std::invalid_argument("GeneticCode: gees must form an antichain");
    }

    int m() const { return n - 3; }
    bool is_projective() const { return gees.size() == 1 && gees[0].empty(); }
    bool is_torus() const { return gees.size() == 1 && gees[0] == SubsetMask::interval(n - 3); }

    friend bool operator==(const GeneticCode& a, const GeneticCode& b) {
        return a.n == b.n && a.gees == b.gees;
    }
    friend bool operator!=(const GeneticCode& a, const GeneticCode& b) { return !(a == b); }
};

// The downward closure of the gees: all S <= some gee, with O(1) membership.
class SubgeeFamily {
  public:
    SubgeeFamily(int n, const std::vector<SubsetMask>& gees) : n_(n) {
        const std::uint32_t lim = 1u << (n - 1);
        member_.assign(lim, 0);
        for (std::uint32_t mask = 0; mask < lim; ++mask)
            for (const auto& g : gees)
                if (dominates(SubsetMask(mask), g)) {
                    member_[mask] = 1;
                    break;
                }
        for (std::uint32_t mask = 0; mask < lim; ++mask)
            if (member_[mask]) sorted_.push_back(SubsetMask(mask));
        std::sort(sorted_.begin(), sorted_.end(), [](SubsetMask a, SubsetMask b) {
            return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
        });
    }
    explicit SubgeeFamily(const GeneticCode& code) : SubgeeFamily(code.n, code.gees) {}

    bool contains(SubsetMask s) const {
        return s.bits < member_.size() && member_[s.bits] != 0;
    }
    int size() const { return static_cast<int>(sorted_.size()); }
    // Subgees ordered by (size, mask value); prefixes of this list are the
    // monomial bases used by the cohomology module.
    const std::vector<SubsetMask>& sorted() const { return sorted_; }
    int n() const { return n_; }

  private:
    int n_;
    std::vector<std::uint8_t> member_;
    std::vector<SubsetMask> sorted_;
};

inline SubgeeFamily subgees(const GeneticCode& code) { return SubgeeFamily(code); }

namespace detail {

// Whether {1,...,n} splits into T <= a and complement <= b (dominance on
// subsets of {1,...,n}). Both sets being short is impossible for complementary
// sets, so any such split witnesses an unrealizable collection of genes.
// DP over elements taken in decreasing order; state = elements given to T.
inline bool complement_split_exists(int n, SubsetMask a, SubsetMask b) {
    const auto ad = a.elements_desc();
    const auto bd = b.elements_desc();
    std::uint32_t states = 1;  // bit i: |T so far| == i
    for (int e = n; e >= 1; --e) {
        const int processed = n - e;
        std::uint32_t next = 0;
        for (int i = 0; i <= processed; ++i) {
            if (!((states >> i) & 1u)) continue;
            if (i < static_cast<int>(ad.size()) && e <= ad[static_cast<std::size_t>(i)])
                next |= 1u << (i + 1);
            const int j = processed - i;
            if (j < static_cast<int>(bd.size()) && e <= bd[static_cast<std::size_t>(j)])
                next |= 1u << i;
        }
        if (!next) return false;
        states = next;
    }
    return states != 0;
}

inline SubsetMask gene_of(int n, SubsetMask gee) { return gee.with(n); }

}  // namespace detail

// A gee collection is admissible when it is an antichain over {1,...,n-1} and
// no two (possibly equal) genes admit a complementary pair inside the
// dominance closure of the genes over {1,...,n}. The complement condition is
// necessary for realizability: complementary sets cannot both be short.
inline bool is_admissible(int n, const std::vector<SubsetMask>& gees) {
    if (n < 3 || gees.empty()) return false;
    for (const auto& g : gees)
        if (!g.empty() && g.largest() >= n) return false;
    for (std::size_t i = 0; i < gees.size(); ++i)
        for (std::size_t j = 0; j < gees.size(); ++j)
            if (i != j && dominates(gees[i], gees[j])) return false;
    for (std::size_t i = 0; i < gees.size(); ++i)
        for (std::size_t j = i; j < gees.size(); ++j)
            if (detail::complement_split_exists(n, detail::gene_of(n, gees[i]),
                                                detail::gene_of(n, gees[j])))
                return false;
    return true;
}

inline bool is_admissible(const GeneticCode& code) { return is_admissible(code.n, code.gees); }

// Genetic code of a generic length vector: dominance-maximal short sets
// containing n, with n dropped.
inline GeneticCode genetic_code(const LengthVector& l) {
    if (!is_generic(l)) throw std::domain_error("genetic_code: length vector is not generic");
    const int n = l.n();
    const auto vals = detail::common_denominator_values(l);
    BigInt total = 0;
    for (const auto& v : vals) total += v;

    const std::uint32_t lim = 1u << (n - 1);
    std::vector<BigInt> sum(lim);
    std::vector<std::uint8_t> shortf(lim);
    sum[0] = 0;
    shortf[0] = (2 * vals[static_cast<std::size_t>(n - 1)] < total) ? 1 : 0;
    for (std::uint32_t mask = 1; mask < lim; ++mask) {
        const std::uint32_t low = mask & (mask - 1);
        sum[mask] = sum[low] + vals[static_cast<std::size_t>(std::countr_zero(mask))];
        shortf[mask] = (2 * (sum[mask] + vals[static_cast<std::size_t>(n - 1)]) < total) ? 1 : 0;
    }

    // Maximal members of a downward-closed family: no elementary up-move
    // (adjoin 1, or bump an element by one) stays inside.
    std::vector<SubsetMask> gees;
    for (std::uint32_t mask = 0; mask < lim; ++mask) {
        if (!shortf[mask]) continue;
        const SubsetMask s(mask);
        bool maximal = true;
        if (!s.contains(1) && shortf[s.with(1).bits]) maximal = false;
        for (int e : s.elements()) {
            if (!maximal) break;
            if (e + 1 <= n - 1 && !s.contains(e + 1) && shortf[s.without(e).with(e + 1).bits])
                maximal = false;
        }
        if (maximal) gees.push_back(s);
    }
    return GeneticCode(n, std::move(gees));
}

// All admissible genetic codes for a given n, in ascending candidate order.
// DFS over dominance-maximal gene candidates; complement violations only grow
// with the antichain, so pruning is exact.
inline std::vector<GeneticCode> enumerate_codes(int n) {
    if (n < 4 || n > 9) throw std::out_of_range("enumerate_codes: supported range is 4 <= n <= 9");
    std::vector<GeneticCode> out;
    out.emplace_back(n, std::vector<SubsetMask>{SubsetMask{}});  // the code <{n}>

    const std::uint32_t lim = 1u << (n - 1);
    std::vector<SubsetMask> cand;
    for (std::uint32_t mask = 1; mask < lim; ++mask) {
        const SubsetMask s(mask);
        if (!detail::complement_split_exists(n, detail::gene_of(n, s), detail::gene_of(n, s)))
            cand.push_back(s);
    }
    const std::size_t c = cand.size();
    std::vector<std::uint8_t> dom(c * c), viol(c * c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            dom[i * c + j] = dominates(cand[i], cand[j]) ? 1 : 0;
            viol[i * c + j] =
                detail::complement_split_exists(n, detail::gene_of(n, cand[i]),
                                                detail::gene_of(n, cand[j]))
                    ? 1
                    : 0;
        }

    std::vector<std::size_t> chosen;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < c; ++i) {
            bool ok = true;
            for (std::size_t g : chosen) {
                // Candidates ascend in mask value, so cand[i] <= cand[g] is
                // already impossible; only the other direction needs a check.
                if (dom[g * c + i] || viol[g * c + i]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(i);
            std::vector<SubsetMask> gees;
            gees.reserve(chosen.size());
            for (std::size_t g : chosen) gees.push_back(cand[g]);
            out.emplace_back(n, std::move(gees));
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

// ---- gene-string grammar ----------------------------------------------
// A gene is written with symbols {1..9, T=10, E=11} in strictly decreasing
// order, e.g. "86321"; codes with n >= 12 use the form "{12,9,3}". Genes are
// joined by ';' and each starts with n.

namespace detail {

inline char symbol_for(int v) {
    if (v >= 1 && v <= 9) return static_cast<char>('0' + v);
    if (v == 10) return 'T';
    if (v == 11) return 'E';
    throw std::invalid_argument("gene symbol out of range");
}
inline int value_of_symbol(char c) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c == 'T') return 10;
    if (c == 'E') return 11;
    throw std::invalid_argument(std::string("bad gene symbol '") + c + "'");
}

inline std::vector<int> parse_gene_token(const std::string& tok) {
    std::vector<int> vals;
    if (tok.empty()) throw std::invalid_argument("empty gene");
    if (tok.front() == '{') {
        if (tok.back() != '}') throw std::invalid_argument("unterminated '{' in gene");
        std::string body = tok.substr(1, tok.size() - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t next = body.find(',', pos);
            if (next == std::string::npos) next = body.size();
            const std::string piece = body.substr(pos, next - pos);
            if (piece.empty()) throw std::invalid_argument("empty element in gene");
            vals.push_back(std::stoi(piece));
            pos = next + 1;
        }
    } else {
        for (char ch : tok) vals.push_back(value_of_symbol(ch));
    }
    for (std::size_t i = 0; i + 1 < vals.size(); ++i)
        if (vals[i] <= vals[i + 1])
            throw std::invalid_argument("gene symbols must be strictly decreasing");
    if (vals.empty() || vals.front() < 3) throw std::invalid_argument("gene needs leading n >= 3");
    if (vals.back() < 1) throw std::invalid_argument("gene elements must be positive");
    return vals;
}

}  // namespace detail

inline GeneticCode parse_code(const std::string& text) {
    std::vector<std::vector<int>> genes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(';', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        while (!tok.empty() && (tok.front() == ' ')) tok.erase(tok.begin());
        while (!tok.empty() && (tok.back() == ' ')) tok.pop_back();
        if (!tok.empty()) genes.push_back(detail::parse_gene_token(tok));
        pos = next + 1;
        if (next == text.size()) break;
    }
    if (genes.empty()) throw std::invalid_argument("no genes in code string");
    const int n = genes.front().front();
    std::vector<SubsetMask> gees;
    for (const auto& g : genes) {
        if (g.front() != n)
            throw std::invalid_argument("all genes must share the same leading n");
        SubsetMask s;
        for (std::size_t i = 1; i < g.size(); ++i) s = s.with(g[i]);
        gees.push_back(s);
    }
    return GeneticCode(n, std::move(gees));
}

inline std::string format_code(const GeneticCode& code) {
    const bool compact = code.n <= 11;
    std::string out;
    for (std::size_t gi = 0; gi < code.gees.size(); ++gi) {
        if (gi) out += ';';
        if (compact) {
            out += detail::symbol_for(code.n);
            for (int e : code.gees[gi].elements_desc()) out += detail::symbol_for(e);
        } else {
            out += '{' + std::to_string(code.n);
            for (int e : code.gees[gi].elements_desc()) out += ',' + std::to_string(e);
            out += '}';
        }
    }
    return out;
}

}  // namespace polytc
