#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "rmideal/errors.hpp"
#include "rmideal/events.hpp"
#include "rmideal/graph.hpp"
#include "rmideal/numeric.hpp"
#include "rmideal/parallel.hpp"
#include "rmideal/patterns.hpp"

namespace rmideal {

/// Exact finite-n quantity sum_m c_m p^m q^(M-m), M = C(n,2), with c_m an
/// integer (a count of labelled graphs, or a sum of counts over them).
class ProbPolynomial {
public:
    ProbPolynomial() = default;
    ProbPolynomial(std::size_t n, std::vector<BigInt> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != pair_count() + 1) {
            throw ParameterError("polynomial for n=" + std::to_string(n) + " needs " + std::to_string(pair_count() + 1) +
                                 " coefficients, got " + std::to_string(coeffs_.size()));
        }
    }

    /// c_m = C(M, m): the certain event.
    static ProbPolynomial all_graphs(std::size_t n) {
        const std::size_t m = n * (n - 1) / 2;
        std::vector<BigInt> c(m + 1);
        for (std::size_t k = 0; k <= m; ++k) c[k] = binomial_exact(m, k);
        return {n, std::move(c)};
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t pair_count() const noexcept { return n_ * (n_ - 1) / 2; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    double evaluate(double p) const {
        if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0,1]");
        const std::size_t m = pair_count();
        CompensatedSum sum;
        for (std::size_t k = 0; k <= m; ++k) {
            if (coeffs_[k] == 0) continue;
            sum.add(coeffs_[k].convert_to<double>() * std::pow(p, static_cast<double>(k)) *
                    std::pow(1.0 - p, static_cast<double>(m - k)));
        }
        return sum.value();
    }

    Rational evaluate_exact(const Rational& p) const {
        if (p < 0 || p > 1) throw ParameterError("p must lie in [0,1]");
        const std::size_t m = pair_count();
        const Rational q = Rational(1) - p;
        Rational sum = 0;
        for (std::size_t k = 0; k <= m; ++k) {
            if (coeffs_[k] == 0) continue;
            sum += Rational(coeffs_[k]) * ipow(p, k) * ipow(q, m - k);
        }
        return sum;
    }

    friend ProbPolynomial operator+(const ProbPolynomial& a, const ProbPolynomial& b) {
        check_same(a, b);
        std::vector<BigInt> c(a.coeffs_.size());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
        return {a.n_, std::move(c)};
    }

    friend ProbPolynomial operator-(const ProbPolynomial& a, const ProbPolynomial& b) {
        check_same(a, b);
        std::vector<BigInt> c(a.coeffs_.size());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs_[k] - b.coeffs_[k];
        return {a.n_, std::move(c)};
    }

    /// c_m -> c_{M-m}: the polynomial of the same event on complement graphs.
    ProbPolynomial reversed() const {
        std::vector<BigInt> c(coeffs_.rbegin(), coeffs_.rend());
        return {n_, std::move(c)};
    }

    friend bool operator==(const ProbPolynomial&, const ProbPolynomial&) = default;

private:
    static void check_same(const ProbPolynomial& a, const ProbPolynomial& b) {
        if (a.n_ != b.n_) throw ParameterError("polynomials over different n");
    }

    std::size_t n_ = 0;
    std::vector<BigInt> coeffs_{BigInt(1)};
};

struct OracleLimits {
    std::size_t cap = 7;          // 2^21 labelled graphs
    bool allow_eight = false;     // n = 8 (2^28 graphs) only when explicitly requested
    std::size_t jobs = 0;         // 0 = hardware concurrency
};

inline constexpr std::size_t kOracleHardMax = 8;

inline void check_oracle_size(std::size_t n, const OracleLimits& limits) {
    const bool over_cap = n > limits.cap && !(n == 8 && limits.allow_eight);
    if (n > kOracleHardMax || over_cap) {
        throw ResourceError("exhaustive enumeration at n=" + std::to_string(n) + " exceeds the cap n=" +
                            std::to_string(limits.cap) + (n == 8 ? " (pass the n=8 override to allow it)" : ""));
    }
}

/// Labelled graph whose edge set is `mask`; bit i is the i-th pair (u<v) in
/// lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1U) g.add_edge(u, v);
        }
    }
    return g;
}

/// Sums weight(G) over every labelled graph on n vertices, bucketed by edge
/// count. Mask ranges are processed independently and merged by addition.
inline ProbPolynomial enumerate_weighted(std::size_t n, const std::function<std::uint64_t(const Graph&)>& weight,
                                         const OracleLimits& limits = {}) {
    check_oracle_size(n, limits);
    const std::size_t m = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << m;
    const auto partials = parallel_chunks(total, limits.jobs, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> local(m + 1, 0);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            local[static_cast<std::size_t>(std::popcount(mask))] += weight(graph_from_mask(n, mask));
        }
        return local;
    });
    std::vector<BigInt> coeffs(m + 1, BigInt(0));
    for (const auto& part : partials) {
        for (std::size_t k = 0; k <= m; ++k) coeffs[k] += part[k];
    }
    return {n, std::move(coeffs)};
}

/// c_m = number of labelled graphs with m edges satisfying `event`.
inline ProbPolynomial enumerate_event(std::size_t n, const EventSpec& event, const OracleLimits& limits = {}) {
    return enumerate_weighted(n, [&](const Graph& g) -> std::uint64_t { return event(g) ? 1 : 0; }, limits);
}

/// Exact E[Y_pat^power]: e_m = sum over m-edge graphs of Y_pat(G)^power.
inline ProbPolynomial enumerate_moment(std::size_t n, const PatternGraph& pat, unsigned power,
                                       const OracleLimits& limits = {}) {
    return enumerate_weighted(
        n,
        [&](const Graph& g) {
            const std::uint64_t y = count_induced(g, pat);
            std::uint64_t r = 1;
            for (unsigned i = 0; i < power; ++i) r *= y;
            return r;
        },
        limits);
}

inline ProbPolynomial enumerate_expectation(std::size_t n, const PatternGraph& pat, const OracleLimits& limits = {}) {
    return enumerate_moment(n, pat, 1, limits);
}

/// Isomorphism by trying every vertex permutation (after cheap invariants).
inline bool isomorphic_brute_force(const Graph& a, const Graph& b) {
    const std::size_t n = a.order();
    if (n != b.order() || a.size() != b.size()) return false;
    std::vector<std::size_t> da(n), db(n);
    for (Vertex v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::vector<std::size_t> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u) {
            if (da[u] != db[perm[u]]) {
                ok = false;
                break;
            }
            for (Vertex v = u + 1; v < n; ++v) {
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Number of labelled graphs on k vertices isomorphic to pat (= k!/|Aut|),
/// by enumerating all 2^C(k,2) graphs.
inline std::uint64_t count_labeled_copies(const PatternGraph& pat, std::size_t k) {
    if (k != pat.order()) {
        throw ParameterError("pattern " + pat.name() + " has " + std::to_string(pat.order()) + " vertices, not " +
                             std::to_string(k));
    }
    if (k > kOracleHardMax) throw ResourceError("labelled copy count limited to k <= 8");
    const Graph target = pat.graph();
    const std::size_t m = k * (k - 1) / 2;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != target.size()) continue;
        if (isomorphic_brute_force(graph_from_mask(k, mask), target)) ++count;
    }
    return count;
}

}  // namespace rmideal
