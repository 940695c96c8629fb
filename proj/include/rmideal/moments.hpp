#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "rmideal/errors.hpp"
#include "rmideal/numeric.hpp"
#include "rmideal/patterns.hpp"

// Closed-form first and second moment bounds for the induced-copy counts Y_T
// and Y_{E_t} under G(n,p), and the Markov / Chebyshev probability bounds
// built from them. Every function is a template over the scalar type: double
// for sweeps, Rational for exact comparisons against the enumeration oracle.
// The formulas are evaluated verbatim, including constants the oracle
// disagrees with (see expectation_two_triangles).

namespace rmideal {

namespace detail {

template <class Real>
void require_probability(const Real& p) {
    if (!(p >= Real(0) && p <= Real(1))) throw ParameterError("p must lie in [0,1]");
}

inline void require_order(std::size_t n, std::size_t min, const char* what) {
    if (n < min) throw ParameterError(std::string(what) + ": need n >= " + std::to_string(min) + ", got " + std::to_string(n));
}

}  // namespace detail

/// Closed-form E[Y_T] = C(n,6) C(6,3) p^6 q^9. The coefficient C(6,3) = 20
/// counts ordered triangle splits; the number of labelled copies of T on six
/// vertices is 10 (see count_labeled_copies).
template <class Real>
Real expectation_two_triangles(std::size_t n, const Real& p) {
    detail::require_order(n, 6, "E[Y_T]");
    detail::require_probability(p);
    const Real q = Real(1) - p;
    return binomial<Real>(n, 6) * Real(20) * ipow(p, 6) * ipow(q, 9);
}

/// The eight-term closed-form upper bound on Var(Y_T).
template <class Real>
Real variance_bound_two_triangles(std::size_t n, const Real& p) {
    detail::require_order(n, 6, "Var(Y_T) bound");
    detail::require_probability(p);
    const Real q = Real(1) - p;
    const Real m(static_cast<unsigned long long>(n));
    return ipow(m, 10) * ipow(p, 11) * ipow(q, 18) + ipow(m, 10) * ipow(p, 12) * ipow(q, 17) +
           ipow(m, 9) * ipow(p, 11) * ipow(q, 16) + ipow(m, 9) * ipow(p, 9) * ipow(q, 18) +
           ipow(m, 8) * ipow(p, 10) * ipow(q, 14) + ipow(m, 8) * ipow(p, 9) * ipow(q, 15) +
           ipow(m, 7) * ipow(p, 8) * ipow(q, 12) + ipow(m, 6) * ipow(p, 6) * ipow(q, 9);
}

/// Chebyshev lower bound on P(Y_T > 0), clamped to [0,1]:
/// 1 - Var bound / (400 C(n,6)^2 p^12 q^18).
template <class Real>
Real chebyshev_lb_two_triangles(std::size_t n, const Real& p) {
    detail::require_order(n, 6, "Chebyshev bound for T");
    detail::require_probability(p);
    if (p == Real(0) || p == Real(1)) throw ParameterError("Chebyshev bound for T needs 0 < p < 1");
    const Real q = Real(1) - p;
    const Real c = binomial<Real>(n, 6);
    const Real denom = Real(400) * c * c * ipow(p, 12) * ipow(q, 18);
    return clamp_unit(Real(Real(1) - variance_bound_two_triangles(n, p) / denom));
}

/// E[Y_{E_t}] = C(n,t) q^C(t,2).
template <class Real>
Real expectation_empty(std::size_t n, std::size_t t, const Real& p) {
    if (t < 2) throw ParameterError("E_t needs t > 1");
    if (n < t) throw ParameterError("E[Y_E_t]: need n >= t");
    detail::require_probability(p);
    return binomial<Real>(n, t) * ipow(Real(Real(1) - p), t * (t - 1) / 2);
}

namespace detail {

// sum_{j=2}^{t} 1 / (n^j q^C(j,2))
template <class Real>
Real overlap_sum(std::size_t n, std::size_t t, const Real& q) {
    Real s(0);
    const Real m(static_cast<unsigned long long>(n));
    for (std::size_t j = 2; j <= t; ++j) s += Real(1) / (ipow(m, j) * ipow(q, j * (j - 1) / 2));
    return s;
}

}  // namespace detail

/// n^{2t} q^{2C(t,2)} sum_{j=2}^{t} 1/(n^j q^C(j,2)).
template <class Real>
Real variance_bound_empty(std::size_t n, std::size_t t, const Real& p) {
    if (t < 2) throw ParameterError("E_t needs t > 1");
    if (n < t) throw ParameterError("Var(Y_E_t) bound: need n >= t");
    detail::require_probability(p);
    const Real q = Real(1) - p;
    if (q == Real(0)) throw ParameterError("Var(Y_E_t) bound undefined at p = 1");
    const Real m(static_cast<unsigned long long>(n));
    return ipow(m, 2 * t) * ipow(q, t * (t - 1)) * detail::overlap_sum(n, t, q);
}

/// 1 - (n^{2t} / C(n,t)^2) sum_{j=2}^{t} 1/(n^j q^C(j,2)), clamped to [0,1].
template <class Real>
Real chebyshev_lb_empty(std::size_t n, std::size_t t, const Real& p) {
    if (t < 2) throw ParameterError("E_t needs t > 1");
    if (n < t) throw ParameterError("Chebyshev bound for E_t: need n >= t");
    detail::require_probability(p);
    const Real q = Real(1) - p;
    if (q == Real(0)) throw ParameterError("Chebyshev bound for E_t undefined at p = 1");
    const Real m(static_cast<unsigned long long>(n));
    const Real c = binomial<Real>(n, t);
    return clamp_unit(Real(Real(1) - ipow(m, 2 * t) / (c * c) * detail::overlap_sum(n, t, q)));
}

/// Markov: P(Y_{E_t} > 0) <= E[Y_{E_t}].
template <class Real>
Real markov_ub_empty(std::size_t n, std::size_t t, const Real& p) {
    return expectation_empty(n, t, p);
}

/// Markov bound (np)^3 / (1 - np) on P(G has a cycle); requires np < 1.
template <class Real>
Real markov_ub_cycles(std::size_t n, const Real& p) {
    detail::require_probability(p);
    const Real np = Real(static_cast<unsigned long long>(n)) * p;
    if (!(np < Real(1))) throw DomainError("cycle bound needs np < 1");
    return ipow(np, 3) / (Real(1) - np);
}

enum class ScheduleKind { P, Q };

/// Parameter family c * n^-alpha applied to p or to q = 1 - p.
struct Schedule {
    ScheduleKind kind = ScheduleKind::P;
    double c = 1.0;
    double alpha = 0.0;
};

struct ScheduledProbability {
    double p = 0.0;
    double q = 1.0;
    bool clamped = false;
};

inline ScheduledProbability schedule_eval(const Schedule& s, std::size_t n) {
    if (!(s.c > 0.0)) throw ParameterError("schedule constant c must be positive");
    if (!(s.alpha >= 0.0)) throw ParameterError("schedule exponent alpha must be nonnegative");
    if (n == 0) throw ParameterError("schedule needs n >= 1");
    const double raw = s.c * std::pow(static_cast<double>(n), -s.alpha);
    const double value = std::clamp(raw, 0.0, 1.0);
    ScheduledProbability out;
    out.clamped = value != raw;
    if (s.kind == ScheduleKind::P) {
        out.p = value;
        out.q = 1.0 - value;
    } else {
        out.q = value;
        out.p = 1.0 - value;
    }
    return out;
}

/// Collected closed-form values for one (n, p, pattern). Entries that are
/// undefined at this point (p in {0,1}, np >= 1, ...) are left empty.
struct MomentReport {
    std::size_t n = 0;
    double p = 0.0;
    double q = 1.0;
    PatternGraph pattern = PatternGraph::two_triangles();
    std::optional<double> expectation;
    std::optional<double> variance_bound;
    std::optional<double> chebyshev_lb;
    std::optional<double> markov_ub;
};

inline MomentReport moment_report(std::size_t n, double p, const PatternGraph& pattern) {
    MomentReport r;
    r.n = n;
    r.p = p;
    r.q = 1.0 - p;
    r.pattern = pattern;
    auto attempt = [](auto f) -> std::optional<double> {
        try {
            return f();
        } catch (const ParameterError&) {
            return std::nullopt;
        } catch (const DomainError&) {
            return std::nullopt;
        }
    };
    if (pattern.kind() == PatternGraph::Kind::TwoTriangles) {
        r.expectation = attempt([&] { return expectation_two_triangles(n, p); });
        r.variance_bound = attempt([&] { return variance_bound_two_triangles(n, p); });
        r.chebyshev_lb = attempt([&] { return chebyshev_lb_two_triangles(n, p); });
        r.markov_ub = r.expectation;
    } else {
        const std::size_t t = pattern.order();
        r.expectation = attempt([&] { return expectation_empty(n, t, p); });
        r.variance_bound = attempt([&] { return variance_bound_empty(n, t, p); });
        r.chebyshev_lb = attempt([&] { return chebyshev_lb_empty(n, t, p); });
        r.markov_ub = attempt([&] { return markov_ub_empty(n, t, p); });
    }
    return r;
}

}  // namespace rmideal
