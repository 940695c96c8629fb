#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "rmideal/errors.hpp"
#include "rmideal/events.hpp"
#include "rmideal/moments.hpp"
#include "rmideal/parallel.hpp"
#include "rmideal/sampling.hpp"

namespace rmideal {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// Two-sided standard normal quantile for the given coverage.
inline double normal_quantile(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) throw ParameterError("confidence must lie in (0,1)");
    return boost::math::quantile(boost::math::normal_distribution<double>(), 1.0 - (1.0 - confidence) / 2.0);
}

/// Wilson score interval for a binomial proportion.
inline Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double confidence) {
    if (trials == 0) throw ParameterError("wilson_interval needs at least one trial");
    if (hits > trials) throw ParameterError("hits exceed trials");
    const double z = normal_quantile(confidence);
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (hits == 0) ci.lo = 0.0;
    if (hits == trials) ci.hi = 1.0;
    ci.lo = std::min(ci.lo, phat);
    ci.hi = std::max(ci.hi, phat);
    return ci;
}

struct Estimate {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double p_hat = 0.0;
    Interval ci;
    double confidence = 0.95;

    friend bool operator==(const Estimate& a, const Estimate& b) {
        return a.hits == b.hits && a.trials == b.trials && a.p_hat == b.p_hat && a.ci.lo == b.ci.lo &&
               a.ci.hi == b.ci.hi && a.confidence == b.confidence;
    }
};

inline constexpr double kDefaultConfidence = 0.95;

/// Monte Carlo estimate of P(event) under G(n,p). Trial k samples with
/// stream k of `seed`; hit counts from parallel chunks are summed, so the
/// result is independent of `jobs`.
inline Estimate estimate(std::size_t n, double p, const EventSpec& event, std::uint64_t trials, std::uint64_t seed,
                         double confidence = kDefaultConfidence, std::size_t jobs = 0) {
    check_probability(p);
    if (trials == 0) throw ParameterError("trials must be at least 1");
    if (!(confidence > 0.0 && confidence < 1.0)) throw ParameterError("confidence must lie in (0,1)");
    const auto partial = parallel_chunks(trials, jobs, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        for (std::uint64_t k = begin; k < end; ++k) {
            if (event(sample_er({n, p, seed, k}))) ++hits;
        }
        return hits;
    });
    Estimate e;
    for (auto h : partial) e.hits += h;
    e.trials = trials;
    e.p_hat = static_cast<double>(e.hits) / static_cast<double>(trials);
    e.ci = wilson_interval(e.hits, trials, confidence);
    e.confidence = confidence;
    return e;
}

struct SweepRecord {
    std::size_t n = 0;
    Schedule schedule;
    double p = 0.0;
    double q = 1.0;
    bool clamped = false;
    std::string event;
    Estimate estimate;
    double seconds = 0.0;
};

/// One estimate per n (ascending), with p or q set by `schedule`.
inline std::vector<SweepRecord> sweep(const EventSpec& event, const Schedule& schedule, const std::vector<std::size_t>& ns,
                                      std::uint64_t trials, std::uint64_t seed, double confidence = kDefaultConfidence,
                                      std::size_t jobs = 0) {
    if (ns.empty()) throw ParameterError("sweep needs at least one n");
    if (!std::is_sorted(ns.begin(), ns.end()) || std::adjacent_find(ns.begin(), ns.end()) != ns.end()) {
        throw ParameterError("sweep n list must be strictly ascending");
    }
    std::vector<SweepRecord> out;
    for (std::size_t n : ns) {
        const auto sp = schedule_eval(schedule, n);
        const auto start = std::chrono::steady_clock::now();
        SweepRecord r;
        r.n = n;
        r.schedule = schedule;
        r.p = sp.p;
        r.q = sp.q;
        r.clamped = sp.clamped;
        r.event = event.name();
        r.estimate = estimate(n, sp.p, event, trials, seed, confidence, jobs);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace rmideal
