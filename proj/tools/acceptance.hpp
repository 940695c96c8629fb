#pragma once

// Acceptance checks shared by `rmideal verify` and the acceptance test binary.
// Each check pins its own sizes, grids and tolerances.

#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "rmideal/rmideal.hpp"

namespace rmideal::acceptance {

enum class Status { Pass, Fail, Info };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Info: return "INFO";
    }
    return "?";
}

struct CheckResult {
    int id = 0;
    std::string key;
    std::string title;
    Status status = Status::Pass;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

struct Options {
    std::uint64_t seed = 20240601;
    std::size_t jobs = 0;
    std::string only;  // substring filter on key or id
};

namespace detail {

inline std::vector<Rational> tenths() {
    std::vector<Rational> grid;
    for (int k = 1; k <= 9; ++k) grid.emplace_back(k, 10);
    return grid;
}

inline std::vector<Rational> twentieths() {
    std::vector<Rational> grid;
    for (int k = 1; k <= 19; ++k) grid.emplace_back(k, 20);
    return grid;
}

inline std::string dec(const Rational& r) { return format_double(to_double(r)); }

struct Outcome {
    Status status = Status::Pass;
    std::string detail;
};

inline Outcome fail(std::string why) { return {Status::Fail, std::move(why)}; }

// 1. E[Y_{E_t}] = C(n,t) q^C(t,2) exactly.
inline Outcome expectation_empty_exact(const Options& o) {
    std::size_t cases = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t t = 2; t <= n; ++t) {
            const auto poly = enumerate_expectation(n, PatternGraph::empty(t), {.jobs = o.jobs});
            for (const auto& p : tenths()) {
                const Rational oracle = poly.evaluate_exact(p);
                const Rational formula = expectation_empty(n, t, p);
                if (oracle != formula) {
                    return fail("n=" + std::to_string(n) + " t=" + std::to_string(t) + " p=" + dec(p) + ": oracle " +
                                dec(oracle) + " vs formula " + dec(formula));
                }
                ++cases;
            }
        }
    }
    return {Status::Pass, std::to_string(cases) + " (n,t,p) cases equal exactly"};
}

// 2. Oracle E[Y_T] at n=6 has the form kappa p^6 q^9; report kappa next to 20.
inline Outcome two_triangle_coefficient(const Options& o) {
    const auto pat = PatternGraph::two_triangles();
    const auto poly = enumerate_expectation(6, pat, {.jobs = o.jobs});
    for (std::size_t m = 0; m < poly.coeffs().size(); ++m) {
        if (m != 6 && poly.coeffs()[m] != 0) return fail("E[Y_T] at n=6 has a p^" + std::to_string(m) + " term");
    }
    const BigInt kappa_poly = poly.coeffs()[6];
    const std::uint64_t kappa = count_labeled_copies(pat, 6);
    if (kappa_poly != kappa) {
        return fail("polynomial coefficient " + kappa_poly.str() + " != labelled copy count " + std::to_string(kappa));
    }
    std::string detail = "oracle kappa=" + std::to_string(kappa) + " (E[Y_T] = kappa p^6 q^9 at n=6); closed-form coefficient C(6,3)=20";
    if (kappa != 20) return {Status::Info, detail + "; closed form overstates E[Y_T] by factor " + dec(Rational(20, kappa))};
    return {Status::Pass, detail};
}

// 3. True Var(Y_{E_t}) <= closed-form variance bound.
inline Outcome variance_bound_valid(const Options& o) {
    std::size_t cases = 0;
    for (auto [n, t] : {std::pair<std::size_t, std::size_t>{5, 2}, {5, 3}, {6, 3}}) {
        const auto pat = PatternGraph::empty(t);
        const auto first = enumerate_moment(n, pat, 1, {.jobs = o.jobs});
        const auto second = enumerate_moment(n, pat, 2, {.jobs = o.jobs});
        for (const auto& p : tenths()) {
            const Rational mean = first.evaluate_exact(p);
            const Rational var = second.evaluate_exact(p) - mean * mean;
            const Rational bound = variance_bound_empty(n, t, p);
            if (var > bound) {
                return fail("n=" + std::to_string(n) + " t=" + std::to_string(t) + " p=" + dec(p) + ": Var " + dec(var) +
                            " > bound " + dec(bound));
            }
            ++cases;
        }
    }
    return {Status::Pass, std::to_string(cases) + " cases, Var <= bound (exact)"};
}

// 4. chebyshev_lb_Et <= P(Y_E3 > 0) <= markov_ub_Et and P(cycle) <= (np)^3/(1-np).
inline Outcome sandwiches(const Options& o) {
    constexpr std::size_t n = 6;
    const auto has_e3 = enumerate_event(n, EventSpec(EventSpec::Kind::HasEtInduced, 3), {.jobs = o.jobs});
    const auto cyc = enumerate_event(n, EventSpec(EventSpec::Kind::HasCycle), {.jobs = o.jobs});
    std::size_t cycle_points = 0;
    for (const auto& p : twentieths()) {
        const Rational exact = has_e3.evaluate_exact(p);
        const Rational lo = chebyshev_lb_empty(n, 3, p);
        const Rational hi = markov_ub_empty(n, 3, p);
        if (!(lo <= exact && exact <= hi)) {
            return fail("p=" + dec(p) + ": " + dec(lo) + " <= " + dec(exact) + " <= " + dec(hi) + " violated");
        }
        if (Rational(n) * p < 1) {
            const Rational c = cyc.evaluate_exact(p);
            const Rational ub = markov_ub_cycles(n, p);
            if (c > ub) return fail("p=" + dec(p) + ": P(cycle)=" + dec(c) + " > " + dec(ub));
            ++cycle_points;
        }
    }
    return {Status::Pass, "19 p values for E3, " + std::to_string(cycle_points) + " with np<1 for cycles (exact)"};
}

// 5. dim_ge:t and has_Et_induced:t have identical polynomials.
inline Outcome dimension_identity(const Options& o) {
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t t = 1; t <= n; ++t) {
            const auto a = enumerate_event(n, EventSpec(EventSpec::Kind::DimGe, t), {.jobs = o.jobs});
            const auto b = enumerate_event(n, EventSpec(EventSpec::Kind::HasEtInduced, t), {.jobs = o.jobs});
            if (!(a == b)) return fail("n=" + std::to_string(n) + " t=" + std::to_string(t) + ": polynomials differ");
            ++cases;
        }
    }
    return {Status::Pass, std::to_string(cases) + " (n,t) pairs identical"};
}

// 6. find_hochster agrees with the blind subset oracle.
inline Outcome hochster_equivalence(const Options& o) {
    constexpr std::size_t graphs = 2000;
    std::size_t with_witness = 0;
    for (std::size_t i = 0; i < graphs; ++i) {
        const std::size_t n = 6 + i % 7;
        const double p = static_cast<double>(1 + (i / 7) % 9) / 10.0;
        const Graph g = sample_er({n, p, o.seed, i});
        const auto fast = find_hochster(g);
        const auto naive = find_hochster_naive(g);
        if (fast.has_value() != naive.has_value()) {
            return fail("graph #" + std::to_string(i) + " (n=" + std::to_string(n) + "): fast=" + std::to_string(fast.has_value()) +
                        " naive=" + std::to_string(naive.has_value()) + "\n" + graph_to_text(g));
        }
        if (fast) {
            ++with_witness;
            if (!is_valid_hochster(g, *fast) || !is_valid_hochster(g, *naive)) {
                return fail("graph #" + std::to_string(i) + ": witness failed revalidation");
            }
        }
    }
    return {Status::Pass, std::to_string(graphs) + " graphs agree, " + std::to_string(with_witness) + " with witnesses"};
}

// 7. Edge-ideal normality at n=200: mostly normal at p=1e-4, rarely at p=0.1.
inline Outcome normality_trends(const Options& o) {
    constexpr std::uint64_t trials = 20'000;
    const EventSpec ev(EventSpec::Kind::EdgeIdealNormal);
    const auto sparse = estimate(200, 1e-4, ev, trials, o.seed, 0.95, o.jobs);
    const auto dense = estimate(200, 0.1, ev, trials, o.seed, 0.95, o.jobs);
    std::ostringstream d;
    d << "p=1e-4: p_hat=" << sparse.p_hat << " CI[" << sparse.ci.lo << "," << sparse.ci.hi << "]; p=0.1: p_hat=" << dense.p_hat
      << " CI[" << dense.ci.lo << "," << dense.ci.hi << "]";
    const bool ok = sparse.p_hat >= 0.95 && sparse.ci.lo >= 0.95 && dense.p_hat <= 0.05 && dense.ci.hi <= 0.05;
    return {ok ? Status::Pass : Status::Fail, d.str()};
}

// 8. P(dim >= 3) below and above the threshold q* = 1/n.
inline Outcome krull_threshold(const Options& o) {
    const EventSpec ev(EventSpec::Kind::DimGe, 3);
    const std::vector<std::size_t> ns{50, 100, 200};
    const auto below = sweep(ev, {ScheduleKind::Q, 1.0, 1.5}, ns, 10'000, o.seed, 0.95, o.jobs);
    const auto above = sweep(ev, {ScheduleKind::Q, 1.0, 0.5}, ns, 10'000, o.seed, 0.95, o.jobs);
    std::ostringstream d;
    bool ok = true;
    d << "q=n^-1.5:";
    for (std::size_t i = 0; i < ns.size(); ++i) {
        d << ' ' << below[i].estimate.p_hat;
        if (i > 0 && below[i].estimate.p_hat > below[i - 1].estimate.p_hat) ok = false;
    }
    d << "; q=n^-0.5:";
    for (std::size_t i = 0; i < ns.size(); ++i) {
        d << ' ' << above[i].estimate.p_hat;
        if (i > 0 && above[i].estimate.p_hat < above[i - 1].estimate.p_hat) ok = false;
    }
    ok = ok && below.back().estimate.p_hat <= 0.1 && above.back().estimate.p_hat >= 0.9;
    return {ok ? Status::Pass : Status::Fail, d.str()};
}

// 9. Cover ideal of the five-vertex worked example; bipartite cover ideals are normal.
inline Outcome cover_results(const Options& o) {
    const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}, {2, 4}});
    const auto ideal = cover_ideal(g);
    const std::vector<std::vector<Vertex>> expected{{0, 1, 2, 3}, {0, 2, 4}, {1, 2, 4}, {1, 3, 4}};
    std::vector<std::vector<Vertex>> got;
    for (const auto& m : ideal.generators()) got.push_back(m.support());
    if (got != expected) return fail("cover ideal generators differ from x1x2x3x4, x1x3x5, x2x3x5, x2x4x5");

    constexpr std::size_t graphs = 500;
    for (std::size_t i = 0; i < graphs; ++i) {
        TrialRng rng(o.seed ^ 0xB1B1B1B1ULL, i);
        const std::size_t n = 1 + static_cast<std::size_t>(rng.next() % 40);
        const double p = rng.uniform();
        std::vector<bool> side(n);
        for (std::size_t v = 0; v < n; ++v) side[v] = (rng.next() & 1U) != 0;
        Graph h(n);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (side[u] != side[v] && rng.uniform() < p) h.add_edge(u, v);
            }
        }
        if (cover_ideal_normality(h) != CoverNormality::Normal) {
            return fail("bipartite graph #" + std::to_string(i) + " not reported normal");
        }
    }
    return {Status::Pass, "example generators reproduced; 500 bipartite graphs (n<=40) normal"};
}

// 10. 10^6-trial estimates at (6, 0.3) cover the exact value at 99.9%.
inline Outcome calibration(const Options& o) {
    const Rational p_exact(3, 10);
    std::ostringstream d;
    bool ok = true;
    for (const auto& ev : registry_examples()) {
        const double exact = to_double(enumerate_event(6, ev, {.jobs = o.jobs}).evaluate_exact(p_exact));
        const auto e = estimate(6, 0.3, ev, 1'000'000, o.seed, 0.999, o.jobs);
        const bool inside = e.ci.contains(exact);
        ok = ok && inside;
        if (!inside) d << ev.name() << " exact=" << exact << " CI[" << e.ci.lo << "," << e.ci.hi << "]; ";
    }
    if (ok) d << registry_examples().size() << " events inside their 99.9% Wilson intervals";
    return {ok ? Status::Pass : Status::Fail, d.str()};
}

// 11. mc/sweep/oracle output is byte-identical across --jobs.
inline Outcome determinism(const Options& o) {
    auto capture = [](const std::function<void(std::ostream&)>& f) {
        std::ostringstream os;
        f(os);
        return os.str();
    };
    std::ostringstream sink;
    std::vector<std::string> reference;
    for (std::size_t jobs : {1, 2, 3, 8}) {
        std::vector<std::string> outputs;
        outputs.push_back(capture([&](std::ostream& os) {
            cli::McConfig c;
            c.n = 12;
            c.p = 0.3;
            c.event = "hochster";
            c.trials = 20'000;
            c.seed = o.seed;
            c.jobs = jobs;
            c.timing = false;
            cli::cmd_mc(c, os);
        }));
        outputs.push_back(capture([&](std::ostream& os) {
            cli::SweepConfig c;
            c.event = "dim_ge:3";
            c.schedule = "q=1*n^-0.5";
            c.ns = {20, 40};
            c.trials = 5'000;
            c.seed = o.seed;
            c.jobs = jobs;
            c.timing = false;
            cli::cmd_sweep(c, os, sink);
        }));
        outputs.push_back(capture([&](std::ostream& os) {
            cli::OracleConfig c;
            c.n = 6;
            c.event = "edge_ideal_normal";
            c.compare = true;
            c.jobs = jobs;
            cli::cmd_oracle(c, os);
        }));
        if (reference.empty()) {
            reference = outputs;
        } else if (outputs != reference) {
            return fail("output with --jobs " + std::to_string(jobs) + " differs from --jobs 1");
        }
    }
    return {Status::Pass, "mc, sweep and oracle identical for jobs in {1,2,3,8}"};
}

}  // namespace detail

struct CheckDef {
    int id;
    const char* key;
    const char* title;
    double budget_seconds;
    detail::Outcome (*run)(const Options&);
};

inline const std::vector<CheckDef>& checks() {
    using namespace detail;
    static const std::vector<CheckDef> all{
        {1, "expectation", "exact E[Y_Et] equals C(n,t) q^C(t,2)", 60, expectation_empty_exact},
        {2, "kappa", "E[Y_T] coefficient: oracle vs closed-form 20", 60, two_triangle_coefficient},
        {3, "variance", "Var(Y_Et) <= closed-form bound", 300, variance_bound_valid},
        {4, "sandwich", "Chebyshev/Markov sandwiches at n=6", 300, sandwiches},
        {5, "dim_identity", "dim_ge:t == has_Et_induced:t polynomials", 120, dimension_identity},
        {6, "hochster", "find_hochster vs naive oracle on 2000 graphs", 300, hochster_equivalence},
        {7, "normality_trend", "edge ideal normality trends at n=200", 600, normality_trends},
        {8, "krull_trend", "dim>=3 threshold trend at q=n^-1.5 / n^-0.5", 600, krull_threshold},
        {9, "cover", "cover ideal example and bipartite normality", 120, cover_results},
        {10, "calibration", "MC vs oracle at n=6, p=0.3, 99.9% Wilson", 600, calibration},
        {11, "determinism", "byte-identical output across --jobs", 120, determinism},
    };
    return all;
}

inline bool selected(const CheckDef& c, const std::string& only) {
    if (only.empty()) return true;
    std::istringstream is(only);
    for (std::string tok; std::getline(is, tok, ',');) {
        if (tok == std::to_string(c.id) || std::string(c.key).find(tok) != std::string::npos) return true;
    }
    return false;
}

/// Runs the selected checks, printing one line per check as it completes.
/// A check that overruns its time budget fails.
inline std::vector<CheckResult> run(const Options& o, std::ostream& log) {
    std::vector<CheckResult> results;
    for (const auto& c : checks()) {
        if (!selected(c, o.only)) continue;
        CheckResult r{c.id, c.key, c.title, Status::Pass, {}, 0.0, c.budget_seconds};
        const auto start = std::chrono::steady_clock::now();
        try {
            const auto outcome = c.run(o);
            r.status = outcome.status;
            r.detail = outcome.detail;
        } catch (const std::exception& e) {
            r.status = Status::Fail;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > r.budget_seconds && r.status != Status::Fail) {
            r.status = Status::Fail;
            r.detail += " (exceeded " + format_double(r.budget_seconds) + " s budget)";
        }
        char head[96];
        std::snprintf(head, sizeof head, "[%s] %2d %-16s %8.2fs  ", to_string(r.status), r.id, r.key.c_str(), r.seconds);
        log << head << r.title << "\n       " << r.detail << '\n' << std::flush;
        results.push_back(std::move(r));
    }
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::Fail; });
}

}  // namespace rmideal::acceptance
