#pragma once

// Subcommand implementations for the rmideal CLI. Each command takes a parsed
// config, writes its documented output to `out`, and returns a process exit
// code. Errors surface as exceptions from the library; main() maps them to
// exit codes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rmideal/rmideal.hpp"

namespace rmideal::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsage = 2, kResource = 3 };

enum class Format { Text, Csv, Json };

inline constexpr const char* kOutputDirEnv = "RMIDEAL_OUTPUT_DIR";

/// Relative output paths resolve against $RMIDEAL_OUTPUT_DIR when it is set.
inline std::filesystem::path resolve_output_path(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') return std::filesystem::path(dir) / p;
    }
    return p;
}

/// Writes `content` to `path` (or `fallback` when path is empty).
inline void emit(const std::string& content, const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
        fallback << content;
        return;
    }
    const auto target = resolve_output_path(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    std::ofstream f(target, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + target.string());
    f << content;
    if (!f) throw std::runtime_error("failed writing " + target.string());
}

// ---- sample ---------------------------------------------------------------------

struct SampleConfig {
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t first_trial = 0;
    std::size_t count = 1;
    Format format = Format::Text;
    bool ideals = false;  // implies JSON
    std::string out;
};

inline int cmd_sample(const SampleConfig& cfg, std::ostream& out) {
    check_probability(cfg.p);
    if (cfg.count == 0) throw ParameterError("--count must be at least 1");
    std::ostringstream os;
    const bool as_json = cfg.ideals || cfg.format == Format::Json;
    json all = json::array();
    for (std::size_t i = 0; i < cfg.count; ++i) {
        const Graph g = sample_er({cfg.n, cfg.p, cfg.seed, cfg.first_trial + i});
        if (!as_json) {
            write_graph_text(os, g);
            continue;
        }
        json j = graph_to_json(g);
        if (cfg.ideals) {
            j = json{{"graph", std::move(j)}, {"edge_ideal", ideal_to_json(edge_ideal(g))},
                     {"cover_ideal", ideal_to_json(cover_ideal(g))}};
        }
        all.push_back(std::move(j));
    }
    if (as_json) os << (cfg.count == 1 ? all[0] : all).dump(2) << '\n';
    emit(os.str(), cfg.out, out);
    return kOk;
}

// ---- analyze --------------------------------------------------------------------

struct AnalyzeConfig {
    std::string input;  // path, or "-" for stdin
    std::vector<std::string> checks;  // empty = all
    std::string out;
};

inline const std::vector<std::string>& analyze_check_names() {
    static const std::vector<std::string> names{"dim",       "height", "edge_ideal_normal", "cover_normality",
                                                "hochster",  "bounds", "generators"};
    return names;
}

inline json analyze_graph(const Graph& g, const std::vector<std::string>& requested) {
    auto wants = [&](const std::string& name) {
        return requested.empty() || std::find(requested.begin(), requested.end(), name) != requested.end();
    };
    for (const auto& r : requested) {
        if (std::find(analyze_check_names().begin(), analyze_check_names().end(), r) == analyze_check_names().end()) {
            throw ParameterError("unknown check '" + r + "'");
        }
    }
    json report{{"n", g.order()}, {"edges", g.size()}};
    std::optional<std::size_t> beta0;
    auto independence = [&] {
        if (!beta0) beta0 = independence_number(g);
        return *beta0;
    };
    if (wants("dim")) report["dim"] = independence();
    if (wants("height")) report["height"] = g.order() - independence();
    std::optional<std::optional<HochsterWitness>> witness;
    auto hochster = [&]() -> const std::optional<HochsterWitness>& {
        if (!witness) witness = find_hochster(g);
        return *witness;
    };
    if (wants("edge_ideal_normal")) report["edge_ideal_normal"] = !hochster().has_value();
    if (wants("hochster")) report["hochster"] = hochster() ? witness_to_json(*hochster()) : json(nullptr);
    if (wants("cover_normality")) report["cover_normality"] = to_string(cover_ideal_normality(g));
    if (wants("bounds")) {
        report["reg_upper_bound"] = independence();
        report["v_upper_bound"] = independence();
    }
    if (wants("generators")) {
        report["edge_ideal"] = ideal_to_json(edge_ideal(g));
        report["cover_ideal"] = ideal_to_json(cover_ideal(g));
    }
    return report;
}

inline Graph load_graph(const std::string& input) {
    if (input.empty() || input == "-") return read_graph_any(std::cin);
    std::ifstream f(input, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open graph file " + input);
    return read_graph_any(f);
}

inline int cmd_analyze(const AnalyzeConfig& cfg, std::ostream& out) {
    const Graph g = load_graph(cfg.input);
    emit(analyze_graph(g, cfg.checks).dump(2) + "\n", cfg.out, out);
    return kOk;
}

// ---- mc / sweep -------------------------------------------------------------------

struct McConfig {
    std::size_t n = 0;
    double p = 0.0;
    std::string event;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    double confidence = kDefaultConfidence;
    std::size_t jobs = 0;
    Format format = Format::Csv;
    bool timing = true;
    std::string out;
};

inline const char* mc_csv_header() { return "n,p,event,trials,hits,p_hat,ci_lo,ci_hi,confidence,seconds"; }

inline int cmd_mc(const McConfig& cfg, std::ostream& out) {
    const EventSpec ev = EventSpec::parse(cfg.event);
    const auto start = std::chrono::steady_clock::now();
    const Estimate e = estimate(cfg.n, cfg.p, ev, cfg.trials, cfg.seed, cfg.confidence, cfg.jobs);
    const double seconds =
        cfg.timing ? std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() : 0.0;
    std::ostringstream os;
    if (cfg.format == Format::Json) {
        json j{{"n", cfg.n}, {"p", cfg.p}, {"event", ev.name()}};
        for (auto& [k, v] : estimate_to_json(e).items()) j[k] = v;
        j["seconds"] = seconds;
        os << j.dump(2) << '\n';
    } else {
        os << mc_csv_header() << '\n'
           << cfg.n << ',' << format_double(cfg.p) << ',' << ev.name() << ',' << e.trials << ',' << e.hits << ','
           << format_double(e.p_hat) << ',' << format_double(e.ci.lo) << ',' << format_double(e.ci.hi) << ','
           << format_double(e.confidence) << ',' << format_double(seconds) << '\n';
    }
    emit(os.str(), cfg.out, out);
    return kOk;
}

/// "q=1*n^-0.5", "p=2*n^-1.5", "p=0.3" (alpha = 0).
inline Schedule parse_schedule(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParameterError("schedule must look like p=c*n^-alpha or q=c*n^-alpha");
    Schedule s;
    const std::string var = text.substr(0, eq);
    if (var == "p") {
        s.kind = ScheduleKind::P;
    } else if (var == "q") {
        s.kind = ScheduleKind::Q;
    } else {
        throw ParameterError("schedule variable must be p or q, got '" + var + "'");
    }
    std::string rhs = text.substr(eq + 1);
    auto to_double = [&](const std::string& s_) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s_, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != s_.size()) throw ParameterError("bad number '" + s_ + "' in schedule '" + text + "'");
        return v;
    };
    const auto npos = rhs.find("n^");
    if (npos == std::string::npos) {
        s.c = to_double(rhs);
        s.alpha = 0.0;
    } else {
        std::string coef = rhs.substr(0, npos);
        if (!coef.empty() && coef.back() == '*') coef.pop_back();
        s.c = coef.empty() ? 1.0 : to_double(coef);
        s.alpha = -to_double(rhs.substr(npos + 2));
    }
    if (!(s.c > 0.0)) throw ParameterError("schedule constant must be positive");
    if (!(s.alpha >= 0.0)) throw ParameterError("schedule exponent must be of the form n^-alpha with alpha >= 0");
    return s;
}

struct SweepConfig {
    std::string event;
    std::string schedule;
    std::vector<std::size_t> ns;
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 0;
    double confidence = kDefaultConfidence;
    std::size_t jobs = 0;
    Format format = Format::Csv;
    bool timing = true;
    std::string out;
};

inline int cmd_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err = std::cerr) {
    const EventSpec ev = EventSpec::parse(cfg.event);
    const Schedule sched = parse_schedule(cfg.schedule);
    auto records = sweep(ev, sched, cfg.ns, cfg.trials, cfg.seed, cfg.confidence, cfg.jobs);
    std::ostringstream os;
    if (!cfg.timing) {
        for (auto& r : records) r.seconds = 0.0;
    }
    for (const auto& r : records) {
        if (r.clamped) err << "warning: schedule clamped at n=" << r.n << '\n';
    }
    if (cfg.format == Format::Json) {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(sweep_record_to_json(r));
        os << arr.dump(2) << '\n';
    } else {
        os << sweep_csv_header() << '\n';
        for (const auto& r : records) os << sweep_record_csv_row(r) << '\n';
    }
    emit(os.str(), cfg.out, out);
    return kOk;
}

// ---- oracle ---------------------------------------------------------------------------

struct OracleConfig {
    std::size_t n = 0;
    std::string event;    // or
    std::string pattern;  // with expectation
    bool expectation = false;
    bool compare = false;
    std::vector<std::string> p_grid;  // exact decimal/fraction strings; default 0.05..0.95
    std::size_t cap = 7;
    bool allow_eight = false;
    std::size_t jobs = 0;
    Format format = Format::Json;
    std::string out;
};

inline std::vector<std::string> default_p_grid() {
    std::vector<std::string> grid;
    for (int k = 1; k <= 19; ++k) grid.push_back(std::to_string(k) + "/20");
    return grid;
}

namespace detail {

inline std::string rational_decimal(const Rational& r) { return format_double(to_double(r)); }

// Closed-form bounds relevant to an event, evaluated exactly where defined.
inline json event_comparison_row(std::size_t n, const EventSpec& ev, const Rational& p, const Rational& oracle) {
    json row{{"p", rational_decimal(p)}, {"oracle", rational_decimal(oracle)}};
    bool violated = false;
    auto lower = [&](const char* name, const Rational& v) {
        row[name] = rational_decimal(v);
        if (v > oracle) violated = true;
    };
    auto upper = [&](const char* name, const Rational& v) {
        row[name] = rational_decimal(v);
        if (v < oracle) violated = true;
    };
    if (ev.negated()) return row;
    using K = EventSpec::Kind;
    const std::size_t t = ev.parameter();
    try {
        switch (ev.kind()) {
            case K::HasCycle:
            case K::Hochster:
                if (Rational(static_cast<unsigned long long>(n)) * p < 1) upper("markov_ub_cycles", markov_ub_cycles(n, p));
                break;
            case K::HasEtInduced:
            case K::DimGe:
                if (t >= 2 && t <= n) {
                    upper("markov_ub_Et", markov_ub_empty(n, t, p));
                    if (p < 1) lower("chebyshev_lb_Et", chebyshev_lb_empty(n, t, p));
                }
                break;
            case K::HasTInduced:
                if (n >= 6) {
                    upper("markov_ub_T", expectation_two_triangles(n, p));
                    if (p > 0 && p < 1) lower("chebyshev_lb_T", chebyshev_lb_two_triangles(n, p));
                }
                break;
            default: break;
        }
    } catch (const DomainError&) {
    }
    row["consistent"] = !violated;
    return row;
}

}  // namespace detail

inline int cmd_oracle(const OracleConfig& cfg, std::ostream& out) {
    OracleLimits limits{cfg.cap, cfg.allow_eight, cfg.jobs};
    check_oracle_size(cfg.n, limits);
    const bool by_pattern = !cfg.pattern.empty();
    if (by_pattern == !cfg.event.empty()) throw ParameterError("give exactly one of --event or --pattern");
    if (by_pattern && !cfg.expectation) throw ParameterError("--pattern requires --expectation");

    std::vector<Rational> grid;
    for (const auto& s : cfg.p_grid.empty() ? default_p_grid() : cfg.p_grid) {
        Rational p = parse_rational(s);
        if (p < 0 || p > 1) throw ParameterError("p grid value " + s + " outside [0,1]");
        grid.push_back(p);
    }

    json report;
    ProbPolynomial poly;
    int rc = kOk;
    if (by_pattern) {
        const PatternGraph pat = PatternGraph::parse(cfg.pattern);
        if (cfg.n < pat.order()) throw ParameterError("n must be at least the pattern order");
        poly = enumerate_expectation(cfg.n, pat, limits);
        report = json{{"n", cfg.n}, {"pattern", pat.name()}, {"quantity", "E[Y]"}, {"polynomial", polynomial_to_json(poly)}};
        if (cfg.compare) {
            json rows = json::array();
            bool all_match = true;
            for (const auto& p : grid) {
                const Rational oracle = poly.evaluate_exact(p);
                const Rational formula = pat.kind() == PatternGraph::Kind::Empty
                                             ? expectation_empty(cfg.n, pat.order(), p)
                                             : expectation_two_triangles(cfg.n, p);
                const bool match = oracle == formula;
                all_match = all_match && match;
                json row{{"p", detail::rational_decimal(p)},
                         {"oracle", detail::rational_decimal(oracle)},
                         {"formula", detail::rational_decimal(formula)},
                         {"match", match}};
                if (formula != 0) row["ratio"] = detail::rational_decimal(oracle / formula);
                rows.push_back(std::move(row));
            }
            report["comparison"] = std::move(rows);
            report["formula_matches_oracle"] = all_match;
            if (pat.kind() == PatternGraph::Kind::TwoTriangles) {
                report["kappa_oracle"] = count_labeled_copies(pat, 6);
                report["kappa_formula"] = 20;
            }
        }
    } else {
        const EventSpec ev = EventSpec::parse(cfg.event);
        poly = enumerate_event(cfg.n, ev, limits);
        report = json{{"n", cfg.n}, {"event", ev.name()}, {"quantity", "P(event)"}, {"polynomial", polynomial_to_json(poly)}};
        if (cfg.compare) {
            json rows = json::array();
            bool consistent = true;
            for (const auto& p : grid) {
                json row = detail::event_comparison_row(cfg.n, ev, p, poly.evaluate_exact(p));
                consistent = consistent && row.value("consistent", true);
                rows.push_back(std::move(row));
            }
            report["comparison"] = std::move(rows);
            report["bounds_consistent"] = consistent;
            if (!consistent) rc = kCheckFailure;
        }
    }

    std::ostringstream os;
    if (cfg.format == Format::Csv) {
        write_polynomial_csv(os, poly);
    } else {
        os << report.dump(2) << '\n';
    }
    emit(os.str(), cfg.out, out);
    return rc;
}

}  // namespace rmideal::cli
