#pragma once

#include <cstddef>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmideal/errors.hpp"
#include "rmideal/exact_oracle.hpp"
#include "rmideal/graph.hpp"
#include "rmideal/ideal.hpp"
#include "rmideal/moments.hpp"
#include "rmideal/montecarlo.hpp"
#include "rmideal/normality.hpp"

// Text and JSON encodings for graphs, ideals, witnesses, polynomials, moment
// reports and sweep records.

namespace rmideal {

using json = nlohmann::ordered_json;

// ---- graphs -----------------------------------------------------------------

/// "n m" header, then one "u v" line per edge (u < v, lexicographic).
inline void write_graph_text(std::ostream& os, const Graph& g) {
    const auto edges = g.edges();
    os << g.order() << ' ' << edges.size() << '\n';
    for (const Edge& e : edges) os << e.u << ' ' << e.v << '\n';
}

inline std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    write_graph_text(os, g);
    return os.str();
}

namespace detail {

inline bool parse_index(const std::string& tok, std::size_t& out) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18) return false;
    out = std::stoull(tok);
    return true;
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

}  // namespace detail

/// Reads the text format. Blank lines and lines starting with '#' are skipped.
inline Graph read_graph_text(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](std::vector<std::string>& toks) {
        while (std::getline(is, line)) {
            ++lineno;
            toks = detail::tokens(line);
            if (toks.empty() || toks[0].starts_with('#')) continue;
            return true;
        }
        return false;
    };
    std::vector<std::string> toks;
    if (!next_line(toks)) throw ParseError(lineno, "empty graph file (expected header \"n m\")");
    std::size_t n = 0, m = 0;
    if (toks.size() != 2 || !detail::parse_index(toks[0], n) || !detail::parse_index(toks[1], m)) {
        throw ParseError(lineno, "expected header \"n m\"");
    }
    Graph g(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line(toks)) throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        std::size_t u = 0, v = 0;
        if (toks.size() != 2 || !detail::parse_index(toks[0], u) || !detail::parse_index(toks[1], v)) {
            throw ParseError(lineno, "expected edge \"u v\"");
        }
        if (u >= n || v >= n) throw ParseError(lineno, "vertex out of range for n=" + std::to_string(n));
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (u > v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
        if (g.adjacent(u, v)) throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }
    if (next_line(toks)) throw ParseError(lineno, "trailing content after " + std::to_string(m) + " edges");
    return g;
}

inline Graph graph_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_graph_text(is);
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw ParseError(0, "graph JSON needs fields n and edges");
    if (!j["n"].is_number_unsigned()) throw ParseError(0, "graph JSON field n must be a nonnegative integer");
    const auto n = j["n"].get<std::size_t>();
    Graph g(n);
    std::size_t idx = 0;
    for (const auto& e : j["edges"]) {
        ++idx;
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw ParseError(0, "edge #" + std::to_string(idx) + " must be [u, v]");
        }
        const auto u = e[0].get<std::size_t>();
        const auto v = e[1].get<std::size_t>();
        if (u >= n || v >= n) throw ParseError(0, "edge #" + std::to_string(idx) + " out of range");
        if (u == v) throw ParseError(0, "edge #" + std::to_string(idx) + " is a self-loop");
        if (g.adjacent(u, v)) throw ParseError(0, "edge #" + std::to_string(idx) + " is a duplicate");
        g.add_edge(u, v);
    }
    return g;
}

/// Accepts either encoding: JSON when the first non-space character is '{'.
inline Graph read_graph_any(std::istream& is) {
    std::string content((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        json j;
        try {
            j = json::parse(content);
        } catch (const json::parse_error& e) {
            throw ParseError(0, std::string("invalid JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return graph_from_text(content);
}

// ---- ideals and witnesses -----------------------------------------------------

inline json ideal_to_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& m : ideal.generators()) gens.push_back(m.support());
    json j{{"ambient_n", ideal.ambient_n()}, {"generators", std::move(gens)}};
    if (ideal.is_unit()) j["unit"] = true;
    return j;
}

inline MonomialIdeal ideal_from_json(const json& j) {
    const auto n = j.at("ambient_n").get<std::size_t>();
    if (j.value("unit", false)) return MonomialIdeal::unit(n);
    std::vector<Monomial> gens;
    for (const auto& g : j.at("generators")) gens.emplace_back(g.get<std::vector<Vertex>>());
    if (gens.empty()) return MonomialIdeal::zero(n);
    return MonomialIdeal::generated_by(n, std::move(gens));
}

inline json witness_to_json(const HochsterWitness& w) { return json{{"c1", w.c1}, {"c2", w.c2}}; }

// ---- polynomials ----------------------------------------------------------------

inline json polynomial_to_json(const ProbPolynomial& poly) {
    json coeffs = json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.str());
    return json{{"n", poly.n()}, {"M", poly.pair_count()}, {"coeffs", std::move(coeffs)}};
}

inline ProbPolynomial polynomial_from_json(const json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return {j.at("n").get<std::size_t>(), std::move(coeffs)};
}

inline void write_polynomial_csv(std::ostream& os, const ProbPolynomial& poly) {
    os << "m,c_m\n";
    for (std::size_t k = 0; k < poly.coeffs().size(); ++k) os << k << ',' << poly.coeffs()[k].str() << '\n';
}

// ---- numbers --------------------------------------------------------------------

/// Shortest round-trip decimal form.
inline std::string format_double(double x) {
    char buf[32];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

// ---- moment reports ---------------------------------------------------------------

inline json moment_report_to_json(const MomentReport& r) {
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    json j{{"n", r.n}, {"p", r.p}, {"q", r.q}, {"pattern", r.pattern.name()}};
    if (r.pattern.kind() == PatternGraph::Kind::Empty) j["t"] = r.pattern.order();
    j["expectation"] = opt(r.expectation);
    j["variance_bound"] = opt(r.variance_bound);
    j["chebyshev_lb"] = opt(r.chebyshev_lb);
    j["markov_ub"] = opt(r.markov_ub);
    return j;
}

inline const char* moment_csv_header() { return "n,p,q,t,expectation,variance_bound,chebyshev_lb,markov_ub"; }

inline std::string moment_report_csv_row(const MomentReport& r) {
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    std::string t = r.pattern.kind() == PatternGraph::Kind::Empty ? std::to_string(r.pattern.order()) : std::string();
    return std::to_string(r.n) + ',' + format_double(r.p) + ',' + format_double(r.q) + ',' + t + ',' +
           opt(r.expectation) + ',' + opt(r.variance_bound) + ',' + opt(r.chebyshev_lb) + ',' + opt(r.markov_ub);
}

// ---- Monte Carlo --------------------------------------------------------------------

inline const char* schedule_kind_name(ScheduleKind k) { return k == ScheduleKind::P ? "p" : "q"; }

inline json estimate_to_json(const Estimate& e) {
    return json{{"hits", e.hits},   {"trials", e.trials}, {"p_hat", e.p_hat},
                {"ci_lo", e.ci.lo}, {"ci_hi", e.ci.hi},   {"confidence", e.confidence}};
}

inline const char* sweep_csv_header() {
    return "n,schedule_kind,c,alpha,p,q,event,trials,hits,p_hat,ci_lo,ci_hi,seconds";
}

inline std::string sweep_record_csv_row(const SweepRecord& r) {
    const auto& e = r.estimate;
    return std::to_string(r.n) + ',' + schedule_kind_name(r.schedule.kind) + ',' + format_double(r.schedule.c) + ',' +
           format_double(r.schedule.alpha) + ',' + format_double(r.p) + ',' + format_double(r.q) + ',' + r.event + ',' +
           std::to_string(e.trials) + ',' + std::to_string(e.hits) + ',' + format_double(e.p_hat) + ',' +
           format_double(e.ci.lo) + ',' + format_double(e.ci.hi) + ',' + format_double(r.seconds);
}

inline json sweep_record_to_json(const SweepRecord& r) {
    const auto& e = r.estimate;
    return json{{"n", r.n},
                {"schedule_kind", schedule_kind_name(r.schedule.kind)},
                {"c", r.schedule.c},
                {"alpha", r.schedule.alpha},
                {"p", r.p},
                {"q", r.q},
                {"clamped", r.clamped},
                {"event", r.event},
                {"trials", e.trials},
                {"hits", e.hits},
                {"p_hat", e.p_hat},
                {"ci_lo", e.ci.lo},
                {"ci_hi", e.ci.hi},
                {"seconds", r.seconds}};
}

}  // namespace rmideal
