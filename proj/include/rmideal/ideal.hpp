#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rmideal/errors.hpp"
#include "rmideal/graph.hpp"
#include "rmideal/numeric.hpp"
#include "rmideal/stable_sets.hpp"

namespace rmideal {

/// Squarefree monomial x_{i1}...x_{ir}, encoded by its sorted support.
class Monomial {
public:
    explicit Monomial(std::vector<Vertex> support) : support_(std::move(support)) {
        std::sort(support_.begin(), support_.end());
        if (std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
            throw ParameterError("repeated variable in squarefree monomial");
        }
    }

    /// Builds from an exponent vector; only 0/1 exponents are accepted.
    static Monomial from_exponents(std::span<const int> exponents) {
        std::vector<Vertex> support;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] < 0 || exponents[i] > 1) {
                throw ParameterError("exponent " + std::to_string(exponents[i]) + " on x" + std::to_string(i + 1) +
                                     ": only squarefree monomials are supported");
            }
            if (exponents[i] == 1) support.push_back(i);
        }
        return Monomial(std::move(support));
    }

    const std::vector<Vertex>& support() const noexcept { return support_; }
    std::size_t degree() const noexcept { return support_.size(); }

    bool divides(const Monomial& o) const {
        return std::includes(o.support_.begin(), o.support_.end(), support_.begin(), support_.end());
    }

    /// "x1*x2" with 1-based variable names.
    std::string to_string() const {
        if (support_.empty()) return "1";
        std::string s;
        for (Vertex v : support_) {
            if (!s.empty()) s += '*';
            s += "x" + std::to_string(v + 1);
        }
        return s;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Vertex> support_;
};

/// Squarefree monomial ideal with a minimal generating set, kept sorted
/// lexicographically by support.
///
/// Two degenerate values exist: the zero ideal (no generators) and the unit
/// ideal (the cover ideal of an edgeless graph, whose only cover is empty).
class MonomialIdeal {
public:
    static MonomialIdeal zero(std::size_t ambient_n) { return MonomialIdeal(ambient_n, {}, false); }
    static MonomialIdeal unit(std::size_t ambient_n) { return MonomialIdeal(ambient_n, {}, true); }

    /// Minimalises `gens` under divisibility. Empty supports are rejected; use unit().
    static MonomialIdeal generated_by(std::size_t ambient_n, std::vector<Monomial> gens) {
        for (const auto& m : gens) {
            if (m.degree() == 0) throw ParameterError("constant generator: use MonomialIdeal::unit");
            if (m.support().back() >= ambient_n) {
                throw ParameterError("variable x" + std::to_string(m.support().back() + 1) + " outside ambient ring of " +
                                     std::to_string(ambient_n) + " variables");
            }
        }
        std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
            return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> minimal;
        for (auto& m : gens) {
            const bool redundant =
                std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& k) { return k.divides(m); });
            if (!redundant) minimal.push_back(std::move(m));
        }
        std::sort(minimal.begin(), minimal.end());
        return MonomialIdeal(ambient_n, std::move(minimal), false);
    }

    std::size_t ambient_n() const noexcept { return ambient_n_; }
    const std::vector<Monomial>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return !unit_ && generators_.empty(); }
    bool is_unit() const noexcept { return unit_; }

    std::size_t min_degree() const {
        if (unit_) return 0;
        std::size_t d = 0;
        for (const auto& m : generators_) d = (d == 0) ? m.degree() : std::min(d, m.degree());
        return d;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    MonomialIdeal(std::size_t n, std::vector<Monomial> gens, bool unit)
        : ambient_n_(n), generators_(std::move(gens)), unit_(unit) {}

    std::size_t ambient_n_;
    std::vector<Monomial> generators_;
    bool unit_;
};

/// I(G) = (x_i x_j : {i,j} ∈ E(G)).
inline MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (const Edge& e : g.edges()) gens.emplace_back(std::vector<Vertex>{e.u, e.v});
    if (gens.empty()) return MonomialIdeal::zero(g.order());
    return MonomialIdeal::generated_by(g.order(), std::move(gens));
}

/// Graph whose edges are the supports of a quadratic squarefree ideal.
inline Graph graph_of_edge_ideal(const MonomialIdeal& ideal) {
    Graph g(ideal.ambient_n());
    for (const auto& m : ideal.generators()) {
        if (m.degree() != 2) throw ParameterError("generator " + m.to_string() + " is not quadratic");
        g.add_edge(m.support()[0], m.support()[1]);
    }
    return g;
}

/// I_c(G): one generator per minimal vertex cover, obtained as the
/// complements of the maximal stable sets.
inline MonomialIdeal cover_ideal(const Graph& g, std::size_t limit = kDefaultEnumerationLimit) {
    if (g.size() == 0) return g.order() == 0 ? MonomialIdeal::zero(0) : MonomialIdeal::unit(g.order());
    std::vector<Monomial> gens;
    for (const auto& stable : maximal_independent_sets(g, limit)) gens.emplace_back((~stable).to_vector());
    return MonomialIdeal::generated_by(g.order(), std::move(gens));
}

/// dim S/I(G) = beta_0(G).
inline std::size_t krull_dimension(const Graph& g) { return independence_number(g); }

/// ht I(G) = alpha_0(G) = n - beta_0(G).
inline std::size_t ideal_height(const Graph& g) { return g.order() - independence_number(g); }

/// Upper bound on reg(S/I(G)); the exact regularity is not computed.
inline std::size_t reg_upper_bound(const Graph& g) { return krull_dimension(g); }

/// Upper bound on the v-number of I(G); the exact v-number is not computed.
inline std::size_t v_upper_bound(const Graph& g) { return independence_number(g); }

/// P(I(G) = (B)) = p^|B| (1-p)^(C(n,2)-|B|) under G(n,p).
template <class Real>
Real ideal_probability(std::size_t n, const Real& p, std::span<const Monomial> generators) {
    if (!(p >= Real(0) && p <= Real(1))) throw ParameterError("p must lie in [0,1]");
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<Monomial> seen;
    for (const auto& m : generators) {
        if (m.degree() != 2) throw ParameterError("generator " + m.to_string() + " is not quadratic");
        if (m.support()[1] >= n) throw ParameterError("generator " + m.to_string() + " outside ambient ring");
        seen.push_back(m);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    const std::size_t b = seen.size();
    return ipow(p, b) * ipow(Real(1) - p, pairs - b);
}

}  // namespace rmideal
