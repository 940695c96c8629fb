#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rmideal/errors.hpp"
#include "rmideal/graph.hpp"
#include "rmideal/normality.hpp"
#include "rmideal/patterns.hpp"
#include "rmideal/stable_sets.hpp"

namespace rmideal {

/// Named graph predicate shared by the sampler, the oracle and sweeps.
///
/// Textual form: `name` or `name:t`, optionally prefixed with `not:`, e.g.
/// "dim_ge:3", "not:has_cycle".
class EventSpec {
public:
    enum class Kind {
        AlwaysTrue,
        HasCycle,
        Bipartite,
        HasTInduced,
        HasEtInduced,
        Hochster,
        EdgeIdealNormal,
        CoverNormal,
        CoverNotNormalAndBetaLe2,
        DimGe,
        DimEq,
        CliqueGe,
    };

    EventSpec() = default;
    EventSpec(Kind kind, std::size_t t = 0, bool negated = false) : kind_(kind), t_(t), negated_(negated) {
        if (takes_parameter(kind) && t == 0) throw ParameterError("event " + base_name(kind) + " needs a parameter t >= 1");
    }

    static EventSpec parse(std::string_view text) {
        bool negated = false;
        if (text.starts_with("not:")) {
            negated = true;
            text.remove_prefix(4);
        }
        std::string_view name = text;
        std::size_t t = 0;
        bool has_param = false;
        if (const auto colon = text.find(':'); colon != std::string_view::npos) {
            name = text.substr(0, colon);
            const auto digits = text.substr(colon + 1);
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t);
            if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
                throw ParameterError("bad event parameter in '" + std::string(text) + "'");
            }
            has_param = true;
        }
        for (Kind k : all_kinds()) {
            if (base_name(k) != name) continue;
            if (takes_parameter(k) != has_param) {
                throw ParameterError(takes_parameter(k) ? "event '" + std::string(name) + "' needs ':t'"
                                                        : "event '" + std::string(name) + "' takes no parameter");
            }
            return EventSpec(k, t, negated);
        }
        throw ParameterError("unknown event '" + std::string(text) + "'");
    }

    Kind kind() const noexcept { return kind_; }
    std::size_t parameter() const noexcept { return t_; }
    bool negated() const noexcept { return negated_; }

    EventSpec negation() const { return EventSpec(kind_, t_, !negated_); }

    std::string name() const {
        std::string s = negated_ ? "not:" : "";
        s += base_name(kind_);
        if (takes_parameter(kind_)) s += ":" + std::to_string(t_);
        return s;
    }

    bool operator()(const Graph& g) const { return evaluate(g) != negated_; }

    friend bool operator==(const EventSpec&, const EventSpec&) = default;

    static const std::vector<Kind>& all_kinds() {
        static const std::vector<Kind> kinds{Kind::AlwaysTrue,      Kind::HasCycle,    Kind::Bipartite,
                                             Kind::HasTInduced,     Kind::HasEtInduced, Kind::Hochster,
                                             Kind::EdgeIdealNormal, Kind::CoverNormal, Kind::CoverNotNormalAndBetaLe2,
                                             Kind::DimGe,           Kind::DimEq,       Kind::CliqueGe};
        return kinds;
    }

    static std::string base_name(Kind k) {
        switch (k) {
            case Kind::AlwaysTrue: return "always_true";
            case Kind::HasCycle: return "has_cycle";
            case Kind::Bipartite: return "bipartite";
            case Kind::HasTInduced: return "has_T_induced";
            case Kind::HasEtInduced: return "has_Et_induced";
            case Kind::Hochster: return "hochster";
            case Kind::EdgeIdealNormal: return "edge_ideal_normal";
            case Kind::CoverNormal: return "cover_normal";
            case Kind::CoverNotNormalAndBetaLe2: return "cover_not_normal_and_beta_le_2";
            case Kind::DimGe: return "dim_ge";
            case Kind::DimEq: return "dim_eq";
            case Kind::CliqueGe: return "clique_ge";
        }
        return "?";
    }

    static bool takes_parameter(Kind k) {
        return k == Kind::HasEtInduced || k == Kind::DimGe || k == Kind::DimEq || k == Kind::CliqueGe;
    }

private:
    bool evaluate(const Graph& g) const {
        switch (kind_) {
            case Kind::AlwaysTrue: return true;
            case Kind::HasCycle: return has_cycle(g);
            case Kind::Bipartite: return is_bipartite(g);
            case Kind::HasTInduced: return count_induced(g, PatternGraph::two_triangles()) > 0;
            case Kind::HasEtInduced:
                // Y_{E_t} > 0, counted rather than searched so that the identity
                // with dim_ge:t is checked across two code paths.
                return t_ <= g.order() && count_independent_sets(g, t_) > 0;
            case Kind::Hochster: return find_hochster(g).has_value();
            case Kind::EdgeIdealNormal: return !find_hochster(g).has_value();
            case Kind::CoverNormal: return cover_ideal_normality(g) == CoverNormality::Normal;
            case Kind::CoverNotNormalAndBetaLe2: return cover_ideal_normality(g) == CoverNormality::NotNormal;
            case Kind::DimGe: return has_independent_set(g, t_);
            case Kind::DimEq: return has_independent_set(g, t_) && !has_independent_set(g, t_ + 1);
            case Kind::CliqueGe: return has_clique(g, t_);
        }
        return false;
    }

    Kind kind_ = Kind::AlwaysTrue;
    std::size_t t_ = 0;
    bool negated_ = false;
};

/// Example instance of every registered event family (parameterised
/// families at t = 2 and 3).
inline std::vector<EventSpec> registry_examples() {
    using K = EventSpec::Kind;
    return {EventSpec(K::AlwaysTrue),
            EventSpec(K::HasCycle),
            EventSpec(K::Bipartite),
            EventSpec(K::HasTInduced),
            EventSpec(K::HasEtInduced, 3),
            EventSpec(K::Hochster),
            EventSpec(K::EdgeIdealNormal),
            EventSpec(K::CoverNormal),
            EventSpec(K::CoverNotNormalAndBetaLe2),
            EventSpec(K::DimGe, 2),
            EventSpec(K::DimGe, 3),
            EventSpec(K::DimEq, 2),
            EventSpec(K::DimEq, 3),
            EventSpec(K::CliqueGe, 3)};
}

}  // namespace rmideal
