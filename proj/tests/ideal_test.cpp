#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace rmideal;

namespace {

std::vector<std::vector<Vertex>> supports(const MonomialIdeal& ideal) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& m : ideal.generators()) out.push_back(m.support());
    return out;
}

}  // namespace

TEST(Monomial, SquarefreeOnly) {
    EXPECT_THROW(Monomial({1, 1}), ParameterError);
    const int exps[] = {1, 0, 2};
    EXPECT_THROW(Monomial::from_exponents(exps), ParameterError);
    const int ok[] = {1, 0, 1};
    EXPECT_EQ(Monomial::from_exponents(ok).to_string(), "x1*x3");
    EXPECT_TRUE(Monomial({0}).divides(Monomial({0, 2})));
    EXPECT_FALSE(Monomial({1}).divides(Monomial({0, 2})));
}

TEST(MonomialIdeal, MinimalisesGenerators) {
    const auto ideal = MonomialIdeal::generated_by(4, {Monomial({0, 1, 2}), Monomial({0, 1}), Monomial({3}), Monomial({0, 1})});
    EXPECT_EQ(supports(ideal), (std::vector<std::vector<Vertex>>{{0, 1}, {3}}));
    EXPECT_EQ(ideal.min_degree(), 1u);
    EXPECT_THROW(MonomialIdeal::generated_by(2, {Monomial({2})}), ParameterError);
}

TEST(EdgeIdeal, RoundTripsThroughGraph) {
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto g = fixtures::random_graph(1 + i % 15, 0.3, 41, i);
        const auto ideal = edge_ideal(g);
        EXPECT_EQ(graph_of_edge_ideal(ideal), g);
        EXPECT_EQ(ideal.generators().size(), g.size());
        EXPECT_EQ(ideal.is_zero(), g.size() == 0);
    }
}

TEST(CoverIdeal, FiveCycleWithChords) {
    const auto g = fixtures::five_cycle_chords();
    EXPECT_EQ(krull_dimension(g), 2u);
    EXPECT_EQ(ideal_height(g), 3u);
    EXPECT_EQ(supports(cover_ideal(g)), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {0, 2, 4}, {1, 2, 4}, {1, 3, 4}}));
}

TEST(CoverIdeal, MatchesMinimalCoverEnumeration) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto g = fixtures::random_graph(2 + i % 11, 0.1 * (1 + i % 9), 43, i);
        if (g.size() == 0) continue;
        const auto ideal = cover_ideal(g);
        EXPECT_EQ(supports(ideal), fixtures::naive_minimal_covers(g));
        // Minimum generator degree is the vertex covering number alpha0 = n - beta0.
        EXPECT_EQ(ideal.min_degree(), ideal_height(g));
    }
}

TEST(CoverIdeal, DegenerateGraphs) {
    EXPECT_TRUE(cover_ideal(Graph(4)).is_unit());
    EXPECT_TRUE(cover_ideal(Graph(0)).is_zero());
    EXPECT_EQ(supports(cover_ideal(Graph::complete(3))), (std::vector<std::vector<Vertex>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Invariants, DimensionAndBounds) {
    EXPECT_EQ(krull_dimension(Graph(6)), 6u);
    EXPECT_EQ(krull_dimension(Graph::complete(6)), 1u);
    EXPECT_EQ(krull_dimension(Graph::cycle(7)), 3u);
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto g = fixtures::random_graph(1 + i % 14, 0.5, 47, i);
        EXPECT_EQ(krull_dimension(g) + ideal_height(g), g.order());
        EXPECT_EQ(reg_upper_bound(g), krull_dimension(g));
        EXPECT_EQ(v_upper_bound(g), krull_dimension(g));
    }
}

TEST(IdealProbability, ExactForm) {
    const std::vector<Monomial> gens{Monomial({0, 1}), Monomial({1, 2})};
    EXPECT_EQ(ideal_probability(3, Rational(1, 3), std::span<const Monomial>(gens)), Rational(2, 27));
    const std::vector<Monomial> cubic{Monomial({0, 1, 2})};
    EXPECT_THROW(ideal_probability(3, 0.5, std::span<const Monomial>(cubic)), ParameterError);
}

TEST(IdealProbability, SumsToOneOverAllGraphs) {
    const std::size_t n = 4;
    Rational total = 0;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const auto ideal = edge_ideal(graph_from_mask(n, mask));
        total += ideal_probability(n, Rational(2, 7), std::span<const Monomial>(ideal.generators()));
    }
    EXPECT_EQ(total, Rational(1));
}
