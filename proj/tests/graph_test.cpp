#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

using namespace rmideal;

TEST(VertexSet, BasicOperations) {
    auto s = VertexSet::of(130, {0, 64, 129});
    EXPECT_EQ(s.count(), 3u);
    EXPECT_TRUE(s.contains(64));
    EXPECT_FALSE(s.contains(63));
    EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 64, 129}));
    EXPECT_EQ((~s).count(), 127u);
    s.erase_through(64);
    EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{129}));
    EXPECT_THROW(s.insert(130), ParameterError);
}

TEST(Graph, ConstructionValidates) {
    EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), ParameterError);
    EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), ParameterError);
    EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), ParameterError);
    const auto g = Graph::from_edges(4, {{2, 1}, {0, 3}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
}

TEST(Graph, ComplementIsInvolution) {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto g = fixtures::random_graph(1 + i % 20, 0.4, 3, i);
        EXPECT_EQ(complement(complement(g)), g);
        EXPECT_EQ(g.size() + complement(g).size(), g.order() * (g.order() - 1) / 2);
    }
}

TEST(Graph, InducedRelabelsInOrder) {
    const auto g = fixtures::kite_tail();
    const std::vector<Vertex> keep{0, 1, 3, 4, 5};
    const auto h = induced(g, std::span<const Vertex>(keep));
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 4}, {1, 4}, {2, 3}}));
}

TEST(Graph, CyclesAndBipartiteness) {
    EXPECT_FALSE(has_cycle(Graph(5)));
    EXPECT_TRUE(has_cycle(Graph::cycle(4)));
    EXPECT_TRUE(is_bipartite(Graph::cycle(6)));
    EXPECT_FALSE(is_bipartite(Graph::cycle(7)));
    for (std::uint64_t i = 0; i < 300; ++i) {
        const auto g = fixtures::random_graph(1 + i % 12, 0.25, 11, i);
        EXPECT_EQ(is_bipartite(g), fixtures::naive_bipartite(g)) << graph_to_text(g);
    }
}

TEST(Sampling, Extremes) {
    EXPECT_EQ(sample_er({5, 0.0, 1, 0}).size(), 0u);
    EXPECT_EQ(sample_er({3, 1.0, 7, 0}), Graph::complete(3));
    EXPECT_THROW(sample_er({3, 1.5, 7, 0}), ParameterError);
    EXPECT_THROW(sample_er({3, -0.1, 7, 0}), ParameterError);
}

TEST(Sampling, DeterministicPerStream) {
    EXPECT_EQ(sample_er({30, 0.5, 42, 9}), sample_er({30, 0.5, 42, 9}));
    EXPECT_NE(sample_er({30, 0.5, 42, 9}), sample_er({30, 0.5, 42, 10}));
    EXPECT_NE(sample_er({30, 0.5, 42, 9}), sample_er({30, 0.5, 43, 9}));
}

TEST(Sampling, EdgeFrequencyMatchesP) {
    std::size_t edges = 0;
    const std::size_t trials = 2000;
    for (std::uint64_t i = 0; i < trials; ++i) edges += sample_er({20, 0.3, 5, i}).size();
    const double mean = static_cast<double>(edges) / (trials * 190.0);
    EXPECT_NEAR(mean, 0.3, 0.005);
}

TEST(StableSets, IndependenceMatchesSubsetSearch) {
    for (std::uint64_t i = 0; i < 300; ++i) {
        const auto g = fixtures::random_graph(1 + i % 14, 0.1 * (1 + i % 9), 17, i);
        const auto alpha = independence_number(g);
        EXPECT_EQ(alpha, fixtures::naive_independence_number(g));
        EXPECT_EQ(clique_number(g), fixtures::naive_clique_number(g));
        EXPECT_EQ(alpha, clique_number(complement(g)));
        EXPECT_TRUE(has_independent_set(g, alpha));
        EXPECT_FALSE(has_independent_set(g, alpha + 1));
    }
}

TEST(StableSets, EdgeCases) {
    EXPECT_EQ(independence_number(Graph(0)), 0u);
    EXPECT_EQ(independence_number(Graph(7)), 7u);
    EXPECT_EQ(independence_number(Graph::complete(7)), 1u);
    EXPECT_TRUE(has_independent_set(Graph(0), 0));
    EXPECT_FALSE(has_independent_set(Graph(2), 3));
}

TEST(StableSets, MaximalIndependentSetsAreComplementsOfMinimalCovers) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto g = fixtures::random_graph(1 + i % 12, 0.35, 23, i);
        std::vector<std::vector<Vertex>> covers;
        for (const auto& s : maximal_independent_sets(g)) covers.push_back((~s).to_vector());
        std::sort(covers.begin(), covers.end());
        EXPECT_EQ(covers, fixtures::naive_minimal_covers(g));
    }
}

TEST(StableSets, EnumerationLimit) {
    // Disjoint union of 12 edges has 2^12 maximal independent sets.
    Graph g(24);
    for (Vertex v = 0; v < 24; v += 2) g.add_edge(v, v + 1);
    EXPECT_EQ(maximal_independent_sets(g).size(), 4096u);
    EXPECT_THROW(maximal_independent_sets(g, 1000), ResourceError);
}

TEST(Patterns, CountInducedAgainstIsomorphismSearch) {
    const auto t = PatternGraph::two_triangles();
    for (std::uint64_t i = 0; i < 80; ++i) {
        const auto g = fixtures::random_graph(6 + i % 4, 0.5, 29, i);
        EXPECT_EQ(count_induced(g, t), fixtures::naive_count_induced(g, t.graph()));
        for (std::size_t k = 2; k <= 4; ++k) {
            const auto e = PatternGraph::empty(k);
            EXPECT_EQ(count_induced(g, e), fixtures::naive_count_induced(g, e.graph()));
        }
    }
}

TEST(Patterns, Parse) {
    EXPECT_EQ(PatternGraph::parse("T").kind(), PatternGraph::Kind::TwoTriangles);
    EXPECT_EQ(PatternGraph::parse("E3").order(), 3u);
    EXPECT_EQ(PatternGraph::parse("E_4").order(), 4u);
    EXPECT_THROW(PatternGraph::parse("E1"), ParameterError);
    EXPECT_THROW(PatternGraph::parse("X"), ParameterError);
}
