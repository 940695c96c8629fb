#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace rmideal;

namespace {

std::vector<BigInt> big(std::initializer_list<int> xs) {
    std::vector<BigInt> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(ExactOracle, SmallPolynomials) {
    EXPECT_EQ(enumerate_event(3, EventSpec::parse("has_cycle")).coeffs(), big({0, 0, 0, 1}));
    EXPECT_EQ(enumerate_event(4, EventSpec::parse("bipartite")).coeffs(), big({1, 6, 15, 16, 3, 0, 0}));
    EXPECT_EQ(enumerate_event(4, EventSpec::parse("has_cycle")).coeffs(), big({0, 0, 0, 4, 15, 6, 1}));
}

TEST(ExactOracle, CertainEventSumsToOne) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto poly = enumerate_event(n, EventSpec::parse("always_true"));
        EXPECT_EQ(poly, ProbPolynomial::all_graphs(n));
        EXPECT_EQ(poly.evaluate_exact(Rational(2, 9)), Rational(1));
        EXPECT_NEAR(poly.evaluate(0.37), 1.0, 1e-14);
    }
}

TEST(ExactOracle, ComplementaryEventsPartition) {
    for (const auto& ev : registry_examples()) {
        const auto a = enumerate_event(5, ev);
        const auto b = enumerate_event(5, ev.negation());
        EXPECT_EQ(a + b, ProbPolynomial::all_graphs(5)) << ev.name();
    }
}

TEST(ExactOracle, ComplementSymmetry) {
    // G has an independent t-set iff its complement has a t-clique, and the
    // complement of an m-edge graph has M - m edges.
    for (std::size_t n = 3; n <= 6; ++n) {
        for (std::size_t t = 2; t <= n; ++t) {
            const auto dim = enumerate_event(n, EventSpec(EventSpec::Kind::DimGe, t));
            const auto clique = enumerate_event(n, EventSpec(EventSpec::Kind::CliqueGe, t));
            EXPECT_EQ(dim.reversed(), clique);
        }
    }
}

TEST(ExactOracle, EmptyPatternExpectationIsClosedForm) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t t = 2; t <= n; ++t) {
            const auto poly = enumerate_expectation(n, PatternGraph::empty(t));
            for (int k = 0; k <= 10; ++k) {
                EXPECT_EQ(poly.evaluate_exact(Rational(k, 10)), expectation_empty(n, t, Rational(k, 10)));
            }
        }
    }
}

TEST(ExactOracle, TwoTriangleCoefficient) {
    const auto pat = PatternGraph::two_triangles();
    EXPECT_EQ(count_labeled_copies(pat, 6), 10u);
    const auto poly = enumerate_expectation(6, pat);
    EXPECT_EQ(poly.coeffs()[6], BigInt(10));
    // E[Y_T] = 10 p^6 q^9 at n=6, half the closed-form value with coefficient 20.
    EXPECT_EQ(poly.evaluate_exact(Rational(1, 2)) * 2, expectation_two_triangles(6, Rational(1, 2)));
}

TEST(ExactOracle, LabeledCopies) {
    EXPECT_EQ(count_labeled_copies(PatternGraph::empty(4), 4), 1u);
    EXPECT_THROW(count_labeled_copies(PatternGraph::empty(4), 5), ParameterError);
}

TEST(ExactOracle, JobsDoNotChangeResult) {
    const auto ev = EventSpec::parse("dim_ge:3");
    const auto ref = enumerate_event(7, ev, {.jobs = 1});
    for (std::size_t jobs : {2, 3, 8}) EXPECT_EQ(enumerate_event(7, ev, {.jobs = jobs}), ref);
}

TEST(ExactOracle, CapsEnforced) {
    EXPECT_THROW(enumerate_event(8, EventSpec::parse("has_cycle")), ResourceError);
    EXPECT_THROW(enumerate_event(9, EventSpec::parse("has_cycle"), {.cap = 9, .allow_eight = true}), ResourceError);
    EXPECT_THROW(enumerate_event(7, EventSpec::parse("has_cycle"), {.cap = 6}), ResourceError);
}

TEST(ExactOracle, PolynomialValidation) {
    EXPECT_THROW(ProbPolynomial(3, big({1, 2})), ParameterError);
    const auto poly = ProbPolynomial::all_graphs(3);
    EXPECT_THROW(poly.evaluate(1.5), ParameterError);
    EXPECT_THROW(poly.evaluate_exact(Rational(-1, 2)), ParameterError);
}

TEST(ExactOracle, HochsterNeedsSixVertices) {
    EXPECT_EQ(enumerate_event(5, EventSpec::parse("hochster")), enumerate_event(5, EventSpec::parse("not:always_true")));
    // Exactly the two-disjoint-triangle graphs at n=6.
    const auto poly = enumerate_event(6, EventSpec::parse("hochster"));
    EXPECT_EQ(poly.coeffs()[6], BigInt(10));
    for (std::size_t m = 0; m < poly.coeffs().size(); ++m) {
        if (m != 6) {
            EXPECT_EQ(poly.coeffs()[m], BigInt(0));
        }
    }
}
