#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace rmideal;

// Reference values below were computed independently with Python fractions.

TEST(Moments, TwoTriangleExpectation) {
    // C(6,6) * 20 * (1/2)^15
    EXPECT_EQ(expectation_two_triangles(6, Rational(1, 2)), Rational(20, 32768));
    EXPECT_DOUBLE_EQ(expectation_two_triangles(6, 0.5), 20.0 / 32768.0);
    EXPECT_EQ(expectation_two_triangles(10, Rational(0)), Rational(0));
    EXPECT_THROW(expectation_two_triangles(5, 0.5), ParameterError);
}

TEST(Moments, TwoTriangleVarianceBound) {
    EXPECT_EQ(variance_bound_two_triangles(10, Rational(1, 2)), Rational(27296875, 262144));
    EXPECT_NEAR(variance_bound_two_triangles(10, 0.5), 104.12931442260742, 1e-9);
}

TEST(Moments, TwoTriangleChebyshev) {
    EXPECT_THROW(chebyshev_lb_two_triangles(10, 0.0), ParameterError);
    EXPECT_THROW(chebyshev_lb_two_triangles(10, 1.0), ParameterError);
    for (double p : {0.05, 0.2, 0.5, 0.8}) {
        const double v = chebyshev_lb_two_triangles(30, p);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
}

TEST(Moments, EmptyExpectation) {
    EXPECT_EQ(expectation_empty(5, 3, Rational(1, 2)), Rational(5, 4));
    EXPECT_EQ(expectation_empty(5, 2, Rational(0)), Rational(10));
    EXPECT_EQ(expectation_empty(5, 3, Rational(1)), Rational(0));
    EXPECT_THROW(expectation_empty(4, 5, Rational(1, 3)), ParameterError);
}

TEST(Moments, EmptyVarianceBound) {
    EXPECT_EQ(variance_bound_empty(5, 3, Rational(1, 2)), Rational(1125, 32));
    EXPECT_DOUBLE_EQ(variance_bound_empty(5, 3, 0.5), 35.15625);
    EXPECT_THROW(variance_bound_empty(5, 3, 1.0), ParameterError);
}

TEST(Moments, EmptyChebyshev) {
    EXPECT_EQ(chebyshev_lb_empty(20, 3, Rational(0)), Rational(943, 1083));
    for (double p : {0.0, 0.1, 0.5, 0.9, 0.99}) {
        const double v = chebyshev_lb_empty(12, 3, p);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
}

TEST(Moments, MarkovBounds) {
    // The raw expectation, which may exceed 1.
    EXPECT_DOUBLE_EQ(markov_ub_empty(5, 3, 0.5), 1.25);
    EXPECT_EQ(markov_ub_empty(6, 3, Rational(9, 10)), Rational(20, 1000));
    EXPECT_DOUBLE_EQ(markov_ub_cycles(100, 0.001), 0.0011111111111111113);
    EXPECT_THROW(markov_ub_cycles(100, 0.01), DomainError);
    EXPECT_THROW(markov_ub_cycles(100, 0.5), DomainError);
}

TEST(Moments, ExactAndFloatAgree) {
    for (std::size_t n = 6; n <= 30; n += 4) {
        for (int k = 1; k < 10; ++k) {
            const Rational pr(k, 10);
            const double pd = k / 10.0;
            EXPECT_NEAR(to_double(expectation_empty(n, 3, pr)), expectation_empty(n, 3, pd), 1e-9 * (1 + expectation_empty(n, 3, pd)));
            EXPECT_NEAR(to_double(variance_bound_empty(n, 4, pr)), variance_bound_empty(n, 4, pd),
                        1e-9 * (1 + variance_bound_empty(n, 4, pd)));
            EXPECT_NEAR(to_double(chebyshev_lb_two_triangles(n, pr)), chebyshev_lb_two_triangles(n, pd), 1e-12);
        }
    }
}

TEST(Schedule, EvaluatesAndClamps) {
    const auto a = schedule_eval({ScheduleKind::Q, 1.0, 0.5}, 100);
    EXPECT_DOUBLE_EQ(a.q, 0.1);
    EXPECT_DOUBLE_EQ(a.p, 0.9);
    EXPECT_FALSE(a.clamped);
    const auto b = schedule_eval({ScheduleKind::P, 3.0, 0.0}, 10);
    EXPECT_TRUE(b.clamped);
    EXPECT_DOUBLE_EQ(b.p, 1.0);
    EXPECT_THROW(schedule_eval({ScheduleKind::P, 0.0, 1.0}, 10), ParameterError);
    EXPECT_THROW(schedule_eval({ScheduleKind::P, 1.0, -1.0}, 10), ParameterError);
}

TEST(Moments, ReportLeavesUndefinedEntriesEmpty) {
    const auto r = moment_report(10, 0.0, PatternGraph::two_triangles());
    EXPECT_TRUE(r.expectation.has_value());
    EXPECT_FALSE(r.chebyshev_lb.has_value());
    const auto e = moment_report(10, 0.3, PatternGraph::empty(3));
    EXPECT_TRUE(e.variance_bound.has_value());
    EXPECT_TRUE(e.chebyshev_lb.has_value());
}

TEST(Numeric, Binomials) {
    EXPECT_EQ(binomial_exact(52, 5), BigInt(2598960));
    EXPECT_EQ(binomial_exact(3, 5), BigInt(0));
    EXPECT_DOUBLE_EQ(binomial<double>(52, 5), 2598960.0);
    EXPECT_EQ(binomial<Rational>(10, 3), Rational(120));
}

TEST(Numeric, ParseRational) {
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("3/20"), Rational(3, 20));
    EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
    EXPECT_THROW(parse_rational("abc"), ParameterError);
    EXPECT_THROW(parse_rational("1/0"), ParameterError);
    EXPECT_EQ(parse_rational("010/30"), Rational(1, 3));
    EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
}
