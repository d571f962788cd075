#include <gtest/gtest.h>

#include "somos/errors.hpp"
#include "somos/laurent.hpp"
#include "support.hpp"

using namespace somos;
using namespace somos::test;

namespace {
LaurentPoly t(int k) { return LaurentPoly::variable(4, k); }
LaurentPoly one() { return LaurentPoly::constant(4, 1); }
LaurentPoly inv(int k) {
    std::vector<int> e(4, 0);
    e[static_cast<std::size_t>(k)] = -1;
    return LaurentPoly::monomial(4, e);
}
// alpha t1 t3 + beta t2^2, the numerator of t4.
LaurentPoly t4_numerator() { return LaurentPoly::alpha(4) * t(1) * t(3) + LaurentPoly::beta(4) * t(2) * t(2); }
}  // namespace

TEST(LaurentMul, Examples) {
    EXPECT_EQ(laurent_mul(t(0), inv(0)), one());
    EXPECT_EQ(laurent_mul(t(1) + t(2), one()), t(1) + t(2));
    const LaurentPoly step = laurent_mul(t4_numerator(), inv(0));
    const LaurentPoly expected = LaurentPoly::monomial(4, {-1, 1, 0, 1}, 1, 1, 0) +
                                 LaurentPoly::monomial(4, {-1, 0, 2, 0}, 1, 0, 1);
    EXPECT_EQ(step, expected);
}

TEST(LaurentMul, CancellationRemovesTerms) {
    EXPECT_TRUE((t(1) - t(1)).is_zero());
    EXPECT_EQ((t(1) + t(2)) * (t(1) - t(2)), t(1) * t(1) - t(2) * t(2));
}

TEST(LaurentDiv, Examples) {
    const auto q = laurent_exact_div(t(1) * t(1) - t(2) * t(2), t(1) - t(2));
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, t(1) + t(2));

    const LaurentPoly mono = LaurentPoly::monomial(4, {1, 0, 3, 0});
    const LaurentPoly a = t4_numerator() + inv(3);
    const auto r = laurent_exact_div(a, mono);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * mono, a);

    EXPECT_FALSE(laurent_exact_div(t(1) + t(2), t(1) + t(3)).has_value());
}

TEST(LaurentDiv, Errors) {
    EXPECT_THROW(laurent_exact_div(t(1), LaurentPoly(4)), DivisionByZeroPoly);
    EXPECT_THROW(t(1) + LaurentPoly::variable(5, 1), ArityMismatch);
}

TEST(LaurentDiv, RoundTripOnProducts) {
    const LaurentPoly a = LaurentPoly::alpha(4) * t(0) * inv(2) + t(3) * t(3) - LaurentPoly::beta(4);
    const LaurentPoly b = t(1) * inv(0) + LaurentPoly::constant(4, 3) * t(2);
    const auto q = laurent_exact_div(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
}

TEST(SymbolicIterate, FirstStep) {
    const SymbolicOrbit o = symbolic_iterate(4, 1, 2, 4);
    EXPECT_EQ(o.at(4), laurent_mul(t4_numerator(), inv(0)));
    EXPECT_EQ(o.at(4).to_string(), "a^1*b^0*t0^-1*t1^1*t3^1 + a^0*b^1*t0^-1*t2^2");
}

TEST(SymbolicIterate, Somos4ToT12) {
    const SymbolicOrbit o = symbolic_iterate(4, 1, 2, 12);
    // Regression fixture: distinct t-monomials of t4 .. t12.
    const std::vector<std::size_t> counts{2, 3, 6, 12, 17, 31, 49, 71, 110};
    EXPECT_EQ(o.monomial_counts(), counts);
    const std::vector<Rational> unit(4, Rational(1));
    EXPECT_EQ(evaluate(o.at(7), 1, 1, unit), Rational(23));
    const OrbitWindow w = somos4_window(0, 12);
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(evaluate(o.at(n), 1, 1, unit), w[n]);
}

TEST(SymbolicIterate, Guards) {
    EXPECT_THROW(symbolic_iterate(4, 1, 2, 15), GuardExceeded);
    EXPECT_THROW(symbolic_iterate(9, 1, 2, 10), GuardExceeded);
    EXPECT_THROW(symbolic_iterate(4, 2, 1, 8), std::invalid_argument);
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(evaluate(inv(0), 1, 1, {2, 1, 1, 1}), R("1/2"));
    EXPECT_EQ(evaluate(symbolic_iterate(4, 1, 2, 4).at(4), 1, 1, Rs({1, 1, 1, 1})), Rational(2));
    EXPECT_EQ(evaluate(LaurentPoly(4), R("3/7"), 5, {1, 2, 3, 4}), Rational(0));
    EXPECT_THROW(evaluate(t(1), 1, 1, {1, 0, 1, 1}), ZeroSubstitution);
}

TEST(Specializations, GaleRobinsonShapes) {
    TrialConfig cfg;
    cfg.trials = 20;
    for (auto [N, p, q] : {std::tuple{5, 1, 2}, {6, 1, 3}, {7, 1, 2}}) {
        const SymbolicOrbit o = symbolic_iterate(N, p, q, N + 6);
        const IdentityReport r = verify_laurent_specializations(o, cfg);
        EXPECT_TRUE(r.passed()) << N << "," << p << "," << q;
        EXPECT_EQ(r.trials_run, 20);
    }
}
