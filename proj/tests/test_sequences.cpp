#include <stdexcept>

#include <gtest/gtest.h>

#include "somos/errors.hpp"
#include "somos/sequences.hpp"
#include "support.hpp"

using namespace somos;
using namespace somos::test;

namespace {
const LinearParams kFib{1, -1, 0, 1};
}

TEST(Lucas, Examples) {
    EXPECT_EQ(lucas_D(4, 3, 2), Rational(15));
    EXPECT_EQ(lucas_D(0, R("7/3"), R("-5")), Rational(0));
    EXPECT_EQ(lucas_D(-1, 1, 2), R("-1/2"));
}

TEST(Lucas, BackwardExtension) {
    const Rational P = R("5/2"), Q = R("-3/7");
    for (long n = 1; n < 12; ++n) EXPECT_EQ(lucas_D(-n, P, Q), -lucas_D(n, P, Q) / Q.pow(n));
    const OrbitWindow w = lucas_window(P, Q, -6, 6);
    for (long n = -4; n <= 4; ++n) EXPECT_EQ(w[n + 2], P * w[n + 1] - Q * w[n]);
}

TEST(Lucas, ZeroQRejected) { EXPECT_THROW(lucas_D(-1, 1, 0), DomainError); }

TEST(Linear, Examples) {
    EXPECT_EQ(linear_T(5, kFib), Rational(5));
    const LinearParams lp{3, 2, R("2/5"), -7};
    EXPECT_EQ(linear_T(0, lp), lp.t0);
    EXPECT_EQ(linear_T(1, lp), lp.t1);
    EXPECT_EQ(linear_T(-1, kFib), Rational(1));
}

TEST(Linear, WindowFollowsRecurrenceBothWays) {
    const LinearParams lp{R("1/2"), R("-3"), 2, R("5/3")};
    const OrbitWindow w = linear_window(lp, -10, 10);
    for (long n = -10; n <= 8; ++n) EXPECT_EQ(w[n + 2], lp.P * w[n + 1] - lp.Q * w[n]);
    for (long n = -10; n <= 10; ++n) EXPECT_EQ(w[n], linear_T(n, lp));
}

TEST(GaleRobinson, Somos4Forward) {
    const OrbitWindow w = somos4_window(0, 8);
    EXPECT_EQ(values(w), Rs({1, 1, 1, 1, 2, 3, 7, 23, 59}));
}

TEST(GaleRobinson, FibonacciAsSomos4) {
    const OrbitWindow w = gale_robinson_extend(GaleRobinsonParams::somos4(-1, 2, Rs({1, 1, 2, 3})), 0, 5);
    EXPECT_EQ(w[4], Rational(5));
    EXPECT_EQ(w[5], Rational(8));
}

TEST(GaleRobinson, Somos4Backward) {
    EXPECT_EQ(somos4_window(-1, 3)[-1], Rational(2));
    // Somos(4) is symmetric: t_{-k} = t_{k+3}.
    const OrbitWindow w = somos4_window(-8, 11);
    for (long k = 1; k <= 8; ++k) EXPECT_EQ(w[-k], w[k + 3]);
}

TEST(GaleRobinson, VanishingTermKeepsPartial) {
    // t4 = 1 - 1 = 0 is the divisor for t8.
    OrbitWindow partial;
    const auto p = GaleRobinsonParams::somos4(1, -1, Rs({1, 1, 1, 1}));
    try {
        gale_robinson_extend(p, 0, 12, &partial);
        FAIL() << "expected VanishingTerm";
    } catch (const VanishingTerm& e) {
        EXPECT_EQ(e.index(), 4);
    }
    EXPECT_EQ(partial.lo(), 0);
    EXPECT_EQ(partial.hi(), 7);
}

TEST(GaleRobinson, ValidateRejectsBadShapes) {
    auto p = somos4_unit();
    p.init = Rs({1, 1, 1});
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = somos4_unit();
    p.init[2] = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = somos4_unit();
    p.q = 3;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    EXPECT_THROW(gale_robinson_extend(somos4_unit(), 8, 2), std::invalid_argument);
    EXPECT_EQ(values(gale_robinson_extend(somos4_unit(), 2, 8)), Rs({1, 1, 2, 3, 7, 23, 59}));
}

TEST(GaleRobinson, GeneralShape) {
    // (5,1,2) with unit data is Somos-5.
    GaleRobinsonParams p;
    p.N = 5, p.p = 1, p.q = 2, p.alpha = 1, p.beta = 1, p.init = Rs({1, 1, 1, 1, 1});
    EXPECT_EQ(values(gale_robinson_extend(p, 0, 11)), Rs({1, 1, 1, 1, 1, 2, 3, 5, 11, 37, 83, 274}));
}

TEST(Subsequence, Examples) {
    const OrbitWindow w = somos4_window(0, 10);
    const OrbitWindow even = subsequence(somos4_window(0, 8), 2, 0);
    EXPECT_EQ(values(even), Rs({1, 1, 2, 7, 59}));
    EXPECT_EQ(subsequence(w, 1, 0), w);
    EXPECT_EQ(values(subsequence(w, 3, 1)), Rs({1, 2, 23, 1529}));
}

TEST(Subsequence, NegativeIndices) {
    const OrbitWindow w = somos4_window(-5, 6);
    const OrbitWindow s = subsequence(w, 2, 1);
    for (long n = s.lo(); n <= s.hi(); ++n) EXPECT_EQ(s[n], w[2 * n + 1]);
}

TEST(Fit, Examples) {
    EXPECT_EQ(fit_somos4_coeffs(somos4_window(0, 11)), std::pair(Rational(1), Rational(1)));
    EXPECT_EQ(fit_somos4_coeffs(subsequence(somos4_window(0, 14), 2, 0)), std::pair(Rational(25), Rational(-29)));
    EXPECT_EQ(fit_somos4_coeffs(OrbitWindow(0, Rs({1, 1, 2, 3, 5, 8, 13, 21}))), std::pair(Rational(-1), Rational(2)));
}

TEST(Fit, InconsistentWindow) {
    EXPECT_THROW(fit_somos4_coeffs(OrbitWindow(0, Rs({1, 1, 1, 1, 2, 3, 7, 24}))), NoConsistentFit);
}
