#include <algorithm>

#include <gtest/gtest.h>

#include "somos/identities.hpp"
#include "somos/report.hpp"
#include "support.hpp"

using namespace somos;
using namespace somos::test;

namespace {
TrialConfig small(long trials = 40, std::uint64_t seed = 42) {
    TrialConfig c;
    c.trials = trials;
    c.seed = seed;
    return c;
}
Rational F(long n) { return lucas_D(n, 1, -1); }
}  // namespace

// Hand-evaluated instances from the identity catalogue.
TEST(IdentityExamples, Vajda) {
    EXPECT_EQ(F(3) * F(5) - F(2) * F(6), Rational(2));
    const LinearParams lucas{1, -1, 2, 1};
    auto L = [&](long n) { return linear_T(n, lucas); };
    const Rational c = lucas.Q * lucas.t0 * lucas.t0 - lucas.P * lucas.t0 * lucas.t1 + lucas.t1 * lucas.t1;
    EXPECT_EQ(c, Rational(-5));
    EXPECT_EQ(L(2) * L(2) - L(1) * L(3), c * lucas.Q * F(1) * F(1));
}

TEST(IdentityExamples, Convolution) {
    const Rational P = 3, Q = 2;
    auto D = [&](long n) { return lucas_D(n, P, Q); };
    EXPECT_EQ(Q * D(2), D(2) * D(3) - D(1) * D(4));
    EXPECT_EQ(Q * D(2), Rational(6));
}

TEST(IdentityExamples, CyclicSumFibonacci) {
    const long a[] = {1, 2, 3};
    Rational s = 0;
    for (int j = 0; j < 3; ++j) {
        const long x = a[j], y = a[(j + 1) % 3];
        s += F(x - y) * F(x + y) / Rational(-1).pow(x);
    }
    EXPECT_TRUE(s.is_zero());
}

TEST(IdentityExamples, Lucas) {
    // Q^{u-1} D_{n-u} D_{n+u} = D_u^2 D_{n-1} D_{n+1} - D_{u-1} D_{u+1} D_n^2
    EXPECT_EQ(Rational(-1) * F(2) * F(6), F(2) * F(2) * F(3) * F(5) - F(1) * F(3) * F(4) * F(4));
    EXPECT_EQ(Rational(-8), Rational(10) - Rational(18));
    auto D = [](long n) { return lucas_D(n, 3, 2); };
    EXPECT_EQ(Rational(2) * D(1) * D(5), D(2) * D(2) * D(2) * D(4) - D(1) * D(3) * D(3) * D(3));
    EXPECT_EQ(Rational(2) * D(1) * D(5), Rational(62));
}

TEST(IdentityExamples, LinearSomos4) {
    for (long n = -4; n < 8; ++n) EXPECT_EQ(F(n) * F(n + 4) + F(n + 1) * F(n + 3) - 2 * F(n + 2) * F(n + 2), Rational(0));
    // (P, Q) = (3, 2) with unit seeds is constant: 1 = 9/2 - 7/2.
    const Rational P = 3, Q = 2;
    EXPECT_EQ(P * P / Q - (P * P - Q) / Q, Rational(1));
}

TEST(IdentityExamples, GaleRobinsonHandCheck) {
    const OrbitWindow t = somos4_window(0, 10);
    EXPECT_EQ(t[2] * t[7], -t[3] * t[6] + 5 * t[4] * t[5]);
    EXPECT_EQ(t[1] * t[7], t[3] * t[5] + 5 * t[4] * t[4]);
}

TEST(Verifiers, AllPassOnSmallRuns) {
    const TrialConfig cfg = small();
    for (const IdentityReport& r :
         {verify_convolution(cfg), verify_vajda(cfg), verify_cyclic_sum(2, cfg), verify_cyclic_sum(5, cfg),
          verify_cyclic_sum(8, cfg), verify_four_linear(cfg), verify_lucas_identity(cfg), verify_linear_somos4(cfg),
          verify_elliptic_relation(cfg), verify_gale_robinson_random(small(5)), verify_subsequences(small(5))}) {
        EXPECT_TRUE(r.passed()) << r.identity;
        EXPECT_GT(r.checks_run, 0) << r.identity;
    }
}

TEST(Verifiers, CyclicSumBounds) {
    EXPECT_THROW(verify_cyclic_sum(1, small()), std::invalid_argument);
    EXPECT_THROW(verify_cyclic_sum(9, small()), std::invalid_argument);
}

TEST(Verifiers, LucasNotesLiteralReading) {
    const IdentityReport r = verify_lucas_identity(small(5));
    ASSERT_FALSE(r.notes.empty());
    const bool mentions = std::any_of(r.notes.begin(), r.notes.end(),
                                      [](const std::string& s) { return s.find("-8") != std::string::npos; });
    EXPECT_TRUE(mentions);
}

TEST(Verifiers, InjectedFaultIsCaught) {
    TrialConfig cfg = small(10);
    cfg.inject_vajda_fault = true;
    const IdentityReport r = verify_vajda(cfg);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.failures.front().lhs.empty());
}

TEST(Verifiers, ZeroTrialsIsVacuous) {
    const IdentityReport r = verify_convolution(small(0));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.trials_run, 0);
}

TEST(Verifiers, GaleRobinsonOnSomos4Window) {
    const OrbitWindow t = somos4_window(0, 19);
    CompanionSeq W(OrbitInvariants::from(1, 1, 4));
    const IdentityReport r = verify_gale_robinson_identity(t, W, 10);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.checks_run, 500);
}

TEST(Verifiers, SerialEqualsParallel) {
    TrialConfig par = small(30, 7), ser = par;
    ser.exec = Execution::Serial;
    EXPECT_EQ(report::to_json(verify_all(par)).dump(), report::to_json(verify_all(ser)).dump());
    TrialConfig fp = small(15, 3);
    fp.inject_vajda_fault = true;
    TrialConfig fs = fp;
    fs.exec = Execution::Serial;
    EXPECT_EQ(report::to_json(verify_vajda(fp)).dump(), report::to_json(verify_vajda(fs)).dump());
}

TEST(Verifiers, SeedChangesDraws) {
    const auto a = report::to_json(verify_vajda(small(5, 1))).dump();
    const auto b = report::to_json(verify_vajda(small(5, 1))).dump();
    EXPECT_EQ(a, b);
    TrialConfig f1 = small(5, 1), f2 = small(5, 2);
    f1.inject_vajda_fault = f2.inject_vajda_fault = true;
    EXPECT_NE(report::to_json(verify_vajda(f1)).dump(), report::to_json(verify_vajda(f2)).dump());
}

TEST(LambdaShift, Orbit) {
    EXPECT_EQ(lambda_shift({4, 4, 1, 3}), (std::vector<int>{4, 1, 1, 2}));
    EXPECT_EQ(lambda_shift({3, 1, 2}), (std::vector<int>{3, 1, 2}));
}

TEST(LambdaEnum, D3AndD4) {
    const LambdaEnumeration e3 = enumerate_lambda_sets(3, small(100));
    ASSERT_EQ(e3.classes.size(), 1u);
    EXPECT_EQ(e3.classes[0], (std::vector<std::vector<int>>{{3, 1, 2}}));
    EXPECT_TRUE(e3.shift_closed);

    const LambdaEnumeration e4 = enumerate_lambda_sets(4, small(100));
    ASSERT_EQ(e4.classes.size(), 1u);
    const std::vector<std::vector<int>> cls{{4, 4, 1, 3}, {4, 1, 1, 2}, {3, 1, 2, 2}, {3, 4, 2, 3}};
    EXPECT_EQ(e4.classes[0], cls);
    EXPECT_EQ(e4.status, "verified-at-random");
}

TEST(LambdaEnum, ParallelMatchesSerial) {
    TrialConfig ser = small(50);
    ser.exec = Execution::Serial;
    EXPECT_EQ(report::to_json(enumerate_lambda_sets(5, small(50))).dump(),
              report::to_json(enumerate_lambda_sets(5, ser)).dump());
    EXPECT_THROW(enumerate_lambda_sets(2, small()), std::invalid_argument);
}
