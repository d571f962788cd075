#include <gtest/gtest.h>

#include "somos/lattice.hpp"
#include "support.hpp"

using namespace somos;
using namespace somos::test;

namespace {
OrbitWindow somos5_unit(long hi) {
    return gale_robinson_extend(GaleRobinsonParams::somosN(5, 1, 1, Rs({1, 1, 1, 1, 1})), 0, hi);
}
NonAutoSomosParams nonauto_124() { return {4, 1, 2, 1, Rs({1, 1, 1, 1})}; }
OrbitWindow constant_y(const Rational& c, long len) {
    return OrbitWindow(0, std::vector<Rational>(static_cast<std::size_t>(len), c));
}
}  // namespace

TEST(HN, Examples) {
    EXPECT_EQ(H_N_of_orbit(somos4_window(0, 8), 4, 1, 1), Rational(4));
    const OrbitWindow s5 = somos5_unit(14);
    EXPECT_EQ(values(OrbitWindow(0, {s5.values().begin(), s5.values().begin() + 10})),
              Rs({1, 1, 1, 1, 1, 2, 3, 5, 11, 37}));
    EXPECT_EQ(H_N_of_orbit(s5, 5, 1, 1), Rational(5));
    for (const Rational& h : H_N_along(s5, 5, 1, 1)) EXPECT_EQ(h, Rational(5));
}

TEST(HN, AgreesWithSomos4FirstIntegralOnRandomOrbit) {
    const auto p = GaleRobinsonParams::somos4(R("3/2"), R("-2/7"), {2, R("-1/3"), 5, R("4/9")});
    const OrbitWindow t = gale_robinson_extend(p, 0, 12);
    const Rational h = H_N_of_orbit(t, 4, p.alpha, p.beta);
    for (const Rational& x : H_N_along(t, 4, p.alpha, p.beta)) EXPECT_EQ(x, h);
}

TEST(YF, Examples) {
    EXPECT_EQ(y_from_t(constant_y(1, 8)), constant_y(1, 5));
    const OrbitWindow y = y_from_t(somos4_window(0, 8));
    EXPECT_EQ(y[0], Rational(1));
    EXPECT_EQ(y[1], Rational(2));
    EXPECT_EQ(y[2], R("3/2"));
    EXPECT_EQ(y[4], R("46/21"));
    const OrbitWindow f = f_from_t(somos4_window(0, 8));
    for (long n = y.lo(); n <= y.hi(); ++n) EXPECT_EQ(f[n] * f[n + 1], y[n]);
}

TEST(Residual, Examples) {
    const OrbitWindow t = somos5_unit(16);
    const Rational H = H_N_of_orbit(t, 5, 1, 1);
    const OrbitWindow res = y_equation_residual(y_from_t(t), 5, H);
    for (const Rational& r : res.values()) EXPECT_TRUE(r.is_zero());
    const OrbitWindow flat = y_equation_residual(constant_y(R("7/3"), 12), 4, R("-11"));
    for (const Rational& r : flat.values()) EXPECT_TRUE(r.is_zero());

    OrbitWindow y = y_from_t(somos4_window(0, 16));
    y[6] += 1;
    const OrbitWindow bad = y_equation_residual(y, 4, 4);
    bool any = false;
    for (long n = bad.lo(); n <= bad.hi(); ++n) {
        const bool touches = n <= 6 && 6 <= n + 3;  // y_n .. y_{n+3}
        if (!touches) {
            EXPECT_TRUE(bad[n].is_zero()) << n;
        }
        any = any || !bad[n].is_zero();
    }
    EXPECT_TRUE(any);
}

TEST(Residual, FloatVariant) {
    const OrbitWindow y = y_from_t(somos5_unit(16));
    std::vector<double> v;
    for (const auto& r : y.values()) v.push_back(r.to_double());
    EXPECT_LT(y_equation_max_residual(Window<double>(y.lo(), v), 5, 5.0), 1e-12);
}

TEST(Integrals, BetaN) {
    const OrbitWindow y4 = y_from_t(somos4_window(0, 14));
    for (long n = 0; n < 6; ++n) EXPECT_EQ(beta_N_integral(y4, 4, 4, n), Rational(1));
    const OrbitWindow y5 = y_from_t(somos5_unit(14));
    for (long n = 0; n < 6; ++n) EXPECT_EQ(beta_N_integral(y5, 5, 5, n), Rational(1));
    const Rational c = R("2/5"), H = R("-3");
    EXPECT_EQ(beta_N_integral(constant_y(c, 6), 4, H, 0), c * (3 * c - H));
}

TEST(Integrals, IN) {
    const OrbitWindow y = y_from_t(somos4_window(0, 14));
    const Rational i0 = I_N_integral(y, 4, 4, 0);
    for (long n = 1; n <= 4; ++n) EXPECT_EQ(I_N_integral(y, 4, 4, n), i0);
    const Rational H = R("5/2");
    EXPECT_EQ(I_N_integral(constant_y(1, 6), 4, H, 0), 4 - H);
}

TEST(Alpha2Integral, Autonomous) {
    const OrbitWindow t = somos4_window(0, 14);
    const OrbitWindow f = f_from_t(t);
    for (long n = 0; n < 6; ++n) EXPECT_EQ(alpha_2integral(f, 4, 1, 4, n), std::pair(Rational(1), Rational(1)));
}

TEST(Alpha2Integral, NonautonomousAndProductRelation) {
    const NonAutoSomosParams p = nonauto_124();
    const OrbitWindow t = nonauto_extend(p, 0, 16);
    EXPECT_EQ(t[4], Rational(2));
    EXPECT_EQ(t[5], Rational(5));
    const OrbitWindow f = f_from_t(t);
    const Rational H = H_N_nonauto(t, p);
    for (long n = 0; n < 8; ++n) {
        const auto [a0, a1] = alpha_2integral(f, 4, p.beta, H, n);
        EXPECT_EQ(a0, p.alpha_at(n)) << n;
        EXPECT_EQ(a1, p.alpha_at(n + 1)) << n;
        EXPECT_EQ(H_N_nonauto(t, p, n), H);
    }
    const LatticeConstants k = lattice_constants(t, 4, H);
    EXPECT_EQ(k.beta_N, p.beta);
    EXPECT_EQ(p.alpha_even * p.alpha_odd, k.I_N - k.H_N * k.beta_N);
    const OrbitWindow res = y_equation_residual(y_from_t(t), 4, H);
    for (const Rational& r : res.values()) EXPECT_TRUE(r.is_zero());
}

TEST(Nonauto, EqualAlphasIsAutonomous) {
    const NonAutoSomosParams p{6, R("3/2"), R("3/2"), R("1/3"), Rs({1, 2, 1, 3, 1, 1})};
    GaleRobinsonParams g = GaleRobinsonParams::somosN(6, p.alpha_even, p.beta, p.init);
    EXPECT_EQ(nonauto_extend(p, -4, 14), gale_robinson_extend(g, -4, 14));
    EXPECT_THROW(nonauto_extend({4, 1, 1, 1, Rs({1, 1, 1})}, 0, 5), std::invalid_argument);
}

TEST(VerifyLattice, RandomOrbits) {
    TrialConfig cfg;
    cfg.trials = 4;
    const IdentityReport r = verify_lattice(cfg, 4, 8, 20);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.checks_run, 1000);
}
