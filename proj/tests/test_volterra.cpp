#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "somos/errors.hpp"
#include "somos/lattice.hpp"
#include "somos/volterra.hpp"
#include "support.hpp"

using namespace somos;
using namespace somos::test;

namespace {
double rk4_oracle(const RiccatiSolution& sol, double x) { return riccati_rk4(sol, x, std::lround(x / 1e-5)); }

TauFamily tau_family(const LinearParams& lp, std::size_t order) {
    return [lp, order](long n) { return tau_series(n, lp, order); };
}

Window<double> closed_window(const LinearParams& lp, const RiccatiSolution& sol, long lo, long hi, double x) {
    std::vector<double> v;
    for (long n = lo; n <= hi; ++n) v.push_back(Y_closed(n, x, lp, sol));
    return {lo, v};
}
}  // namespace

TEST(Riccati, Examples) {
    for (auto [P, Q] : {std::pair{3, 2}, {2, 1}, {1, 1}, {1, -1}}) {
        const RiccatiSolution sol = make_riccati(P, Q);
        EXPECT_EQ(riccati_eval(sol, 0.0), 0.0);
        EXPECT_NEAR(riccati_eval(sol, 0.1), rk4_oracle(sol, 0.1), 1e-9) << P << "," << Q;
    }
    EXPECT_EQ(make_riccati(3, 2).kind, RiccatiSolution::Kind::DistinctReal);
    EXPECT_EQ(make_riccati(2, 1).kind, RiccatiSolution::Kind::Repeated);
    EXPECT_EQ(make_riccati(1, 1).kind, RiccatiSolution::Kind::ComplexPair);
    EXPECT_THROW(make_riccati(1, 0), ZeroQ);
}

TEST(Riccati, RootsAndPoles) {
    const RiccatiSolution sol = make_riccati(3, 2);
    EXPECT_EQ(sol.r_plus.radicand(), Rational(1));
    EXPECT_EQ((sol.r_plus + sol.r_minus).canonicalize().rat_part(), Rational(3));
    EXPECT_EQ((sol.r_plus * sol.r_minus).canonicalize().rat_part(), Rational(2));

    const RiccatiSolution c = make_riccati(1, 1);
    ASSERT_TRUE(std::isfinite(c.pole_forward));
    EXPECT_THROW(riccati_eval(c, c.pole_forward + 0.01), Pole);
    const double x = 0.9 * c.pole_forward;
    EXPECT_NEAR(riccati_eval(c, x), rk4_oracle(c, x), 1e-7 * std::max(1.0, std::abs(riccati_eval(c, x))));
}

TEST(BSeries, Examples) {
    EXPECT_EQ(B_series(1, -1, 3), TruncSeries({0, 1, R("1/2"), R("-1/6")}));
    EXPECT_EQ(B_series(3, 2, 2)[2], R("-27/4"));
    EXPECT_THROW(B_series(1, 1, 41), GuardExceeded);
}

TEST(BSeries, SatisfiesRiccati) {
    const Rational P = R("-2/3"), Q = R("5/4");
    const TruncSeries B = B_series(P, Q, 12);
    const TruncSeries rhs = (P / Q) * (B * (B - TruncSeries::constant(P, 12))) + TruncSeries::constant(P, 12);
    EXPECT_EQ(B.derivative(), rhs.truncate(11));
}

TEST(ASeries, Examples) {
    const auto polys = A_q_polynomials(5);
    EXPECT_EQ(polys[1], (std::vector<Integer>{1}));
    EXPECT_EQ(polys[2], (std::vector<Integer>{1}));
    EXPECT_EQ(polys[3], (std::vector<Integer>{1, 2}));
    EXPECT_EQ(polys[4], (std::vector<Integer>{1, 8}));
    EXPECT_EQ(polys[5], (std::vector<Integer>{1, 22, 16}));
    EXPECT_TRUE(A_series_check(0, 20).is_zero());
    EXPECT_TRUE(A_series_check(R("1/4"), 12).is_zero());
    EXPECT_EQ(A_series(0, 6), series_exp_scaled(1, 6) - TruncSeries::constant(1, 6));
}

TEST(Tau, ClosedFormAtZeroAndResiduals) {
    const LinearParams lp{3, 2, 1, R("5/2")};
    const RiccatiSolution sol = make_riccati(lp.P, lp.Q);
    for (long n = -3; n <= 6; ++n) EXPECT_DOUBLE_EQ(tau_closed(n, 0.0, lp, sol), linear_T(n, lp).to_double());
    for (double x : {0.01, 0.05, 0.1, 0.2})
        for (long n = -2; n <= 5; ++n) {
            EXPECT_LT(bilinear_residual(n, x, lp, sol), 1e-8) << n << " " << x;
            EXPECT_LT(volterra_residual(n, x, lp, sol), 1e-8) << n << " " << x;
        }
}

TEST(Tau, ExactSeriesResiduals) {
    const LinearParams lp{R("-3/2"), R("2/3"), 2, R("-1/3")};
    const TauFamily tau11 = tau_family(lp, 11), tau9 = tau_family(lp, 9);
    for (long n = -2; n <= 4; ++n) {
        EXPECT_TRUE(bilinear_series_residual(tau11, n, 10).is_zero()) << n;
        EXPECT_TRUE(volterra_series_residual(tau9, n, 8).is_zero()) << n;
    }
}

TEST(YClosed, Examples) {
    const LinearParams fib{1, -1, 1, 1};
    EXPECT_DOUBLE_EQ(Y_closed(0, 0.0, fib, make_riccati(1, -1)), 1.5);
    const LinearParams geo{3, 2, 1, 2};  // T_n = 2^n
    const RiccatiSolution sol = make_riccati(3, 2);
    for (long n = -3; n <= 5; ++n) EXPECT_DOUBLE_EQ(Y_closed(n, 0.0, geo, sol), 1.0);
}

TEST(VolterraRK4, ConstantData) {
    const Window<double> y0(0, std::vector<double>(8, 0.75));
    const Trajectory tr = volterra_rk4(y0, 0.01, 50, [](double) { return std::pair{0.75, 0.75}; });
    ASSERT_EQ(tr.x.size(), 51u);
    for (const auto& w : tr.Y)
        for (double v : w.values()) EXPECT_DOUBLE_EQ(v, 0.75);
}

TEST(VolterraRK4, MatchesClosedFormAndKeepsConstraint) {
    const LinearParams lp{3, 1, 1, 1};
    const RiccatiSolution sol = make_riccati(lp.P, lp.Q);
    const Trajectory tr = volterra_rk4(closed_window(lp, sol, 0, 9, 0.0), 1e-3, 500, [&](double x) {
        return std::pair{Y_closed(0, x, lp, sol), Y_closed(9, x, lp, sol)};
    });
    EXPECT_DOUBLE_EQ(tr.x.back(), 0.5);
    const Window<double> expect = closed_window(lp, sol, 0, 9, 0.5);
    for (long n = 1; n <= 8; ++n) EXPECT_NEAR(tr.Y.back()[n], expect[n], 1e-6) << n;
    const double H = ((lp.P * lp.P + 2 * lp.Q) / lp.Q).to_double();
    for (const auto& w : tr.Y) EXPECT_LT(y_equation_max_residual(w, 4, H), 1e-6);

    std::ostringstream csv;
    write_trajectory_csv(csv, tr);
    EXPECT_EQ(csv.str().substr(0, 8), "x,n,Y_n\n");
}

TEST(VolterraRK4, OverflowIsReported) {
    const Window<double> y0(0, {1.0, 1e200, -1e200, 1.0});
    EXPECT_THROW(volterra_rk4(y0, 0.1, 10, [](double) { return std::pair{1.0, 1.0}; }), NumericOverflow);
}

TEST(Positivity, Examples) {
    const PositivityReport geo = positivity_scan({3, 2, 1, 2}, 0.2, 1e-3, 0, 4);
    ASSERT_EQ(geo.rows.size(), 5u);
    for (const auto& row : geo.rows) {
        ASSERT_EQ(row.positive.size(), 1u);
        EXPECT_DOUBLE_EQ(row.positive.front().first, 0.0);
        EXPECT_NEAR(row.positive.front().second, geo.x_end, 1e-9);
        EXPECT_TRUE(row.crossings.empty());
    }

    const LinearParams fib{1, -1, 0, 1};
    const RiccatiSolution sol = make_riccati(1, -1);
    const PositivityReport r = positivity_scan(fib, 3.0, 1e-3, 1, 6);
    bool any = false;
    for (const auto& row : r.rows)
        for (const auto& c : row.crossings) {
            any = true;
            const long k = row.n + c.factor;
            const double B = riccati_eval(sol, c.x);
            EXPECT_LT(std::abs(linear_factor(k, fib, B)), 1e-8 * (1 + std::abs(linear_T(k, fib).to_double())));
        }
    EXPECT_TRUE(any);
    EXPECT_TRUE(positivity_scan(fib, 1.0, 1e-2, 3, 2).rows.empty());
}

TEST(Triangles, Examples) {
    const Triangles t = triangles(15);
    EXPECT_EQ(t.e[2], (std::vector<Integer>{1, 2}));
    EXPECT_EQ(t.e[3], (std::vector<Integer>{1, 8}));
    EXPECT_EQ(t.e[4], (std::vector<Integer>{1, 22, 16}));
    EXPECT_EQ(t.euler[2], (std::vector<Integer>{1, 4, 1}));
    EXPECT_EQ(t.euler[4], (std::vector<Integer>{1, 26, 66, 26, 1}));
    for (std::size_t n = 1; n <= 15; ++n) {
        Integer s = 0;
        for (const auto& v : t.euler[n - 1]) s += v;
        EXPECT_EQ(s, factorial(n));
    }
    EXPECT_TRUE(t.worpitzky);
    EXPECT_TRUE(t.relation);
    EXPECT_TRUE(t.matches_A);
    EXPECT_THROW(triangles(26), std::invalid_argument);
}

TEST(TauCoeffs, Examples) {
    const LinearParams lp{R("5/3"), R("-2"), R("1/2"), 3};
    const Rational P = lp.P, Q = lp.Q;
    for (long n = -4; n <= 6; ++n) {
        const Rational Tn = linear_T(n, lp), Tm = linear_T(n - 1, lp);
        EXPECT_EQ(tau_series_coeffs(n, 0, lp), Tn);
        EXPECT_EQ(tau_series_coeffs(n, 1, lp), Rational(n) * Tn - P * Tm);
        EXPECT_EQ(tau_series_coeffs(n, 2, lp), Rational(n * n) * Tn - (2 * P * Rational(n) - P.pow(3) / Q) * Tm);
    }
}

TEST(Conjecture, DisplayedRecurrences) {
    const Rational P = R("7/2"), Q = R("-3/5");
    EXPECT_EQ(conjecture_coeffs(1, P, Q), (std::vector<Rational>{Q * Q, -2 * Q * P, P * P + 2 * Q, -2 * P, 1}));
    const std::vector<Rational> r2{Q.pow(3), -3 * P * Q * Q, 3 * (P * P + Q) * Q, -P * (P * P + 6 * Q),
                                   3 * (P * P + Q), -3 * P, 1};
    EXPECT_EQ(conjecture_coeffs(2, P, Q), r2);
}

TEST(Conjecture, SupportedUpToR4) {
    const IdentityReport r = conjecture_check(4, {R("-4/3"), R("5/2"), 1, R("-2/7")}, -5, 15);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks_run, 5 * 21);
    ASSERT_FALSE(r.notes.empty());
    EXPECT_EQ(r.notes.front(), "conjecture: supported at desk scale");
}
