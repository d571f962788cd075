#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "somos/quad_ext.hpp"
#include "somos/rational.hpp"
#include "somos/sequences.hpp"
#include "somos/series.hpp"
#include "somos/trials.hpp"
#include "somos/window.hpp"

namespace somos {

// B' = (P/Q) B (B - P) + P with B(0) = 0, i.e. B' = (P/Q)(B - r+)(B - r-)
// where r+- are the roots of X^2 - P X + Q.
struct RiccatiSolution {
    enum class Kind { Zero, DistinctReal, Repeated, ComplexPair };

    Rational P;
    Rational Q;
    QuadExt r_plus;   // radicand P^2 - 4Q
    QuadExt r_minus;
    Kind kind = Kind::Zero;

    // Nearest blow-up point on each side of 0 (+-infinity if none).
    double pole_forward = 0;
    double pole_backward = 0;
};

// Throws ZeroQ.
RiccatiSolution make_riccati(const Rational& P, const Rational& Q);
// Closed form; throws Pole(x*) if a blow-up lies between 0 and x (inclusive).
double riccati_eval(const RiccatiSolution& sol, double x);
// Right-hand side of the Riccati equation at B.
double riccati_rhs(const RiccatiSolution& sol, double B);
// Classical RK4 on the Riccati equation from 0 to x in `steps` steps.
double riccati_rk4(const RiccatiSolution& sol, double x, long steps);

// Maclaurin coefficients b_k of B (plain, not scaled by k!). Order <= 40.
TruncSeries B_series(const Rational& P, const Rational& Q, std::size_t order);
// A(z) = -(P/Q) B(x) with z = -(P^2/Q) x, written with P = 1 and Q = q:
// a_k = -(1/q) b_k (-q)^k. For q = 0 the limit e^z - 1.
TruncSeries A_series(const Rational& q, std::size_t order);
// A' - (1 + A + q A^2), order one less than requested.
TruncSeries A_series_check(const Rational& q, std::size_t order);
// k! a_k as integer polynomials in q, k = 1 .. order (entry 0 is empty).
std::vector<std::vector<Integer>> A_q_polynomials(std::size_t order);

// T_k - T_{k-1} B(x) in double precision.
double linear_factor(long k, const LinearParams& params, double B);
// (T_n - T_{n-1} B(x)) e^{n x}. Throws Pole.
double tau_closed(long n, double x, const LinearParams& params, const RiccatiSolution& sol);
// Product formula over the four linear factors. Throws Pole, VanishingDenominator.
double Y_closed(long n, double x, const LinearParams& params, const RiccatiSolution& sol);
// |tau_n tau'_{n+1} - tau_{n+1} tau'_n - tau_{n-1} tau_{n+2}| divided by the largest term magnitude (at least 1).
double bilinear_residual(long n, double x, const LinearParams& params, const RiccatiSolution& sol);
// |Y'_n - Y_n (Y_{n+1} - Y_{n-1})| on the same relative scale.
double volterra_residual(long n, double x, const LinearParams& params, const RiccatiSolution& sol);

// tau_n as a power series to `order`.
TruncSeries tau_series(long n, const LinearParams& params, std::size_t order);
using TauFamily = std::function<TruncSeries(long)>;
// tau_n tau'_{n+1} - tau_{n+1} tau'_n - tau_{n-1} tau_{n+2}; tau supplied at order + 1.
TruncSeries bilinear_series_residual(const TauFamily& tau, long n, std::size_t order);
// Y_n = tau_n tau_{n+3} / (tau_{n+1} tau_{n+2}) and Y'_n - Y_n (Y_{n+1} - Y_{n-1}).
TruncSeries Y_series(const TauFamily& tau, long n, std::size_t order);
TruncSeries volterra_series_residual(const TauFamily& tau, long n, std::size_t order);

struct Trajectory {
    std::vector<double> x;
    std::vector<Window<double>> Y;  // full window (edges included) at each x
};
// Edge values (Y_lo, Y_hi) at a given x.
using Boundary = std::function<std::pair<double, double>(double)>;
// RK4 for Y'_n = Y_n (Y_{n+1} - Y_{n-1}) on the interior of y0; every step is
// recorded. Throws NumericOverflow on a non-finite value.
Trajectory volterra_rk4(const Window<double>& y0, double dx, long steps, const Boundary& boundary);
// Columns x, n, Y_n.
void write_trajectory_csv(std::ostream& os, const Trajectory& tr);

struct FactorCrossing {
    int factor = 0;   // k - n for the factor T_k - T_{k-1} B
    double x = 0;     // refined by bisection
    bool numerator = false;  // a zero of Y (true) or a pole of Y (false)
};
struct PositivityRow {
    long n = 0;
    std::vector<std::pair<double, double>> positive;  // maximal sub-intervals with Y_n > 0
    std::vector<FactorCrossing> crossings;
};
struct PositivityReport {
    double x_end = 0;  // x_max, or the first pole of B if earlier
    std::vector<PositivityRow> rows;
};
PositivityReport positivity_scan(const LinearParams& params, double x_max, double dx, long n_lo, long n_hi);

struct Triangles {
    std::vector<std::vector<Integer>> e;      // e[n-1] = row n
    std::vector<std::vector<Integer>> euler;  // euler[n-1] = row n
    bool worpitzky = true;
    bool relation = true;
    bool matches_A = true;
};
// Rows 1 .. n_max (n_max <= 25) with all three checks.
Triangles triangles(int n_max);

// r-th derivative at 0 of tau_n. r <= 12.
Rational tau_series_coeffs(long n, int r, const LinearParams& params);
// Coefficients of (X^2 - P X + Q)^{r+1}, constant term first.
std::vector<Rational> conjecture_coeffs(int r, const Rational& P, const Rational& Q);
// sum_j f_{r,j} tau_{n+j,r} = 0 for r <= r_max and n in [n_lo, n_hi].
IdentityReport conjecture_check(int r_max, const LinearParams& params, long n_lo, long n_hi);

}  // namespace somos
