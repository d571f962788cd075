#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "somos/quad_ext.hpp"
#include "somos/rational.hpp"
#include "somos/window.hpp"

namespace somos {

// Invariants attached to a Somos-4 orbit through its first integral H.
struct OrbitInvariants {
    Rational alpha;
    Rational beta;
    Rational H;
    Rational I;  // alpha^2 + beta H
    Rational J;  // alpha^2 I - beta^3
    Rational g2;
    Rational g3;

    // Throws ZeroAlpha (g2, g3 have alpha in the denominator).
    static OrbitInvariants from(const Rational& alpha, const Rational& beta, const Rational& H);
};

// First integral at the window's lowest index.
Rational compute_H(const OrbitWindow& w, const Rational& alpha, const Rational& beta);
// H at every index lo .. hi-3.
std::vector<Rational> H_along(const OrbitWindow& w, const Rational& alpha, const Rational& beta);

// (g2, g3) of the attached curve y^2 = 4x^3 - g2 x - g3.
std::pair<Rational, Rational> curve_invariants(const Rational& H, const Rational& alpha, const Rational& beta);
Rational discriminant(const Rational& g2, const Rational& g3);  // g2^3 - 27 g3^2

// Companion elliptic sequence with radicand alpha: W_0 = 0, W_1 = 1,
// W_2 = sqrt(alpha), W_3 = -beta, W_4 = -I sqrt(alpha), then Ward's recurrence
// W_n W_{n+4} = W_2^2 W_{n+1} W_{n+3} - W_1 W_3 W_{n+2}^2, and W_{-n} = -W_n.
// Terms are cached; extension needs exclusive access, lookups are const.
class CompanionSeq {
public:
    explicit CompanionSeq(OrbitInvariants inv);

    const OrbitInvariants& invariants() const { return inv_; }
    // Extends the cache through |n| (throws VanishingW(k) on a zero divisor).
    void extend_to(long n);
    long extent() const { return static_cast<long>(terms_.size()) - 1; }
    // Requires |n| <= extent().
    QuadExt at(long n) const;
    // Extends as needed.
    QuadExt operator()(long n);

private:
    OrbitInvariants inv_;
    std::vector<QuadExt> terms_;  // W_0 .. W_extent
};

QuadExt companion_W(const OrbitInvariants& inv, long n);

// Degenerate companion of a linear sequence: W_n = D_n / Q^{(n-1)/2},
// as a QuadExt with radicand Q (pure radical for even n).
QuadExt linear_companion_W(long n, const Rational& P, const Rational& Q);

// (alpha_d, beta_d) = (W_{2d}^2 / W_d^2, -W_{3d} / W_d): the Somos-4
// coefficients of the step-d subsequences.
std::pair<Rational, Rational> subsequence_coeffs(const OrbitInvariants& inv, long d);

// Integer elliptic divisibility sequence with W_0 = 0, W_1 = 1.
class IntegerEDS {
public:
    const std::vector<Integer>& terms() const { return terms_; }  // W_0 .. W_{m_max}
    const Integer& at(long n) const { return terms_.at(static_cast<std::size_t>(n)); }
    long m_max() const { return static_cast<long>(terms_.size()) - 1; }

    // First (n, m) with n | m <= m_max and W_n not dividing W_m, if any.
    std::optional<std::pair<long, long>> divisibility_violation() const;

private:
    friend IntegerEDS ward_generate(const Integer&, const Integer&, const Integer&, long);
    std::vector<Integer> terms_;
};

// Throws SeedDivisibility unless W2 | W4, VanishingW(2) when W2 = 0 and an even
// term is needed, and NonIntegerTerm(n) if a division by W2 leaves a remainder.
IntegerEDS ward_generate(const Integer& W2, const Integer& W3, const Integer& W4, long m_max);

}  // namespace somos
