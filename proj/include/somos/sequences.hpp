#pragma once

#include <utility>
#include <vector>

#include "somos/rational.hpp"
#include "somos/window.hpp"

namespace somos {

// T_{n+2} = P T_{n+1} - Q T_n through (T_0, T_1) = (t0, t1).
struct LinearParams {
    Rational P;
    Rational Q;
    Rational t0;
    Rational t1;
};

// t_n t_{n+N} = alpha t_{n+p} t_{n+N-p} + beta t_{n+q} t_{n+N-q}.
struct GaleRobinsonParams {
    int N = 4;
    int p = 1;
    int q = 2;
    Rational alpha;
    Rational beta;
    std::vector<Rational> init;  // t_0 .. t_{N-1}

    static GaleRobinsonParams somos4(Rational alpha, Rational beta, std::vector<Rational> init);
    static GaleRobinsonParams somosN(int N, Rational alpha, Rational beta, std::vector<Rational> init);

    // Throws std::invalid_argument unless 0 < p < q <= N/2, N >= 4,
    // and init holds N nonzero values.
    void validate() const;
};

// Lucas sequence D_0 = 0, D_1 = 1, D_{n+2} = P D_{n+1} - Q D_n,
// extended backwards by D_{-n} = -D_n / Q^n.
Rational lucas_D(long n, const Rational& P, const Rational& Q);
OrbitWindow lucas_window(const Rational& P, const Rational& Q, long lo, long hi);

// T_n = -t0 Q D_{n-1} + t1 D_n, valid for every integer n.
Rational linear_T(long n, const LinearParams& params);
OrbitWindow linear_window(const LinearParams& params, long lo, long hi);

// Exact orbit over [lo, hi]. The seed block [0, N-1] is always computed, so
// any slice may be requested.
// On a vanishing divisor throws VanishingTerm and, when `partial` is given,
// stores the contiguous part that was computed before the failure.
OrbitWindow gale_robinson_extend(const GaleRobinsonParams& params, long lo, long hi,
                                 OrbitWindow* partial = nullptr);

// (t_{d n + r}) reindexed by n, over every n whose source index lies in w.
OrbitWindow subsequence(const OrbitWindow& w, long d, long r);

// Unique (alpha, beta) with t_n t_{n+4} = alpha t_{n+1} t_{n+3} + beta t_{n+2}^2
// from the first nonsingular pair of consecutive equations; every other index
// in the window is then checked (NoConsistentFit on the first mismatch).
std::pair<Rational, Rational> fit_somos4_coeffs(const OrbitWindow& w);

}  // namespace somos
