#pragma once

#include <utility>
#include <vector>

#include "somos/rational.hpp"
#include "somos/trials.hpp"
#include "somos/window.hpp"

namespace somos {

// Somos-N here is t_n t_{n+N} = alpha t_{n+1} t_{n+N-1} + beta t_{n+2} t_{n+N-2}.

struct LatticeConstants {
    int N = 4;
    Rational H_N;
    Rational beta_N;
    Rational I_N;
};

// 2-periodic coefficient: alpha_{N,n} is alpha_even for even n, alpha_odd for odd n.
struct NonAutoSomosParams {
    int N = 4;
    Rational alpha_even;
    Rational alpha_odd;
    Rational beta;
    std::vector<Rational> init;  // t_0 .. t_{N-1}

    const Rational& alpha_at(long n) const { return (n % 2 == 0) ? alpha_even : alpha_odd; }
    // Throws std::invalid_argument unless N >= 4 and init holds N nonzero values.
    void validate() const;
};

// Exact orbit over [lo, hi] (must contain [0, N-1]); VanishingTerm on a zero divisor.
OrbitWindow nonauto_extend(const NonAutoSomosParams& params, long lo, long hi);

// First integral at index n with coefficients alpha_{N,n}, alpha_{N,n+1}:
// sum_{j=0}^{N-4} y_{n+j} + a0 t_{n+1} t_{n+N-3}/(t_n t_{n+N-2})
//   + a1 t_{n+2} t_{n+N-2}/(t_{n+1} t_{n+N-1}) + beta t_{n+2} t_{n+N-3}/(t_n t_{n+N-1}).
Rational H_N_at(const OrbitWindow& t, int N, const Rational& a0, const Rational& a1, const Rational& beta, long n);
// Autonomous case at the window start.
Rational H_N_of_orbit(const OrbitWindow& t, int N, const Rational& alpha, const Rational& beta);
// Autonomous case at every index where it is defined.
std::vector<Rational> H_N_along(const OrbitWindow& t, int N, const Rational& alpha, const Rational& beta);
// Nonautonomous case at index n (0 by default).
Rational H_N_nonauto(const OrbitWindow& t, const NonAutoSomosParams& params, long n = 0);

// y_n = t_n t_{n+3} / (t_{n+1} t_{n+2}); same lo, three entries shorter.
OrbitWindow y_from_t(const OrbitWindow& t);
// f_n = t_n t_{n+2} / t_{n+1}^2; same lo, two entries shorter.
OrbitWindow f_from_t(const OrbitWindow& t);

// y_{n+1} (sum_{j=0}^{N-3} y_{n+j} - H) - y_{n+N-2} (sum_{j=0}^{N-3} y_{n+j+2} - H)
// at every n with all indices inside y.
OrbitWindow y_equation_residual(const OrbitWindow& y, int N, const Rational& H);
// Float variant: largest |lhs - rhs| / max(1, |lhs|, |rhs|) over the window.
double y_equation_max_residual(const Window<double>& y, int N, double H);

// prod_{j=1}^{N-3} y_{n+j} (sum_{j=0}^{N-2} y_{n+j} - H).
Rational beta_N_integral(const OrbitWindow& y, int N, const Rational& H, long n);
// prod_{j=0}^{N-2} y_{n+j} + (sum_{j=1}^{N-3} y_{n+j}) (sum_{k=0}^{N-2} y_{n+k} - H) prod_{l=1}^{N-3} y_{n+l}.
Rational I_N_integral(const OrbitWindow& y, int N, const Rational& H, long n);
// (alpha_{N,n}, alpha_{N,n+1}):
//   prod_{j=0}^{N-2} f_{n+j} - beta / prod_{j=1}^{N-3} f_{n+j}, and
//   prod_{j=1}^{N-3} f_{n+j} (H - sum_{j=0}^{N-3} f_{n+j} f_{n+j+1}).
std::pair<Rational, Rational> alpha_2integral(const OrbitWindow& f, int N, const Rational& beta, const Rational& H,
                                              long n);

// H_N, beta_N, I_N of an orbit, read at the first y index.
LatticeConstants lattice_constants(const OrbitWindow& t, int N, const Rational& H);

// Random autonomous and 2-periodic orbits for N in [N_lo, N_hi]: invariance of
// H_N, beta_N, I_N, zero residual of the y-equation, the alpha 2-integral and
// alpha_{N,0} alpha_{N,1} = I_N - H_N beta_N. Orbits span [0, window + N + 2].
IdentityReport verify_lattice(const TrialConfig& cfg, int N_lo = 4, int N_hi = 8, long window = 20);

}  // namespace somos
