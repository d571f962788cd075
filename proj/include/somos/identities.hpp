#pragma once

#include <string>
#include <vector>

#include "somos/companion.hpp"
#include "somos/trials.hpp"
#include "somos/window.hpp"

namespace somos {

// Randomized exact screening of the Lucas-sequence identities and their
// elliptic-sequence counterparts. Every residual is an exact rational (or
// QuadExt); a failure is a genuine counterexample.

// D_{n+p} = -Q D_{p-1} D_n + D_p D_{n+1}, and Q^{p-1} D_{n-p+1} = D_p D_n - D_{p-1} D_{n+1}.
IdentityReport verify_convolution(const TrialConfig& cfg);

// D_{n+p} D_{n+q} - D_n D_{n+p+q} = Q^n D_p D_q, and the T-version with
// factor c = Q t0^2 - P t0 t1 + t1^2.
IdentityReport verify_vajda(const TrialConfig& cfg);

// sum_j D_{a_j - a_{j+1}} D_{a_j + a_{j+1}} / Q^{a_j} = 0 with a_{d+1} = a_1.
IdentityReport verify_cyclic_sum(int d, const TrialConfig& cfg);

// The three-term four-linear identity in its (a1, a2, a3, b) form, the
// reindexed (n, u, m, s) form, the sign-corrected form and the T-version;
// also checks term by term that the variable change maps one form onto the next.
IdentityReport verify_four_linear(const TrialConfig& cfg);

// Q^{u-1} D_{n-u} D_{n+u} = D_u^2 D_{n-1} D_{n+1} - D_{u-1} D_{u+1} D_n^2.
// The report notes that the literal printed indices fail at Fibonacci (4, 2).
IdentityReport verify_lucas_identity(const TrialConfig& cfg);

// Second-order linear sequences solve Somos-4 with alpha = P^2/Q,
// beta = -(P^2 - Q)/Q, and satisfy the Gale-Robinson-type relation with the
// degenerate companion W_n = D_n / Q^{(n-1)/2}.
IdentityReport verify_linear_somos4(const TrialConfig& cfg);

// W_m W_{m+s} W_{n-u} W_{n+u+s} + W_n W_{n+s} W_{u-m} W_{u+m+s}
//   + W_u W_{u+s} W_{m-n} W_{m+n+s} = 0, on random companion sequences and on
// degenerate (linear) companions, for (m, u, n, s) in [-4, 6]^4.
IdentityReport verify_elliptic_relation(const TrialConfig& cfg);

// W_{q-p} W_{N-p-q} t_n t_{n+N} = W_q W_{N-q} t_{n+p} t_{n+N-p} - W_p W_{N-p} t_{n+q} t_{n+N-q}
// for every 1 <= p < q <= N <= N_max and every n with [n, n+N] inside the
// orbit window, plus the two special cases N = 2p and N = 2p + 1 with q = p + 1.
IdentityReport verify_gale_robinson_identity(const OrbitWindow& orbit, CompanionSeq& W, int N_max);
// The same on random rational Somos-4 orbits.
IdentityReport verify_gale_robinson_random(const TrialConfig& cfg, int N_max = 10);

// fit_somos4_coeffs(subsequence(orbit, d, r)) == subsequence_coeffs(inv, d)
// for d in {1, 2, 3} and every r < d, on random rational Somos-4 orbits.
IdentityReport verify_subsequences(const TrialConfig& cfg);

struct LambdaEnumeration {
    int d = 0;
    long instances = 0;
    long candidates = 0;
    // Shift-equivalence classes of nonconstant solutions, each in orbit order
    // starting from its lexicographically largest member.
    std::vector<std::vector<std::vector<int>>> classes;
    // Constant lambda = (c, ..., c): the cyclic-sum identity times one factor.
    std::vector<std::vector<std::vector<int>>> trivial_classes;
    bool shift_closed = true;
    std::string status = "verified-at-random";
};

// lambda -> (lambda_d + 1, lambda_1 + 1, ..., lambda_{d-1} + 1), with d + 1 -> 1.
std::vector<int> lambda_shift(const std::vector<int>& lambda);

// Screens every lambda in {1..d}^d against cfg.trials random exact instances of
// sum_j D_{b - a_{lambda_j}} D_{b + a_{lambda_j}} D_{a_j - a_{j+1}} D_{a_j + a_{j+1}} / Q^{a_j} = 0.
LambdaEnumeration enumerate_lambda_sets(int d, const TrialConfig& cfg);

struct SuiteReport {
    std::vector<IdentityReport> reports;
    bool passed() const;
    long failures() const;
};

// Every identity verifier (sections on linear, Lucas, elliptic and Somos-N
// sequences) with one configuration.
SuiteReport verify_all(const TrialConfig& cfg);

}  // namespace somos
