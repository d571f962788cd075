#include "somos/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "somos/errors.hpp"
#include "somos/sequences.hpp"

namespace somos {

void NonAutoSomosParams::validate() const {
    if (N < 4) throw std::invalid_argument("Somos-N needs N >= 4");
    if (static_cast<int>(init.size()) != N) throw std::invalid_argument("init must hold N values");
    for (const auto& v : init)
        if (v.is_zero()) throw std::invalid_argument("initial values must be nonzero");
}

OrbitWindow nonauto_extend(const NonAutoSomosParams& params, long lo, long hi) {
    params.validate();
    const long N = params.N;
    if (lo > 0 || hi < N - 1) throw std::invalid_argument("window must contain the seed block");
    std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1));
    auto t = [&](long n) -> Rational& { return v[static_cast<std::size_t>(n - lo)]; };
    for (long i = 0; i < N; ++i) t(i) = params.init[static_cast<std::size_t>(i)];
    for (long n = 0; n + N <= hi; ++n) {
        if (t(n).is_zero()) throw VanishingTerm(n);
        t(n + N) = (params.alpha_at(n) * t(n + 1) * t(n + N - 1) + params.beta * t(n + 2) * t(n + N - 2)) / t(n);
    }
    for (long n = -1; n >= lo; --n) {
        if (t(n + N).is_zero()) throw VanishingTerm(n + N);
        t(n) = (params.alpha_at(n) * t(n + 1) * t(n + N - 1) + params.beta * t(n + 2) * t(n + N - 2)) / t(n + N);
    }
    return OrbitWindow(lo, std::move(v));
}

namespace {

const Rational& nz(const OrbitWindow& w, long n) {
    const Rational& x = w.at(n);
    if (x.is_zero()) throw VanishingTerm(n);
    return x;
}

void check_N(int N) {
    if (N < 4) throw std::invalid_argument("Somos-N needs N >= 4");
}

}  // namespace

Rational H_N_at(const OrbitWindow& t, int N, const Rational& a0, const Rational& a1, const Rational& beta, long n) {
    check_N(N);
    for (long k = n; k <= n + N - 1; ++k) nz(t, k);
    Rational h = 0;
    for (long j = 0; j <= N - 4; ++j) h = h + t[n + j] * t[n + j + 3] / (t[n + j + 1] * t[n + j + 2]);
    h = h + a0 * t[n + 1] * t[n + N - 3] / (t[n] * t[n + N - 2]);
    h = h + a1 * t[n + 2] * t[n + N - 2] / (t[n + 1] * t[n + N - 1]);
    return h + beta * t[n + 2] * t[n + N - 3] / (t[n] * t[n + N - 1]);
}

Rational H_N_of_orbit(const OrbitWindow& t, int N, const Rational& alpha, const Rational& beta) {
    return H_N_at(t, N, alpha, alpha, beta, t.lo());
}

std::vector<Rational> H_N_along(const OrbitWindow& t, int N, const Rational& alpha, const Rational& beta) {
    std::vector<Rational> out;
    for (long n = t.lo(); n + N - 1 <= t.hi(); ++n) out.push_back(H_N_at(t, N, alpha, alpha, beta, n));
    return out;
}

Rational H_N_nonauto(const OrbitWindow& t, const NonAutoSomosParams& params, long n) {
    return H_N_at(t, params.N, params.alpha_at(n), params.alpha_at(n + 1), params.beta, n);
}

OrbitWindow y_from_t(const OrbitWindow& t) {
    std::vector<Rational> v;
    for (long n = t.lo(); n + 3 <= t.hi(); ++n) v.push_back(t[n] * t[n + 3] / (nz(t, n + 1) * nz(t, n + 2)));
    return OrbitWindow(t.lo(), std::move(v));
}

OrbitWindow f_from_t(const OrbitWindow& t) {
    std::vector<Rational> v;
    for (long n = t.lo(); n + 2 <= t.hi(); ++n) {
        const Rational& m = nz(t, n + 1);
        v.push_back(t[n] * t[n + 2] / (m * m));
    }
    return OrbitWindow(t.lo(), std::move(v));
}

OrbitWindow y_equation_residual(const OrbitWindow& y, int N, const Rational& H) {
    check_N(N);
    std::vector<Rational> v;
    for (long n = y.lo(); n + N - 1 <= y.hi(); ++n) {
        Rational s0 = -H, s2 = -H;
        for (long j = 0; j <= N - 3; ++j) {
            s0 = s0 + y[n + j];
            s2 = s2 + y[n + j + 2];
        }
        v.push_back(y[n + 1] * s0 - y[n + N - 2] * s2);
    }
    return OrbitWindow(y.lo(), std::move(v));
}

double y_equation_max_residual(const Window<double>& y, int N, double H) {
    check_N(N);
    double worst = 0.0;
    for (long n = y.lo(); n + N - 1 <= y.hi(); ++n) {
        double s0 = -H, s2 = -H;
        for (long j = 0; j <= N - 3; ++j) {
            s0 += y[n + j];
            s2 += y[n + j + 2];
        }
        const double l = y[n + 1] * s0, r = y[n + N - 2] * s2;
        worst = std::max(worst, std::abs(l - r) / std::max({1.0, std::abs(l), std::abs(r)}));
    }
    return worst;
}

namespace {

Rational prod(const OrbitWindow& w, long from, long to) {
    Rational p = 1;
    for (long k = from; k <= to; ++k) p = p * w.at(k);
    return p;
}

Rational sum(const OrbitWindow& w, long from, long to) {
    Rational s = 0;
    for (long k = from; k <= to; ++k) s = s + w.at(k);
    return s;
}

}  // namespace

Rational beta_N_integral(const OrbitWindow& y, int N, const Rational& H, long n) {
    check_N(N);
    return prod(y, n + 1, n + N - 3) * (sum(y, n, n + N - 2) - H);
}

Rational I_N_integral(const OrbitWindow& y, int N, const Rational& H, long n) {
    check_N(N);
    return prod(y, n, n + N - 2) + sum(y, n + 1, n + N - 3) * (sum(y, n, n + N - 2) - H) * prod(y, n + 1, n + N - 3);
}

std::pair<Rational, Rational> alpha_2integral(const OrbitWindow& f, int N, const Rational& beta, const Rational& H,
                                              long n) {
    check_N(N);
    const Rational inner = prod(f, n + 1, n + N - 3);
    if (inner.is_zero()) throw VanishingTerm(n + 1);
    Rational ff = 0;
    for (long j = 0; j <= N - 3; ++j) ff = ff + f.at(n + j) * f.at(n + j + 1);
    return {prod(f, n, n + N - 2) - beta / inner, inner * (H - ff)};
}

LatticeConstants lattice_constants(const OrbitWindow& t, int N, const Rational& H) {
    const OrbitWindow y = y_from_t(t);
    return {N, H, beta_N_integral(y, N, H, y.lo()), I_N_integral(y, N, H, y.lo())};
}

IdentityReport verify_lattice(const TrialConfig& cfg, int N_lo, int N_hi, long window) {
    if (N_lo < 4 || N_hi < N_lo) throw std::invalid_argument("need 4 <= N_lo <= N_hi");
    return run_trials("lattice", cfg, [&](TrialRng& rng, TrialOutcome& out) {
        for (int N = N_lo; N <= N_hi; ++N)
            for (int autonomous = 1; autonomous >= 0; --autonomous) {
                NonAutoSomosParams p;
                p.N = N;
                p.alpha_even = rng.nonzero_rational();
                p.alpha_odd = autonomous ? p.alpha_even : rng.nonzero_rational();
                p.beta = rng.nonzero_rational();
                for (int i = 0; i < N; ++i) p.init.push_back(rng.nonzero_rational());
                const OrbitWindow t = nonauto_extend(p, 0, window + N + 2);
                const std::string par = std::string(autonomous ? "autonomous" : "2-periodic") + " N=" +
                                        std::to_string(N) + " alpha=(" + p.alpha_even.to_string() + "," +
                                        p.alpha_odd.to_string() + ") beta=" + p.beta.to_string();
                const std::string tag = " N=" + std::to_string(N);

                const Rational H = H_N_nonauto(t, p, 0);
                const OrbitWindow y = y_from_t(t), f = f_from_t(t);
                const OrbitWindow res = y_equation_residual(y, N, H);
                const Rational I0 = I_N_integral(y, N, H, 0);
                for (long n = 0; n < window; ++n) {
                    out.expect_equal("H_N invariant" + tag, par, {n}, H_N_nonauto(t, p, n), H);
                    out.expect_equal("y-equation residual" + tag, par, {n}, res.at(n), Rational(0));
                    out.expect_equal("beta_N integral" + tag, par, {n}, beta_N_integral(y, N, H, n), p.beta);
                    out.expect_equal("I_N integral" + tag, par, {n}, I_N_integral(y, N, H, n), I0);
                    const auto [a0, a1] = alpha_2integral(f, N, p.beta, H, n);
                    out.expect_equal("alpha_{N,n}" + tag, par, {n}, a0, p.alpha_at(n));
                    out.expect_equal("alpha_{N,n+1}" + tag, par, {n}, a1, p.alpha_at(n + 1));
                    out.expect_equal("alpha_{N,n} alpha_{N,n+1} = I_N - H_N beta_N" + tag, par, {n}, a0 * a1,
                                     I0 - H * p.beta);
                }
                if (autonomous) {
                    const OrbitWindow g =
                        gale_robinson_extend(GaleRobinsonParams::somosN(N, p.alpha_even, p.beta, p.init), 0, t.hi());
                    for (long n = 0; n <= t.hi(); ++n)
                        out.expect_equal("somos-N orbit agrees" + tag, par, {n}, g.at(n), t.at(n));
                }
            }
    });
}

}  // namespace somos
