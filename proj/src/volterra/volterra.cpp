#include "somos/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "somos/errors.hpp"

namespace somos {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kSeriesGuard = 40;

struct Roots {
    double r1 = 0, r2 = 0;  // distinct real: r1 > r2
    double a = 0, b = 0;    // complex pair a +- i b
};

Roots float_roots(const RiccatiSolution& s) {
    const double P = s.P.to_double(), disc = s.r_plus.radicand().to_double();
    Roots r;
    if (disc >= 0) {
        const double sq = std::sqrt(disc);
        r.r1 = (P + sq) / 2;
        r.r2 = (P - sq) / 2;
    } else {
        r.a = P / 2;
        r.b = std::sqrt(-disc) / 2;
    }
    return r;
}

}  // namespace

RiccatiSolution make_riccati(const Rational& P, const Rational& Q) {
    if (Q.is_zero()) throw ZeroQ();
    RiccatiSolution s;
    s.P = P;
    s.Q = Q;
    const Rational disc = P * P - 4 * Q;
    s.r_plus = QuadExt(P / 2, Rational(1, 2), disc);
    s.r_minus = QuadExt(P / 2, Rational(-1, 2), disc);
    s.pole_forward = kInf;
    s.pole_backward = -kInf;
    const double k = (P / Q).to_double();
    const Roots r = float_roots(s);
    if (P.is_zero()) {
        s.kind = RiccatiSolution::Kind::Zero;
    } else if (disc.is_zero()) {
        s.kind = RiccatiSolution::Kind::Repeated;
        s.pole_backward = -0.5;
    } else if (disc.sign() > 0) {
        s.kind = RiccatiSolution::Kind::DistinctReal;
        const double ratio = r.r2 / r.r1, lambda = k * (r.r1 - r.r2);
        if (ratio > 0) {
            const double xs = std::log(ratio) / lambda;
            (xs > 0 ? s.pole_forward : s.pole_backward) = xs;
        }
    } else {
        s.kind = RiccatiSolution::Kind::ComplexPair;
        const double w = k * r.b, th = std::atan(-r.a / r.b);
        const double up = (M_PI / 2 - th) / w, down = (-M_PI / 2 - th) / w;
        s.pole_forward = std::max(up, down);
        s.pole_backward = std::min(up, down);
    }
    return s;
}

double riccati_eval(const RiccatiSolution& s, double x) {
    if (x >= s.pole_forward) throw Pole(s.pole_forward);
    if (x <= s.pole_backward) throw Pole(s.pole_backward);
    const double P = s.P.to_double(), Q = s.Q.to_double(), k = P / Q;
    const Roots r = float_roots(s);
    switch (s.kind) {
        case RiccatiSolution::Kind::Zero:
            return 0.0;
        case RiccatiSolution::Kind::Repeated:
            return P * x / (1 + 2 * x);
        case RiccatiSolution::Kind::DistinctReal: {
            // Q (1 - E) / (r2 - r1 E), E = exp(lambda x)
            const double em = std::expm1(k * (r.r1 - r.r2) * x);
            if (!std::isfinite(em)) return r.r2;
            return -Q * em / (r.r2 - r.r1 - r.r1 * em);
        }
        case RiccatiSolution::Kind::ComplexPair:
            return r.a + r.b * std::tan(k * r.b * x + std::atan(-r.a / r.b));
    }
    return 0.0;
}

double riccati_rhs(const RiccatiSolution& s, double B) {
    const double P = s.P.to_double(), Q = s.Q.to_double();
    return P / Q * B * (B - P) + P;
}

double riccati_rk4(const RiccatiSolution& s, double x, long steps) {
    if (steps <= 0) throw std::invalid_argument("steps must be positive");
    const double h = x / static_cast<double>(steps);
    double B = 0;
    for (long i = 0; i < steps; ++i) {
        const double k1 = riccati_rhs(s, B), k2 = riccati_rhs(s, B + h / 2 * k1);
        const double k3 = riccati_rhs(s, B + h / 2 * k2), k4 = riccati_rhs(s, B + h * k3);
        B += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return B;
}

TruncSeries B_series(const Rational& P, const Rational& Q, std::size_t order) {
    if (Q.is_zero()) throw ZeroQ();
    if (order > kSeriesGuard) throw GuardExceeded("series order above 40");
    TruncSeries b(order);
    const Rational k = P / Q;
    for (std::size_t n = 0; n < order; ++n) {
        // (n+1) b_{n+1} = [x^n] ((P/Q)(B^2 - P B) + P)
        Rational sq = 0;
        for (std::size_t i = 1; i < n; ++i) sq = sq + b[i] * b[n - i];
        Rational c = k * (sq - P * b[n]);
        if (n == 0) c = c + P;
        b[n + 1] = c / Rational(static_cast<long>(n + 1));
    }
    return b;
}

TruncSeries A_series(const Rational& q, std::size_t order) {
    TruncSeries a(order);
    if (q.is_zero()) {
        for (std::size_t k = 1; k <= order; ++k) a[k] = Rational(Integer(1), factorial(k));
        return a;
    }
    const TruncSeries b = B_series(1, q, order);
    const Rational scale = -q.inverse();
    Rational mq = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        mq = mq * -q;
        a[k] = scale * b[k] * mq;
    }
    return a;
}

TruncSeries A_series_check(const Rational& q, std::size_t order) {
    const TruncSeries A = A_series(q, order);
    const std::size_t o = order == 0 ? 0 : order - 1;
    const TruncSeries A_ = A.truncate(o);
    return (A.derivative() - (TruncSeries::constant(1, o) + A_ + q * (A_ * A_))).truncate(o);
}

namespace {

using Poly = std::vector<Rational>;  // constant term first

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

// Interpolating polynomial through (xs[i], ys[i]).
Poly lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Poly out(xs.size(), Rational(0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis{Rational(1)};
        Rational den = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = poly_mul(basis, {-xs[j], Rational(1)});
            den = den * (xs[i] - xs[j]);
        }
        const Rational w = ys[i] / den;
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] = out[k] + w * basis[k];
    }
    return out;
}

}  // namespace

std::vector<std::vector<Integer>> A_q_polynomials(std::size_t order) {
    const std::size_t M = order == 0 ? 0 : (order - 1) / 2;
    std::vector<TruncSeries> at;
    for (std::size_t i = 1; i <= M + 1; ++i) at.push_back(A_series(Rational(static_cast<long>(i)), order));
    std::vector<std::vector<Integer>> out(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        const std::size_t m = (k - 1) / 2;
        const Rational kf(factorial(k));
        std::vector<Rational> xs, ys;
        for (std::size_t i = 0; i <= m; ++i) {
            xs.push_back(Rational(static_cast<long>(i + 1)));
            ys.push_back(kf * at[i][k]);
        }
        const Poly p = lagrange(xs, ys);
        // At q = 0 every coefficient is 1 (A = e^z - 1).
        if (p[0] != Rational(1)) throw DomainError("q-polynomial of degree above (k-1)/2");
        for (const auto& c : p) {
            if (!c.is_integer()) throw DomainError("non-integer q-coefficient");
            out[k].push_back(c.numerator());
        }
    }
    return out;
}

double linear_factor(long k, const LinearParams& p, double B) {
    return linear_T(k, p).to_double() - linear_T(k - 1, p).to_double() * B;
}

double tau_closed(long n, double x, const LinearParams& p, const RiccatiSolution& s) {
    return linear_factor(n, p, riccati_eval(s, x)) * std::exp(static_cast<double>(n) * x);
}

double Y_closed(long n, double x, const LinearParams& p, const RiccatiSolution& s) {
    const double B = riccati_eval(s, x);
    const double den = linear_factor(n + 1, p, B) * linear_factor(n + 2, p, B);
    if (den == 0.0) throw VanishingDenominator();
    return linear_factor(n, p, B) * linear_factor(n + 3, p, B) / den;
}

double bilinear_residual(long n, double x, const LinearParams& p, const RiccatiSolution& s) {
    const double B = riccati_eval(s, x), Bp = riccati_rhs(s, B);
    auto tau = [&](long k) { return linear_factor(k, p, B) * std::exp(static_cast<double>(k) * x); };
    auto dtau = [&](long k) {
        const double kd = static_cast<double>(k);
        return (kd * linear_factor(k, p, B) - linear_T(k - 1, p).to_double() * Bp) * std::exp(kd * x);
    };
    const double a = tau(n) * dtau(n + 1), b = tau(n + 1) * dtau(n), c = tau(n - 1) * tau(n + 2);
    return std::abs(a - b - c) / std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
}

double volterra_residual(long n, double x, const LinearParams& p, const RiccatiSolution& s) {
    const double B = riccati_eval(s, x), Bp = riccati_rhs(s, B);
    auto g = [&](long k) { return linear_factor(k, p, B); };
    auto dlog = [&](long k) { return -linear_T(k - 1, p).to_double() * Bp / g(k); };
    auto Y = [&](long k) {
        const double den = g(k + 1) * g(k + 2);
        if (den == 0.0) throw VanishingDenominator();
        return g(k) * g(k + 3) / den;
    };
    const double y = Y(n);
    const double dy = y * (dlog(n) + dlog(n + 3) - dlog(n + 1) - dlog(n + 2));
    const double rhs = y * (Y(n + 1) - Y(n - 1));
    return std::abs(dy - rhs) / std::max({1.0, std::abs(dy), std::abs(rhs)});
}

TruncSeries tau_series(long n, const LinearParams& p, std::size_t order) {
    const TruncSeries B = B_series(p.P, p.Q, order);
    const TruncSeries g = TruncSeries::constant(linear_T(n, p), order) - linear_T(n - 1, p) * B;
    return g * series_exp_scaled(n, order);
}

TruncSeries bilinear_series_residual(const TauFamily& tau, long n, std::size_t order) {
    const TruncSeries t0 = tau(n), t1 = tau(n + 1);
    return (t0 * t1.derivative() - t1 * t0.derivative() - tau(n - 1) * tau(n + 2)).truncate(order);
}

TruncSeries Y_series(const TauFamily& tau, long n, std::size_t order) {
    return series_div(tau(n) * tau(n + 3), tau(n + 1) * tau(n + 2)).truncate(order);
}

TruncSeries volterra_series_residual(const TauFamily& tau, long n, std::size_t order) {
    const TruncSeries Y = Y_series(tau, n, order + 1);
    const TruncSeries R = Y * (Y_series(tau, n + 1, order + 1) - Y_series(tau, n - 1, order + 1));
    return (Y.derivative() - R).truncate(order);
}

Trajectory volterra_rk4(const Window<double>& y0, double dx, long steps, const Boundary& boundary) {
    if (!(dx > 0)) throw std::invalid_argument("dx must be positive");
    if (y0.size() < 3) throw std::invalid_argument("window needs at least three sites");
    const std::size_t m = y0.size();
    using Vec = std::vector<double>;
    auto with_edges = [&](Vec v, double x) {
        const auto [l, r] = boundary(x);
        v.front() = l;
        v.back() = r;
        return v;
    };
    auto rhs = [&](const Vec& v) {
        Vec d(m, 0.0);
        for (std::size_t i = 1; i + 1 < m; ++i) d[i] = v[i] * (v[i + 1] - v[i - 1]);
        return d;
    };
    auto axpy = [&](const Vec& v, double h, const Vec& k) {
        Vec o(v);
        for (std::size_t i = 0; i < m; ++i) o[i] += h * k[i];
        return o;
    };
    Trajectory tr;
    Vec v = y0.values();
    double x = 0.0;
    tr.x.push_back(x);
    tr.Y.push_back(y0);
    for (long s = 0; s < steps; ++s) {
        const Vec k1 = rhs(with_edges(v, x));
        const Vec k2 = rhs(with_edges(axpy(v, dx / 2, k1), x + dx / 2));
        const Vec k3 = rhs(with_edges(axpy(v, dx / 2, k2), x + dx / 2));
        const Vec k4 = rhs(with_edges(axpy(v, dx, k3), x + dx));
        for (std::size_t i = 0; i < m; ++i) v[i] += dx / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        x = static_cast<double>(s + 1) * dx;
        v = with_edges(v, x);
        for (double e : v)
            if (!std::isfinite(e)) throw NumericOverflow();
        tr.x.push_back(x);
        tr.Y.emplace_back(y0.lo(), v);
    }
    return tr;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
    os << "x,n,Y_n\n";
    const auto old = os.precision(17);
    for (std::size_t i = 0; i < tr.x.size(); ++i)
        for (long n = tr.Y[i].lo(); n <= tr.Y[i].hi(); ++n) os << tr.x[i] << ',' << n << ',' << tr.Y[i][n] << '\n';
    os.precision(old);
}

PositivityReport positivity_scan(const LinearParams& p, double x_max, double dx, long n_lo, long n_hi) {
    if (!(dx > 0)) throw std::invalid_argument("dx must be positive");
    const RiccatiSolution s = make_riccati(p.P, p.Q);
    PositivityReport rep;
    rep.x_end = std::min(x_max, s.pole_forward);
    std::vector<double> xs;
    for (long i = 0;; ++i) {
        const double x = static_cast<double>(i) * dx;
        if (x >= rep.x_end) break;
        xs.push_back(x);
    }
    if (rep.x_end == x_max && x_max > 0) xs.push_back(x_max);
    if (xs.empty()) return rep;

    for (long n = n_lo; n <= n_hi; ++n) {
        PositivityRow row;
        row.n = n;
        for (int f = 0; f < 4; ++f) {
            auto h = [&](double x) { return linear_factor(n + f, p, riccati_eval(s, x)); };
            double xa = xs[0], ha = h(xa);
            for (std::size_t i = 1; i < xs.size(); ++i) {
                const double xb = xs[i], hb = h(xb);
                if (ha != 0.0 && (ha < 0) != (hb < 0)) {
                    double lo = xa, hi = xb, hlo = ha;
                    while (hi - lo > 1e-10) {
                        const double mid = (lo + hi) / 2, hm = h(mid);
                        if ((hm < 0) == (hlo < 0)) {
                            lo = mid;
                            hlo = hm;
                        } else {
                            hi = mid;
                        }
                    }
                    row.crossings.push_back({f, (lo + hi) / 2, f == 0 || f == 3});
                }
                xa = xb;
                ha = hb;
            }
        }
        std::sort(row.crossings.begin(), row.crossings.end(),
                  [](const FactorCrossing& a, const FactorCrossing& b) { return a.x < b.x || (a.x == b.x && a.factor < b.factor); });
        std::vector<double> cuts{xs.front()};
        for (const auto& c : row.crossings) cuts.push_back(c.x);
        cuts.push_back(xs.back());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double a = cuts[i], b = cuts[i + 1];
            if (b <= a) continue;
            double y = 0;
            try {
                y = Y_closed(n, (a + b) / 2, p, s);
            } catch (const DomainError&) {
                continue;
            }
            if (!(y > 0)) continue;
            if (!row.positive.empty() && row.positive.back().second == a)
                row.positive.back().second = b;
            else
                row.positive.emplace_back(a, b);
        }
        if (xs.size() == 1) {
            try {
                if (Y_closed(n, xs[0], p, s) > 0) row.positive.emplace_back(xs[0], xs[0]);
            } catch (const DomainError&) {
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Triangles triangles(int n_max) {
    if (n_max < 1 || n_max > 25) throw std::invalid_argument("triangles need 1 <= n_max <= 25");
    Triangles t;
    t.e.push_back({Integer(1)});
    t.euler.push_back({Integer(1)});
    for (long n = 2; n <= n_max; ++n) {
        const auto& pe = t.e.back();
        std::vector<Integer> e(static_cast<std::size_t>((n - 1) / 2 + 1), Integer(0));
        for (long j = 0; j < static_cast<long>(e.size()); ++j) {
            Integer v = 0;
            if (j < static_cast<long>(pe.size())) v += (j + 1) * pe[static_cast<std::size_t>(j)];
            if (j >= 1 && j - 1 < static_cast<long>(pe.size())) v += (2 * n - 4 * j) * pe[static_cast<std::size_t>(j - 1)];
            e[static_cast<std::size_t>(j)] = v;
        }
        t.e.push_back(std::move(e));
        const auto& pE = t.euler.back();
        std::vector<Integer> E(static_cast<std::size_t>(n), Integer(0));
        for (long j = 0; j < n; ++j) {
            Integer v = 0;
            if (j < n - 1) v += (j + 1) * pE[static_cast<std::size_t>(j)];
            if (j >= 1) v += (n - j) * pE[static_cast<std::size_t>(j - 1)];
            E[static_cast<std::size_t>(j)] = v;
        }
        t.euler.push_back(std::move(E));
    }
    for (long n = 1; n <= n_max; ++n) {
        const auto& E = t.euler[static_cast<std::size_t>(n - 1)];
        const auto& e = t.e[static_cast<std::size_t>(n - 1)];
        for (long x = 0; x <= n; ++x) {
            Integer lhs, rhs = 0;
            mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(n));
            for (long j = 0; j < n; ++j) rhs += E[static_cast<std::size_t>(j)] * binomial(x + j, n);
            if (lhs != rhs) t.worpitzky = false;
        }
        for (long i = 0; i < n; ++i) {
            Integer c = 0;
            for (long j = 0; j < static_cast<long>(e.size()); ++j)
                if (i - j >= 0) c += e[static_cast<std::size_t>(j)] * binomial(n - 1 - 2 * j, i - j);
            if (c != E[static_cast<std::size_t>(i)]) t.relation = false;
        }
    }
    const auto qp = A_q_polynomials(static_cast<std::size_t>(n_max));
    for (long n = 1; n <= n_max; ++n)
        if (qp[static_cast<std::size_t>(n)] != t.e[static_cast<std::size_t>(n - 1)]) t.matches_A = false;
    return t;
}

namespace {

// tau_{n,r} from Taylor derivatives Bk[k] = k! b_k.
Rational tau_coeff(long n, int r, const LinearParams& p, const std::vector<Rational>& Bk) {
    const Rational nn(n);
    Rational s = 0;
    for (int k = 1; k <= r; ++k) s = s + Rational(binomial(r, k)) * Bk[static_cast<std::size_t>(k)] * nn.pow(r - k);
    return nn.pow(r) * linear_T(n, p) - linear_T(n - 1, p) * s;
}

std::vector<Rational> taylor_B(const LinearParams& p, int r) {
    const TruncSeries b = B_series(p.P, p.Q, static_cast<std::size_t>(std::max(r, 0)));
    std::vector<Rational> Bk;
    for (int k = 0; k <= r; ++k) Bk.push_back(b.derivative_at_zero(static_cast<std::size_t>(k)));
    return Bk;
}

}  // namespace

Rational tau_series_coeffs(long n, int r, const LinearParams& p) {
    if (p.Q.is_zero()) throw ZeroQ();
    if (r < 0) throw std::invalid_argument("r must be non-negative");
    if (r > 12) throw GuardExceeded("tau coefficient order above 12");
    return tau_coeff(n, r, p, taylor_B(p, r));
}

std::vector<Rational> conjecture_coeffs(int r, const Rational& P, const Rational& Q) {
    if (r < 0) throw std::invalid_argument("r must be non-negative");
    const Poly F{Q, -P, Rational(1)};
    Poly out{Rational(1)};
    for (int i = 0; i <= r; ++i) out = poly_mul(out, F);
    return out;
}

IdentityReport conjecture_check(int r_max, const LinearParams& p, long n_lo, long n_hi) {
    if (p.Q.is_zero()) throw ZeroQ();
    if (r_max < 0 || r_max > 6) throw GuardExceeded("conjecture check needs 0 <= r_max <= 6");
    const std::vector<Rational> Bk = taylor_B(p, r_max);
    TrialOutcome out;
    const std::string par = "P=" + p.P.to_string() + " Q=" + p.Q.to_string() + " t0=" + p.t0.to_string() +
                            " t1=" + p.t1.to_string();
    for (int r = 0; r <= r_max; ++r) {
        const auto f = conjecture_coeffs(r, p.P, p.Q);
        for (long n = n_lo; n <= n_hi; ++n) {
            Rational s = 0;
            for (std::size_t j = 0; j < f.size(); ++j)
                s = s + f[j] * tau_coeff(n + static_cast<long>(j), r, p, Bk);
            out.expect_equal("sum_j f_{r,j} tau_{n+j,r} = 0", par, {r, n}, s, Rational(0));
        }
    }
    std::vector<TrialOutcome> v{std::move(out)};
    IdentityReport rep = detail::merge_outcomes("conjecture", v);
    rep.notes.push_back(rep.passed() ? "conjecture: supported at desk scale" : "conjecture: counterexample found");
    return rep;
}

}  // namespace somos
