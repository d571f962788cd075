#include "somos/identities.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "somos/errors.hpp"
#include "somos/quad_ext.hpp"
#include "somos/sequences.hpp"

namespace somos {

namespace {

// D_n for |n| <= M, computed once per (P, Q) draw.
class LucasTable {
public:
    LucasTable(const Rational& P, const Rational& Q, long M) : M_(M), v_(static_cast<std::size_t>(2 * M + 1)) {
        if (Q.is_zero()) throw ZeroQ();
        at(0) = 0;
        if (M >= 1) at(1) = 1;
        for (long n = 2; n <= M; ++n) at(n) = P * at(n - 1) - Q * at(n - 2);
        Rational Qn = 1;
        for (long n = 1; n <= M; ++n) {
            Qn = Qn * Q;
            at(-n) = -at(n) / Qn;
        }
    }
    const Rational& operator()(long n) const {
        if (n < -M_ || n > M_) throw OutOfRange("D_" + std::to_string(n) + " outside table");
        return v_[static_cast<std::size_t>(n + M_)];
    }

private:
    Rational& at(long n) { return v_[static_cast<std::size_t>(n + M_)]; }
    long M_;
    std::vector<Rational> v_;
};

long table_bound(const TrialConfig& cfg) { return 6 * std::max(std::abs(cfg.index_lo), std::abs(cfg.index_hi)) + 8; }

std::string pq_str(const Rational& P, const Rational& Q) { return "P=" + P.to_string() + " Q=" + Q.to_string(); }

std::string pqt_str(const Rational& P, const Rational& Q, const Rational& t0, const Rational& t1) {
    return pq_str(P, Q) + " t0=" + t0.to_string() + " t1=" + t1.to_string();
}

// Q^e for any integer e.
Rational qpow(const Rational& Q, long e) { return Q.pow(e); }

}  // namespace

IdentityReport verify_convolution(const TrialConfig& cfg) {
    const long M = table_bound(cfg);
    return run_trials("convolution", cfg, [&](TrialRng& rng, TrialOutcome& out) {
        const Rational P = rng.rational(), Q = rng.nonzero_rational();
        const LucasTable D(P, Q, M);
        const long n = rng.index(), p = rng.index();
        const std::string par = pq_str(P, Q);
        out.expect_equal("D_{n+p} = -Q D_{p-1} D_n + D_p D_{n+1}", par, {n, p}, D(n + p),
                         -Q * D(p - 1) * D(n) + D(p) * D(n + 1));
        out.expect_equal("Q^{p-1} D_{n-p+1} = D_p D_n - D_{p-1} D_{n+1}", par, {n, p}, qpow(Q, p - 1) * D(n - p + 1),
                         D(p) * D(n) - D(p - 1) * D(n + 1));
    });
}

IdentityReport verify_vajda(const TrialConfig& cfg) {
    const long M = table_bound(cfg);
    return run_trials("vajda", cfg, [&](TrialRng& rng, TrialOutcome& out) {
        const Rational P = rng.rational(), Q = rng.nonzero_rational();
        const Rational t0 = rng.rational(), t1 = rng.rational();
        const LucasTable D(P, Q, M);
        auto T = [&](long k) { return -t0 * Q * D(k - 1) + t1 * D(k); };
        const long n = rng.index(), p = rng.index(), q = rng.index();
        Rational rhs = qpow(Q, n) * D(p) * D(q);
        if (cfg.inject_vajda_fault) rhs = -rhs;
        out.expect_equal("D: D_{n+p} D_{n+q} - D_n D_{n+p+q} = Q^n D_p D_q", pq_str(P, Q), {n, p, q},
                         D(n + p) * D(n + q) - D(n) * D(n + p + q), rhs);
        const Rational c = Q * t0 * t0 - P * t0 * t1 + t1 * t1;
        out.expect_equal("T: T_{n+p} T_{n+q} - T_n T_{n+p+q} = c Q^n D_p D_q", pqt_str(P, Q, t0, t1), {n, p, q},
                         T(n + p) * T(n + q) - T(n) * T(n + p + q), c * qpow(Q, n) * D(p) * D(q));
    });
}

IdentityReport verify_cyclic_sum(int d, const TrialConfig& cfg) {
    if (d < 2 || d > 8) throw std::invalid_argument("cyclic sum needs 2 <= d <= 8");
    const long M = table_bound(cfg);
    return run_trials("cyclic-sum-" + std::to_string(d), cfg, [&](TrialRng& rng, TrialOutcome& out) {
        const Rational P = rng.rational(), Q = rng.nonzero_rational();
        const LucasTable D(P, Q, M);
        std::vector<long> a(static_cast<std::size_t>(d));
        for (auto& x : a) x = rng.index();
        Rational sum = 0;
        for (int j = 0; j < d; ++j) {
            const long aj = a[static_cast<std::size_t>(j)], ak = a[static_cast<std::size_t>((j + 1) % d)];
            sum = sum + D(aj - ak) * D(aj + ak) / qpow(Q, aj);
        }
        out.expect_equal("sum_j D_{a_j-a_{j+1}} D_{a_j+a_{j+1}} / Q^{a_j} = 0", pq_str(P, Q), a, sum, Rational(0));
    });
}

IdentityReport verify_four_linear(const TrialConfig& cfg) {
    const long M = table_bound(cfg);
    return run_trials("four-linear", cfg, [&](TrialRng& rng, TrialOutcome& out) {
        const Rational P = rng.rational(), Q = rng.nonzero_rational();
        const Rational t0 = rng.rational(), t1 = rng.rational();
        const LucasTable D(P, Q, M);
        const std::string par = pq_str(P, Q);
        auto br = [&](long x, long y) { return D(x - y) * D(x + y) / qpow(Q, x); };

        // (a1, a2, a3, b) form.
        const long a1 = rng.index(), a2 = rng.index(), a3 = rng.index(), b = rng.index();
        const Rational A[3] = {D(b - a3) * D(b + a3) * br(a1, a2), D(b - a1) * D(b + a1) * br(a2, a3),
                               D(b - a2) * D(b + a2) * br(a3, a1)};
        out.expect_equal("(a1,a2,a3,b) form", par, {a1, a2, a3, b}, A[0] + A[1] + A[2], Rational(0));

        // Same data after n = a1 - b, u = a2 - b, m = a3 - b, s = 2b.
        {
            const long n = a1 - b, u = a2 - b, m = a3 - b, s = 2 * b;
            const Rational R[3] = {qpow(Q, u) * D(m) * D(m + s) * D(n - u) * D(n + u + s),
                                   qpow(Q, m) * D(n) * D(n + s) * D(u - m) * D(u + m + s),
                                   qpow(Q, n) * D(u) * D(u + s) * D(m - n) * D(m + n + s)};
            out.expect_equal("(n,u,m,s) form, substituted", par, {n, u, m, s}, R[0] + R[1] + R[2], Rational(0));
            const Rational scale = qpow(Q, n + m + u + b);
            for (int i = 0; i < 3; ++i)
                out.expect_equal("variable change, term " + std::to_string(i + 1), par, {a1, a2, a3, b}, A[i],
                                 -R[i] / scale);
        }

        // (n, u, m, s) drawn freely, s of either parity.
        const long n = rng.index(), u = rng.index(), m = rng.index(), s = rng.index();
        const Rational R[3] = {qpow(Q, u) * D(m) * D(m + s) * D(n - u) * D(n + u + s),
                               qpow(Q, m) * D(n) * D(n + s) * D(u - m) * D(u + m + s),
                               qpow(Q, n) * D(u) * D(u + s) * D(m - n) * D(m + n + s)};
        out.expect_equal("(n,u,m,s) form", par, {n, u, m, s}, R[0] + R[1] + R[2], Rational(0));
        const Rational C[3] = {qpow(Q, m) * D(u) * D(u + s) * D(n - m) * D(n + m + s),
                               -qpow(Q, u) * D(m) * D(m + s) * D(n - u) * D(n + u + s),
                               qpow(Q, u) * D(m - u) * D(u + m + s) * D(n) * D(n + s)};
        out.expect_equal("corrected form", par, {n, u, m, s}, C[0] + C[1] + C[2], Rational(0));
        out.expect_equal("corrected form, term 1", par, {n, u, m, s}, C[0], -R[2]);
        out.expect_equal("corrected form, term 2", par, {n, u, m, s}, C[1], -R[0]);
        out.expect_equal("corrected form, term 3", par, {n, u, m, s}, C[2], -R[1]);

        auto T = [&](long k) { return -t0 * Q * D(k - 1) + t1 * D(k); };
        const Rational tv = qpow(Q, m) * D(u) * D(u + s) * T(n - m) * T(n + m + s) -
                            qpow(Q, u) * D(m) * D(m + s) * T(n - u) * T(n + u + s) +
                            qpow(Q, u) * D(m - u) * D(u + m + s) * T(n) * T(n + s);
        out.expect_equal("T form", pqt_str(P, Q, t0, t1), {n, u, m, s}, tv, Rational(0));
    });
}

IdentityReport verify_lucas_identity(const TrialConfig& cfg) {
    const long M = table_bound(cfg);
    IdentityReport rep = run_trials("lucas", cfg, [&](TrialRng& rng, TrialOutcome& out) {
        const Rational P = rng.rational(), Q = rng.nonzero_rational();
        const LucasTable D(P, Q, M);
        const long n = rng.index(), u = rng.index();
        out.expect_equal("Q^{u-1} D_{n-u} D_{n+u} = D_u^2 D_{n-1} D_{n+1} - D_{u-1} D_{u+1} D_n^2", pq_str(P, Q),
                         {n, u}, qpow(Q, u - 1) * D(n - u) * D(n + u),
                         D(u) * D(u) * D(n - 1) * D(n + 1) - D(u - 1) * D(u + 1) * D(n) * D(n));
    });
    // The printed display uses an undefined exponent symbol; reading it as 1
    // gives the literal form below, which fails on Fibonacci.
    const LucasTable F(1, -1, 16);
    const long n = 4, u = 2;
    const Rational lit_l = F(n - u) * F(n + u);
    const Rational lit_r = F(1) * F(1) * F(n - 1) * F(n + 1) - F(u - 1) * F(u + 1) * F(n) * F(n);
    const Rational cor_l = Rational(-1).pow(u - 1) * F(n - u) * F(n + u);
    const Rational cor_r = F(u) * F(u) * F(n - 1) * F(n + 1) - F(u - 1) * F(u + 1) * F(n) * F(n);
    rep.notes.push_back("literal indices (exponent and D_q read with q = 1) at Fibonacci (n,u)=(4,2): lhs=" +
                        lit_l.to_string() + " rhs=" + lit_r.to_string() + (lit_l == lit_r ? " holds" : " fails"));
    rep.notes.push_back("corrected indices at Fibonacci (n,u)=(4,2): lhs=" + cor_l.to_string() +
                        " rhs=" + cor_r.to_string() + (cor_l == cor_r ? " holds" : " fails"));
    return rep;
}

IdentityReport verify_linear_somos4(const TrialConfig& cfg) {
    const long M = table_bound(cfg);
    return run_trials("linear-somos4", cfg, [&](TrialRng& rng, TrialOutcome& out) {
        const Rational P = rng.rational(), Q = rng.nonzero_rational();
        const Rational t0 = rng.rational(), t1 = rng.rational();
        const LucasTable D(P, Q, M);
        auto T = [&](long k) { return -t0 * Q * D(k - 1) + t1 * D(k); };
        const std::string par = pqt_str(P, Q, t0, t1);
        const Rational alpha = P * P / Q, beta = -(P * P - Q) / Q;

        const long n = rng.index();
        out.expect_equal("T_n T_{n+4} = (P^2/Q) T_{n+1} T_{n+3} - ((P^2-Q)/Q) T_{n+2}^2", par, {n}, T(n) * T(n + 4),
                         alpha * T(n + 1) * T(n + 3) + beta * T(n + 2) * T(n + 2));

        // First integral and degenerate curve need four nonzero terms.
        const long k = rng.index();
        std::vector<Rational> seg;
        for (long i = k; i <= k + 3; ++i) {
            seg.push_back(T(i));
            if (seg.back().is_zero()) throw Resample{};
        }
        const Rational H = compute_H(OrbitWindow(k, seg), alpha, beta);
        out.expect_equal("H = (P^2 + 2Q)/Q", par, {k}, H, (P * P + 2 * Q) / Q);
        if (!alpha.is_zero()) {
            const auto [g2, g3] = curve_invariants(H, alpha, beta);
            out.expect_equal("degenerate curve: g2^3 - 27 g3^2 = 0", par, {}, discriminant(g2, g3), Rational(0));
        }

        // Relation with the degenerate companion, radicand Q.
        auto W = [&](long i) { return linear_companion_W(i, P, Q); };
        auto t = [&](long i) { return QuadExt::rational(T(i), Q); };
        const long m = rng.index(), u = rng.index(), s = rng.index(), n2 = rng.index();
        const QuadExt lhs = W(u) * W(u + s) * t(n2 - m) * t(n2 + m + s) - W(m) * W(m + s) * t(n2 - u) * t(n2 + u + s) +
                            W(m - u) * W(u + m + s) * t(n2) * t(n2 + s);
        out.expect_equal("W_u W_{u+s} t_{n-m} t_{n+m+s} - W_m W_{m+s} t_{n-u} t_{n+u+s} + W_{m-u} W_{u+m+s} t_n t_{n+s} = 0",
                         par, {m, u, s, n2}, lhs, QuadExt::rational(0, Q));
    });
}

namespace {

QuadExt elliptic_residual(const std::function<QuadExt(long)>& W, long m, long u, long n, long s) {
    return W(m) * W(m + s) * W(n - u) * W(n + u + s) + W(n) * W(n + s) * W(u - m) * W(u + m + s) +
           W(u) * W(u + s) * W(m - n) * W(m + n + s);
}

}  // namespace

IdentityReport verify_elliptic_relation(const TrialConfig& cfg) {
    return run_trials("elliptic-relation", cfg, [&](TrialRng& rng, TrialOutcome& out) {
        auto draw = [&] { return rng.integer(-4, 6); };
        {
            const Rational alpha = rng.nonzero_rational(), beta = rng.rational(), H = rng.rational();
            CompanionSeq seq(OrbitInvariants::from(alpha, beta, H));
            const long m = draw(), u = draw(), n = draw(), s = draw();
            seq.extend_to(20);
            const QuadExt r = elliptic_residual([&](long i) { return seq.at(i); }, m, u, n, s);
            out.expect_equal("companion", "alpha=" + alpha.to_string() + " beta=" + beta.to_string() + " H=" + H.to_string(),
                             {m, u, n, s}, r, QuadExt::rational(0, alpha));
        }
        {
            const Rational P = rng.rational(), Q = rng.nonzero_rational();
            const long m = draw(), u = draw(), n = draw(), s = draw();
            const QuadExt r = elliptic_residual([&](long i) { return linear_companion_W(i, P, Q); }, m, u, n, s);
            out.expect_equal("degenerate companion", pq_str(P, Q), {m, u, n, s}, r, QuadExt::rational(0, Q));
        }
    });
}

namespace {

void gale_robinson_checks(const OrbitWindow& orbit, CompanionSeq& W, int N_max, TrialOutcome& out,
                          const std::string& par) {
    const Rational& r = W.invariants().alpha;
    W.extend_to(N_max + 2);
    auto w = [&](long i) { return W.at(i); };
    auto t = [&](long i) { return QuadExt::rational(orbit.at(i), r); };
    for (long N = 2; N <= N_max; ++N)
        for (long q = 2; q <= N; ++q)
            for (long p = 1; p < q; ++p)
                for (long n = orbit.lo(); n + N <= orbit.hi(); ++n)
                    out.expect_equal("W_{q-p} W_{N-p-q} t_n t_{n+N} = W_q W_{N-q} t_{n+p} t_{n+N-p} - W_p W_{N-p} t_{n+q} t_{n+N-q}",
                                     par, {N, p, q, n}, w(q - p) * w(N - p - q) * t(n) * t(n + N),
                                     w(q) * w(N - q) * t(n + p) * t(n + N - p) -
                                         w(p) * w(N - p) * t(n + q) * t(n + N - q));
    // Special cases N = 2p and N = 2p + 1 with q = p + 1, recentred.
    for (long p = 1; 2 * p + 1 <= N_max; ++p)
        for (long n = orbit.lo() + p + 1; n + p + 1 <= orbit.hi(); ++n) {
            out.expect_equal("W_1^2 t_{n-p} t_{n+p} = W_p^2 t_{n-1} t_{n+1} - W_{p-1} W_{p+1} t_n^2", par, {p, n},
                             w(1) * w(1) * t(n - p) * t(n + p),
                             w(p) * w(p) * t(n - 1) * t(n + 1) - w(p - 1) * w(p + 1) * t(n) * t(n));
            if (n + 2 <= orbit.hi())
                out.expect_equal("W_1 W_2 t_{n-p} t_{n+p+1} = W_p W_{p+1} t_{n-1} t_{n+2} - W_{p-1} W_{p+2} t_n t_{n+1}",
                                 par, {p, n}, w(1) * w(2) * t(n - p) * t(n + p + 1),
                                 w(p) * w(p + 1) * t(n - 1) * t(n + 2) - w(p - 1) * w(p + 2) * t(n) * t(n + 1));
        }
}

std::string inv_str(const OrbitInvariants& inv) {
    return "alpha=" + inv.alpha.to_string() + " beta=" + inv.beta.to_string() + " H=" + inv.H.to_string();
}

}  // namespace

IdentityReport verify_gale_robinson_identity(const OrbitWindow& orbit, CompanionSeq& W, int N_max) {
    if (N_max < 2) throw std::invalid_argument("N_max must be at least 2");
    TrialOutcome out;
    gale_robinson_checks(orbit, W, N_max, out, inv_str(W.invariants()));
    std::vector<TrialOutcome> v{std::move(out)};
    return detail::merge_outcomes("gale-robinson", v);
}

namespace {

// Random rational Somos-4 orbit over [lo, hi] with its invariants.
std::pair<OrbitWindow, OrbitInvariants> random_somos4(TrialRng& rng, long lo, long hi) {
    const Rational alpha = rng.nonzero_rational(), beta = rng.nonzero_rational();
    std::vector<Rational> init;
    for (int i = 0; i < 4; ++i) init.push_back(rng.nonzero_rational());
    OrbitWindow w = gale_robinson_extend(GaleRobinsonParams::somos4(alpha, beta, init), lo, hi);
    const Rational H = compute_H(w, alpha, beta);
    return {std::move(w), OrbitInvariants::from(alpha, beta, H)};
}

}  // namespace

IdentityReport verify_gale_robinson_random(const TrialConfig& cfg, int N_max) {
    if (N_max < 2) throw std::invalid_argument("N_max must be at least 2");
    return run_trials("gale-robinson-random", cfg, [&](TrialRng& rng, TrialOutcome& out) {
        auto [w, inv] = random_somos4(rng, -2, N_max + 2);
        CompanionSeq W(inv);
        gale_robinson_checks(w, W, N_max, out, inv_str(inv));
    });
}

IdentityReport verify_subsequences(const TrialConfig& cfg) {
    IdentityReport rep = run_trials("subsequences", cfg, [&](TrialRng& rng, TrialOutcome& out) {
        auto [w, inv] = random_somos4(rng, 0, 26);
        for (long d = 1; d <= 3; ++d) {
            const auto [ad, bd] = subsequence_coeffs(inv, d);
            for (long r = 0; r < d; ++r) {
                const auto [fa, fb] = fit_somos4_coeffs(subsequence(w, d, r));
                out.expect_equal("alpha_d = W_{2d}^2 / W_d^2", inv_str(inv), {d, r}, fa, ad);
                out.expect_equal("beta_d = -W_{3d} / W_d", inv_str(inv), {d, r}, fb, bd);
            }
        }
    });
    rep.notes.push_back("beta_d carries a minus sign: the printed W_{3d}/W_d has the opposite sign of the fitted value");
    return rep;
}

std::vector<int> lambda_shift(const std::vector<int>& lambda) {
    const int d = static_cast<int>(lambda.size());
    std::vector<int> out;
    if (d == 0) return out;
    out.reserve(lambda.size());
    auto inc = [d](int x) { return x % d + 1; };
    out.push_back(inc(lambda.back()));
    for (int j = 0; j + 1 < d; ++j) out.push_back(inc(lambda[static_cast<std::size_t>(j)]));
    return out;
}

LambdaEnumeration enumerate_lambda_sets(int d, const TrialConfig& cfg) {
    if (d < 3 || d > 6) throw std::invalid_argument("lambda enumeration needs 3 <= d <= 6");
    const long M = table_bound(cfg);
    const auto ud = static_cast<std::size_t>(d);

    // Per instance: bracket[j] = {a_j, a_{j+1}} and factor[k] = D_{b-a_k} D_{b+a_k}.
    struct Instance {
        std::vector<Rational> bracket, factor;
    };
    const long n_inst = std::max(cfg.trials, 0L);
    std::vector<Instance> inst(static_cast<std::size_t>(n_inst));
    const bool parallel = cfg.exec == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < n_inst; ++i) {
        TrialRng rng(cfg, "lambda-" + std::to_string(d), i);
        const Rational P = rng.rational(), Q = rng.nonzero_rational();
        const LucasTable D(P, Q, M);
        std::vector<long> a(ud);
        for (auto& x : a) x = rng.index();
        const long b = rng.index();
        Instance& in = inst[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < ud; ++j) {
            const long aj = a[j], ak = a[(j + 1) % ud];
            in.bracket.push_back(D(aj - ak) * D(aj + ak) / Q.pow(aj));
            in.factor.push_back(D(b - a[j]) * D(b + a[j]));
        }
    }

    long total = 1;
    for (int j = 0; j < d; ++j) total *= d;
    auto decode = [&](long code) {
        std::vector<int> lam(ud);
        for (std::size_t j = ud; j-- > 0;) {
            lam[j] = static_cast<int>(code % d) + 1;
            code /= d;
        }
        return lam;
    };

    std::vector<char> pass(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long code = 0; code < total; ++code) {
        const auto lam = decode(code);
        bool ok = true;
        for (const auto& in : inst) {
            Rational s = 0;
            for (std::size_t j = 0; j < ud; ++j)
                s = s + in.factor[static_cast<std::size_t>(lam[j] - 1)] * in.bracket[j];
            if (!s.is_zero()) {
                ok = false;
                break;
            }
        }
        pass[static_cast<std::size_t>(code)] = ok ? 1 : 0;
    }

    LambdaEnumeration res;
    res.d = d;
    res.instances = n_inst;
    res.candidates = total;
    std::set<std::vector<int>> passing;
    for (long code = 0; code < total; ++code)
        if (pass[static_cast<std::size_t>(code)]) passing.insert(decode(code));

    std::set<std::vector<int>> seen;
    for (auto it = passing.rbegin(); it != passing.rend(); ++it) {
        if (seen.count(*it)) continue;
        std::vector<std::vector<int>> cls{*it};
        for (auto x = lambda_shift(*it); x != *it; x = lambda_shift(x)) cls.push_back(x);
        for (const auto& x : cls) {
            seen.insert(x);
            if (!passing.count(x)) res.shift_closed = false;
        }
        // Start from the lexicographically largest member, keep orbit order.
        const auto top = std::max_element(cls.begin(), cls.end()) - cls.begin();
        std::rotate(cls.begin(), cls.begin() + top, cls.end());
        const bool constant = std::all_of(it->begin(), it->end(), [&](int x) { return x == it->front(); });
        (constant ? res.trivial_classes : res.classes).push_back(std::move(cls));
    }
    return res;
}

bool SuiteReport::passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed(); });
}

long SuiteReport::failures() const {
    long n = 0;
    for (const auto& r : reports) n += static_cast<long>(r.failures.size());
    return n;
}

SuiteReport verify_all(const TrialConfig& cfg) {
    SuiteReport s;
    s.reports.push_back(verify_convolution(cfg));
    s.reports.push_back(verify_vajda(cfg));
    for (int d = 2; d <= 6; ++d) s.reports.push_back(verify_cyclic_sum(d, cfg));
    s.reports.push_back(verify_four_linear(cfg));
    s.reports.push_back(verify_lucas_identity(cfg));
    s.reports.push_back(verify_linear_somos4(cfg));
    s.reports.push_back(verify_elliptic_relation(cfg));
    s.reports.push_back(verify_gale_robinson_random(cfg, 10));
    s.reports.push_back(verify_subsequences(cfg));
    return s;
}

}  // namespace somos
