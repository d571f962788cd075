#include "somos/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "somos/errors.hpp"

namespace somos {

GaleRobinsonParams GaleRobinsonParams::somos4(Rational alpha, Rational beta, std::vector<Rational> init) {
    return somosN(4, std::move(alpha), std::move(beta), std::move(init));
}

GaleRobinsonParams GaleRobinsonParams::somosN(int N, Rational alpha, Rational beta,
                                              std::vector<Rational> init) {
    GaleRobinsonParams g;
    g.N = N;
    g.p = 1;
    g.q = 2;
    g.alpha = std::move(alpha);
    g.beta = std::move(beta);
    g.init = std::move(init);
    return g;
}

void GaleRobinsonParams::validate() const {
    if (N < 4) throw std::invalid_argument("Gale-Robinson order N must be >= 4");
    if (!(0 < p && p < q && 2 * q <= N))
        throw std::invalid_argument("need 0 < p < q <= N/2, got p=" + std::to_string(p) +
                                    " q=" + std::to_string(q) + " N=" + std::to_string(N));
    if (init.size() != static_cast<std::size_t>(N))
        throw std::invalid_argument("need exactly N initial values");
    for (const auto& v : init)
        if (v.is_zero()) throw std::invalid_argument("initial values must be nonzero");
}

OrbitWindow lucas_window(const Rational& P, const Rational& Q, long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty Lucas window");
    if (lo < 0 && Q.is_zero()) throw ZeroQ();
    const long top = std::max(hi, -lo);
    std::vector<Rational> fwd(static_cast<std::size_t>(std::max(top, 1L) + 1));
    fwd[0] = 0;
    fwd[1] = 1;
    for (std::size_t n = 2; n < fwd.size(); ++n) fwd[n] = P * fwd[n - 1] - Q * fwd[n - 2];

    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    Rational qinv_pow(1);
    const Rational qinv = lo < 0 ? Q.inverse() : Rational(1);
    std::vector<Rational> neg;  // D_{-1}, D_{-2}, ...
    for (long k = 1; k <= -lo; ++k) {
        qinv_pow *= qinv;
        neg.push_back(-fwd[static_cast<std::size_t>(k)] * qinv_pow);
    }
    for (long n = lo; n <= hi; ++n)
        out.push_back(n >= 0 ? fwd[static_cast<std::size_t>(n)] : neg[static_cast<std::size_t>(-n - 1)]);
    return OrbitWindow(lo, std::move(out));
}

Rational lucas_D(long n, const Rational& P, const Rational& Q) {
    if (n < 0 && Q.is_zero()) throw ZeroQ();
    const long m = n < 0 ? -n : n;
    Rational prev(0), cur(1);
    if (m == 0) return 0;
    for (long k = 1; k < m; ++k) {
        Rational next = P * cur - Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (n > 0) return cur;
    return -cur / Q.pow(m);
}

Rational linear_T(long n, const LinearParams& p) {
    return -p.t0 * p.Q * lucas_D(n - 1, p.P, p.Q) + p.t1 * lucas_D(n, p.P, p.Q);
}

OrbitWindow linear_window(const LinearParams& p, long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty linear window");
    const OrbitWindow D = lucas_window(p.P, p.Q, lo - 1, hi);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    const Rational c0 = -p.t0 * p.Q;
    for (long n = lo; n <= hi; ++n) out.push_back(c0 * D[n - 1] + p.t1 * D[n]);
    return OrbitWindow(lo, std::move(out));
}

namespace {

OrbitWindow slice(const std::vector<Rational>& all, long all_lo, long lo, long hi) {
    lo = std::max(lo, all_lo);
    hi = std::min(hi, all_lo + static_cast<long>(all.size()) - 1);
    if (hi < lo) return {};
    return OrbitWindow(lo, std::vector<Rational>(all.begin() + (lo - all_lo), all.begin() + (hi - all_lo) + 1));
}

}  // namespace

OrbitWindow gale_robinson_extend(const GaleRobinsonParams& g, long lo, long hi, OrbitWindow* partial) {
    g.validate();
    if (hi < lo) throw std::invalid_argument("empty orbit window");
    const long N = g.N, p = g.p, q = g.q;
    const long full_lo = std::min(lo, 0L);
    const long full_hi = std::max(hi, N - 1);

    // Forward from the seed block first; negative indices are filled afterwards.
    std::vector<Rational> fwd(g.init.begin(), g.init.end());
    fwd.reserve(static_cast<std::size_t>(full_hi + 1));
    for (long m = N; m <= full_hi; ++m) {
        const long n = m - N;
        const Rational& div = fwd[static_cast<std::size_t>(n)];
        if (div.is_zero()) {
            if (partial) *partial = slice(fwd, 0, lo, hi);
            throw VanishingTerm(n);
        }
        auto t = [&](long k) -> const Rational& { return fwd[static_cast<std::size_t>(k)]; };
        fwd.push_back((g.alpha * t(n + p) * t(n + N - p) + g.beta * t(n + q) * t(n + N - q)) / div);
    }

    std::vector<Rational> all;
    if (full_lo < 0) {
        // Assemble [full_lo, full_hi] in place, filling negatives right to left.
        all.resize(static_cast<std::size_t>(full_hi - full_lo + 1));
        std::move(fwd.begin(), fwd.end(), all.begin() + (-full_lo));
        auto t = [&](long k) -> const Rational& { return all[static_cast<std::size_t>(k - full_lo)]; };
        for (long n = -1; n >= full_lo; --n) {
            const Rational& div = t(n + N);
            if (div.is_zero()) {
                if (partial) {
                    std::vector<Rational> done(all.begin() + (n + 1 - full_lo), all.end());
                    *partial = slice(done, n + 1, lo, hi);
                }
                throw VanishingTerm(n + N);
            }
            all[static_cast<std::size_t>(n - full_lo)] =
                (g.alpha * t(n + p) * t(n + N - p) + g.beta * t(n + q) * t(n + N - q)) / div;
        }
    } else {
        all = std::move(fwd);
    }
    return slice(all, full_lo, lo, hi);
}

OrbitWindow subsequence(const OrbitWindow& w, long d, long r) {
    if (d <= 0) throw std::invalid_argument("subsequence step must be positive");
    auto floor_div = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    const long n_lo = -floor_div(-(w.lo() - r), d);  // ceil((lo - r)/d)
    const long n_hi = floor_div(w.hi() - r, d);
    if (w.empty() || n_hi < n_lo) throw OutOfRange("no subsequence terms inside window");
    std::vector<Rational> out;
    for (long n = n_lo; n <= n_hi; ++n) out.push_back(w[d * n + r]);
    return OrbitWindow(n_lo, std::move(out));
}

std::pair<Rational, Rational> fit_somos4_coeffs(const OrbitWindow& w) {
    if (w.size() < 6) throw OutOfRange("Somos-4 fit needs at least 6 consecutive terms");
    auto row = [&](long n) {
        return std::tuple{w[n + 1] * w[n + 3], w[n + 2] * w[n + 2], w[n] * w[n + 4]};
    };
    for (long n = w.lo(); n + 5 <= w.hi(); ++n) {
        const auto [a1, b1, c1] = row(n);
        const auto [a2, b2, c2] = row(n + 1);
        const Rational det = a1 * b2 - a2 * b1;
        if (det.is_zero()) continue;
        Rational alpha = (c1 * b2 - c2 * b1) / det;
        Rational beta = (a1 * c2 - a2 * c1) / det;
        for (long m = w.lo(); m + 4 <= w.hi(); ++m) {
            const auto [a, b, c] = row(m);
            if (alpha * a + beta * b != c) throw NoConsistentFit(m);
        }
        return {std::move(alpha), std::move(beta)};
    }
    throw SingularSystem();
}

}  // namespace somos
