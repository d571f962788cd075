#include "somos/companion.hpp"

#include <stdexcept>
#include <tuple>

#include "somos/errors.hpp"
#include "somos/sequences.hpp"

namespace somos {

OrbitInvariants OrbitInvariants::from(const Rational& alpha, const Rational& beta, const Rational& H) {
    OrbitInvariants inv;
    inv.alpha = alpha;
    inv.beta = beta;
    inv.H = H;
    inv.I = alpha * alpha + beta * H;
    inv.J = alpha * alpha * inv.I - beta * beta * beta;
    std::tie(inv.g2, inv.g3) = curve_invariants(H, alpha, beta);
    return inv;
}

namespace {

Rational H_at(const OrbitWindow& w, long n, const Rational& alpha, const Rational& beta) {
    for (long k = n; k <= n + 3; ++k)
        if (w.at(k).is_zero()) throw VanishingTerm(k);
    const Rational &t0 = w[n], &t1 = w[n + 1], &t2 = w[n + 2], &t3 = w[n + 3];
    return t0 * t3 / (t1 * t2) + alpha * t1 * t1 / (t0 * t2) + alpha * t2 * t2 / (t1 * t3) +
           beta * t1 * t2 / (t0 * t3);
}

}  // namespace

Rational compute_H(const OrbitWindow& w, const Rational& alpha, const Rational& beta) {
    if (w.size() < 4) throw OutOfRange("H needs four consecutive terms");
    return H_at(w, w.lo(), alpha, beta);
}

std::vector<Rational> H_along(const OrbitWindow& w, const Rational& alpha, const Rational& beta) {
    if (w.size() < 4) throw OutOfRange("H needs four consecutive terms");
    std::vector<Rational> out;
    for (long n = w.lo(); n + 3 <= w.hi(); ++n) out.push_back(H_at(w, n, alpha, beta));
    return out;
}

std::pair<Rational, Rational> curve_invariants(const Rational& H, const Rational& alpha, const Rational& beta) {
    if (alpha.is_zero()) throw ZeroAlpha();
    const Rational a2 = alpha * alpha;
    const Rational H2 = H * H, H3 = H2 * H, H4 = H2 * H2, H6 = H4 * H2;
    const Rational b2 = beta * beta, b3 = b2 * beta;
    Rational g2 = (H4 - 8 * beta * H2 - 24 * a2 * H + 16 * b2) / (12 * a2);
    Rational g3 = -(H6 - 12 * beta * H4 - 36 * a2 * H3 + 48 * b2 * H2 + 144 * a2 * beta * H + 216 * a2 * a2 -
                    64 * b3) /
                  (216 * a2 * alpha);
    return {std::move(g2), std::move(g3)};
}

Rational discriminant(const Rational& g2, const Rational& g3) { return g2 * g2 * g2 - 27 * g3 * g3; }

CompanionSeq::CompanionSeq(OrbitInvariants inv) : inv_(std::move(inv)) {
    const Rational& r = inv_.alpha;
    terms_ = {QuadExt::rational(0, r), QuadExt::rational(1, r), QuadExt::radical(1, r),
              QuadExt::rational(-inv_.beta, r), QuadExt::radical(-inv_.I, r)};
}

void CompanionSeq::extend_to(long n) {
    const long m = n < 0 ? -n : n;
    const QuadExt W2sq = terms_[2] * terms_[2];
    const QuadExt W1W3 = terms_[1] * terms_[3];
    while (extent() < m) {
        const long k = extent() - 3;  // next term is W_{k+4}
        const QuadExt& div = terms_[static_cast<std::size_t>(k)];
        if (div.is_zero()) throw VanishingW(k);
        auto W = [&](long i) -> const QuadExt& { return terms_[static_cast<std::size_t>(i)]; };
        terms_.push_back((W2sq * W(k + 1) * W(k + 3) - W1W3 * W(k + 2) * W(k + 2)) / div);
    }
}

QuadExt CompanionSeq::at(long n) const {
    const long m = n < 0 ? -n : n;
    if (m > extent()) throw OutOfRange("W_" + std::to_string(n) + " not computed");
    const QuadExt& w = terms_[static_cast<std::size_t>(m)];
    return n < 0 ? -w : w;
}

QuadExt CompanionSeq::operator()(long n) {
    extend_to(n);
    return at(n);
}

QuadExt companion_W(const OrbitInvariants& inv, long n) {
    CompanionSeq seq(inv);
    return seq(n);
}

QuadExt linear_companion_W(long n, const Rational& P, const Rational& Q) {
    if (Q.is_zero()) throw ZeroQ();
    const Rational D = lucas_D(n, P, Q);
    // Odd n: D_n / Q^{(n-1)/2}. Even n: D_n / Q^{n/2} * sqrt(Q).
    if (n % 2 != 0) return QuadExt::rational(D / Q.pow((n - 1) / 2), Q);
    return QuadExt::radical(D / Q.pow(n / 2), Q);
}

std::pair<Rational, Rational> subsequence_coeffs(const OrbitInvariants& inv, long d) {
    if (d <= 0) throw std::invalid_argument("subsequence step must be positive");
    CompanionSeq W(inv);
    W.extend_to(3 * d);
    const QuadExt Wd = W.at(d);
    if (Wd.is_zero()) throw VanishingW(d);
    const QuadExt a = W.at(2 * d) * W.at(2 * d) / (Wd * Wd);
    const QuadExt b = -W.at(3 * d) / Wd;
    // Parity makes both quotients rational.
    if (!a.is_pure_rational() || !b.is_pure_rational())
        throw DomainError("subsequence coefficients left the rational part");
    return {a.rat_part(), b.rat_part()};
}

std::optional<std::pair<long, long>> IntegerEDS::divisibility_violation() const {
    for (long n = 1; n <= m_max(); ++n)
        for (long m = 2 * n; m <= m_max(); m += n) {
            const Integer& wn = at(n);
            const Integer& wm = at(m);
            const bool ok = wn == 0 ? wm == 0 : mpz_divisible_p(wm.get_mpz_t(), wn.get_mpz_t()) != 0;
            if (!ok) return std::pair{n, m};
        }
    return std::nullopt;
}

IntegerEDS ward_generate(const Integer& W2, const Integer& W3, const Integer& W4, long m_max) {
    if (m_max < 0) throw std::invalid_argument("m_max must be non-negative");
    if (!mpz_divisible_p(W4.get_mpz_t(), W2.get_mpz_t())) throw SeedDivisibility();
    IntegerEDS eds;
    auto& t = eds.terms_;
    t = {Integer(0), Integer(1), W2, W3, W4};
    auto W = [&](long i) -> const Integer& { return t[static_cast<std::size_t>(i)]; };
    // Duplication formulas: only W2 is ever a divisor, so zero terms
    // (torsion seeds such as 1, 1, 1) do not stop the sequence.
    //   W_{2n+1} = W_{n+2} W_n^3 - W_{n-1} W_{n+1}^3
    //   W_2 W_{2n} = W_n (W_{n+2} W_{n-1}^2 - W_{n-2} W_{n+1}^2)
    for (long m = 5; m <= m_max; ++m) {
        const long n = m / 2;
        if (m % 2 == 1) {
            t.push_back(W(n + 2) * W(n) * W(n) * W(n) - W(n - 1) * W(n + 1) * W(n + 1) * W(n + 1));
            continue;
        }
        if (W2 == 0) throw VanishingW(2);
        const Integer num = W(n) * (W(n + 2) * W(n - 1) * W(n - 1) - W(n - 2) * W(n + 1) * W(n + 1));
        if (!mpz_divisible_p(num.get_mpz_t(), W2.get_mpz_t())) throw NonIntegerTerm(m);
        Integer next;
        mpz_divexact(next.get_mpz_t(), num.get_mpz_t(), W2.get_mpz_t());
        t.push_back(std::move(next));
    }
    t.resize(static_cast<std::size_t>(m_max + 1));
    return eds;
}

}  // namespace somos
