#include "somos/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "somos/errors.hpp"

namespace somos {

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncSeries TruncSeries::constant(const Rational& c, std::size_t order) {
    TruncSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncSeries TruncSeries::variable(std::size_t order) {
    TruncSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

bool TruncSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

TruncSeries TruncSeries::truncate(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
}

TruncSeries TruncSeries::derivative() const {
    if (order() == 0) return TruncSeries(0);
    TruncSeries d(order() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d.c_[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return d;
}

Rational TruncSeries::derivative_at_zero(std::size_t k) const {
    return c_.at(k) * Rational(factorial(k));
}

std::string TruncSeries::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) out += ", ";
        out += c_[k].to_string();
    }
    return "[" + out + "]";
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries& TruncSeries::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
    if (b.c_[0].is_zero()) throw ZeroLeadingCoefficient();
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries q(n);
    const Rational inv0 = b.c_[0].inverse();
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc = a.c_[k];
        for (std::size_t i = 0; i < k; ++i)
            if (!q.c_[i].is_zero() && !b.c_[k - i].is_zero()) acc -= q.c_[i] * b.c_[k - i];
        q.c_[k] = acc * inv0;
    }
    return q;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) { return a / b; }

TruncSeries series_exp_scaled(long n, std::size_t order) {
    TruncSeries s(order);
    Rational term(1);
    for (std::size_t k = 0; k <= order; ++k) {
        s[k] = term;
        term *= Rational(n, static_cast<long>(k + 1));
    }
    return s;
}

Integer factorial(unsigned long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    Integer r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

}  // namespace somos
