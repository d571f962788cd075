#pragma once

#include <span>
#include <string>
#include <vector>

#include "somos/rational.hpp"

namespace somos {

// Truncated power series sum_{k<=order} c_k x^k. Coefficients are plain,
// not divided by k!. Binary operations truncate to the smaller order.
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : c_(order + 1) {}
    explicit TruncSeries(std::vector<Rational> coeffs);

    static TruncSeries constant(const Rational& c, std::size_t order);
    // The series x (identity function).
    static TruncSeries variable(std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    Rational& operator[](std::size_t k) { return c_[k]; }
    std::span<const Rational> coeffs() const { return c_; }

    bool is_zero() const;
    TruncSeries truncate(std::size_t order) const;
    // Formal d/dx; the result has order one less (order 0 stays order 0).
    TruncSeries derivative() const;
    // k-th Taylor derivative at 0, i.e. k! c_k.
    Rational derivative_at_zero(std::size_t k) const;
    std::string to_string() const;

    TruncSeries operator-() const;
    TruncSeries& operator*=(const Rational& s);

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
    friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }
    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<Rational> c_;
};

// Cauchy product truncated to min(order(a), order(b)).
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
// q with q*b == a up to truncation; throws ZeroLeadingCoefficient if b(0) == 0.
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);
// e^{n x}: coefficient k is n^k / k!.
TruncSeries series_exp_scaled(long n, std::size_t order);

Integer factorial(unsigned long k);
Integer binomial(long n, long k);

}  // namespace somos
