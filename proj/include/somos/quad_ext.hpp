#pragma once

#include <string>

#include "somos/rational.hpp"

namespace somos {

// a + b*sqrt(r) with rational radicand r, treated formally: r may be negative
// or a perfect square. Arithmetic requires identical radicands.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational a, Rational b, Rational r)
        : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {}

    static QuadExt rational(Rational a, Rational r) { return {std::move(a), Rational(0), std::move(r)}; }
    static QuadExt radical(Rational b, Rational r) { return {Rational(0), std::move(b), std::move(r)}; }

    const Rational& rat_part() const { return a_; }
    const Rational& rad_part() const { return b_; }
    const Rational& radicand() const { return r_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    // Pure components: even-index companion terms live in the radical part,
    // odd-index terms in the rational part.
    bool is_pure_rational() const { return b_.is_zero(); }
    bool is_pure_radical() const { return a_.is_zero(); }

    QuadExt conjugate() const { return {a_, -b_, r_}; }
    // a^2 - b^2 r
    Rational norm() const { return a_ * a_ - b_ * b_ * r_; }

    // Folds sqrt(r) into the rational part when r is a rational square (or 0).
    // The radicand is kept so the result still combines with its siblings.
    QuadExt canonicalize() const;

    std::string to_string() const;

    QuadExt operator-() const { return {-a_, -b_, r_}; }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);
    QuadExt& operator*=(const Rational& c) { a_ *= c; b_ *= c; return *this; }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend QuadExt operator*(QuadExt x, const Rational& c) { return x *= c; }
    friend QuadExt operator*(const Rational& c, QuadExt x) { return x *= c; }

    // Component-wise equality (radicand included); no implicit canonicalization.
    friend bool operator==(const QuadExt&, const QuadExt&) = default;

private:
    void require_same_radicand(const QuadExt& o) const;

    Rational a_{0};
    Rational b_{0};
    Rational r_{0};
};

// (a1 a2 + b1 b2 r) + (a1 b2 + a2 b1) sqrt(r)
QuadExt quadext_mul(const QuadExt& x, const QuadExt& y);

}  // namespace somos
