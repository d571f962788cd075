#include "somos/quad_ext.hpp"

#include "somos/errors.hpp"

namespace somos {

void QuadExt::require_same_radicand(const QuadExt& o) const {
    if (r_ != o.r_) throw RadicandMismatch(r_.to_string(), o.r_.to_string());
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    require_same_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    require_same_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    require_same_radicand(o);
    // Skip the zero products; companion terms are almost always pure.
    Rational a = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) a += b_ * o.b_ * r_;
    Rational b;
    if (!o.b_.is_zero()) b += a_ * o.b_;
    if (!b_.is_zero()) b += o.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    require_same_radicand(o);
    if (o.is_zero()) throw DivisionByZero();
    if (o.is_pure_rational()) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    if (o.is_pure_radical()) {
        // (a + b s)/(c s) = (b r + a s)/(c r), s = sqrt(r)
        if (r_.is_zero()) throw DivisionByZero();
        const Rational denom = o.b_ * r_;
        Rational a = b_ * r_ / denom;
        Rational b = a_ / denom;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    const Rational n = o.norm();
    if (n.is_zero()) throw DivisionByZero();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

QuadExt QuadExt::canonicalize() const {
    if (b_.is_zero()) return *this;
    if (r_.is_zero()) return {a_, Rational(0), r_};
    if (!r_.is_square()) return *this;
    return {a_ + b_ * r_.sqrt_exact(), Rational(0), r_};
}

std::string QuadExt::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string rad = b_.to_string() + "*sqrt(" + r_.to_string() + ")";
    if (a_.is_zero()) return rad;
    return a_.to_string() + " + " + rad;
}

QuadExt quadext_mul(const QuadExt& x, const QuadExt& y) { return x * y; }

}  // namespace somos
