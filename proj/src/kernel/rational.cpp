#include "somos/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "somos/errors.hpp"

namespace somos {

namespace {

bool valid_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!valid_integer_literal(s))
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den));
}

bool Rational::is_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(q_.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(q_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt_exact() const {
    if (!is_square()) throw DomainError("not a rational square: " + to_string());
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q_.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q_.get_den_mpz_t());
    return Rational(num, den);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace somos
