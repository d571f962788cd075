#pragma once

#include <stdexcept>
#include <string>

namespace somos {

// Base of every mathematical-domain failure (vanishing divisor, pole, ...).
// The CLI maps these to exit code 2; malformed input uses std::invalid_argument.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
};

class RadicandMismatch : public DomainError {
public:
    RadicandMismatch(const std::string& a, const std::string& b)
        : DomainError("radicand mismatch: " + a + " vs " + b) {}
};

class ZeroLeadingCoefficient : public DomainError {
public:
    ZeroLeadingCoefficient() : DomainError("series divisor has zero constant term") {}
};

class ZeroQ : public DomainError {
public:
    ZeroQ() : DomainError("Q must be nonzero") {}
};

class ZeroAlpha : public DomainError {
public:
    ZeroAlpha() : DomainError("alpha must be nonzero") {}
};

class OutOfRange : public DomainError {
public:
    explicit OutOfRange(const std::string& what) : DomainError("out of range: " + what) {}
};

class IndexedError : public DomainError {
public:
    IndexedError(const std::string& what, long index)
        : DomainError(what + " at index " + std::to_string(index)), index_(index) {}
    long index() const noexcept { return index_; }

private:
    long index_;
};

class VanishingTerm : public IndexedError {
public:
    explicit VanishingTerm(long n) : IndexedError("vanishing term", n) {}
};

class VanishingW : public IndexedError {
public:
    explicit VanishingW(long n) : IndexedError("vanishing elliptic-sequence term W", n) {}
};

class NonIntegerTerm : public IndexedError {
public:
    explicit NonIntegerTerm(long n) : IndexedError("non-integer elliptic-sequence term", n) {}
};

class NoConsistentFit : public IndexedError {
public:
    explicit NoConsistentFit(long n) : IndexedError("Somos-4 fit inconsistent", n) {}
};

class LaurentFailure : public IndexedError {
public:
    explicit LaurentFailure(long n) : IndexedError("inexact Laurent division", n) {}
};

class SingularSystem : public DomainError {
public:
    SingularSystem() : DomainError("singular 2x2 system") {}
};

class SeedDivisibility : public DomainError {
public:
    SeedDivisibility() : DomainError("seed condition W2 | W4 violated") {}
};

class ArityMismatch : public DomainError {
public:
    ArityMismatch() : DomainError("Laurent polynomials over different variable counts") {}
};

class DivisionByZeroPoly : public DomainError {
public:
    DivisionByZeroPoly() : DomainError("division by the zero polynomial") {}
};

class ZeroSubstitution : public DomainError {
public:
    ZeroSubstitution() : DomainError("evaluation point has a zero coordinate") {}
};

class GuardExceeded : public DomainError {
public:
    explicit GuardExceeded(const std::string& what) : DomainError("size guard exceeded: " + what) {}
};

class Pole : public DomainError {
public:
    explicit Pole(double x) : DomainError("pole at x = " + std::to_string(x)), x_(x) {}
    double location() const noexcept { return x_; }

private:
    double x_;
};

class VanishingDenominator : public DomainError {
public:
    VanishingDenominator() : DomainError("vanishing denominator") {}
};

class NumericOverflow : public DomainError {
public:
    NumericOverflow() : DomainError("non-finite value in numeric integration") {}
};

}  // namespace somos
