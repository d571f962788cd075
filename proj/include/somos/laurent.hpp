#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "somos/rational.hpp"
#include "somos/trials.hpp"

namespace somos {

inline constexpr int kMaxLaurentVars = 8;

// Exponents of t_0 .. t_{N-1}, followed by the degrees of alpha and beta.
struct Monomial {
    static constexpr int kAlpha = kMaxLaurentVars;
    static constexpr int kBeta = kMaxLaurentVars + 1;

    std::array<int, kMaxLaurentVars + 2> e{};

    int t_degree() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded-lex on the t-exponents, ties broken by (deg alpha, deg beta), all
// descending so the leading term comes first. This is a monomial order on the
// polynomial part, which is what the exact division relies on.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial in alpha, beta with integer coefficients.
class CoeffPoly {
public:
    using Terms = std::map<std::pair<int, int>, Integer>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(int deg_alpha, int deg_beta, const Integer& c);
    Integer evaluate_integer(const Integer& alpha, const Integer& beta) const;
    std::string to_string() const;
    friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

private:
    Terms terms_;
};

// Element of Z[alpha, beta, t_0^{+-1}, ..., t_{N-1}^{+-1}].
class LaurentPoly {
public:
    using Terms = std::map<Monomial, Integer, MonomialOrder>;

    explicit LaurentPoly(int num_vars);

    static LaurentPoly constant(int num_vars, const Integer& c);
    static LaurentPoly variable(int num_vars, int k);  // t_k
    static LaurentPoly alpha(int num_vars);
    static LaurentPoly beta(int num_vars);
    // c * alpha^i * beta^j * prod t_k^{exps[k]}
    static LaurentPoly monomial(int num_vars, const std::vector<int>& exps, const Integer& c = 1,
                                int deg_alpha = 0, int deg_beta = 0);

    int num_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    // Number of distinct Laurent monomials in t (coefficients grouped as CoeffPoly).
    std::size_t monomial_count() const;
    // Number of flat terms c * alpha^i beta^j t^e.
    std::size_t term_count() const { return terms_.size(); }
    CoeffPoly coefficient(const std::vector<int>& t_exps) const;
    bool is_monomial() const { return terms_.size() == 1; }

    // Canonical text: terms in MonomialOrder, e.g. "a^1*b^0*t0^-1*t1^1*t3^1 + ...".
    std::string to_string() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    void add_term(const Monomial& m, const Integer& c);

private:
    int n_;
    Terms terms_;
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

// q with q*b == a in the Laurent ring over Z[alpha, beta], or nullopt when b
// does not divide a. The monomial content of b is removed by an exponent
// shift; the rest is multivariate division requiring a zero remainder.
std::optional<LaurentPoly> laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b);

Rational evaluate(const LaurentPoly& p, const Rational& alpha, const Rational& beta,
                  const std::vector<Rational>& point);

struct LaurentGuard {
    int max_N = 8;
    int max_extra_steps = 10;  // n_max <= N + max_extra_steps
};

struct SymbolicOrbit {
    int N = 0;
    int p = 0;
    int q = 0;
    std::vector<LaurentPoly> terms;  // t_0 .. t_{n_max}

    const LaurentPoly& at(int n) const { return terms.at(static_cast<std::size_t>(n)); }
    int n_max() const { return static_cast<int>(terms.size()) - 1; }
    std::vector<std::size_t> monomial_counts() const;  // for t_N .. t_{n_max}
};

// Iterates the Gale-Robinson recurrence with symbolic alpha, beta and symbolic
// seeds t_0 .. t_{N-1}; each step divides by t_n via laurent_exact_div and
// throws LaurentFailure(n + N) if that division is not exact.
SymbolicOrbit symbolic_iterate(int N, int p, int q, int n_max, const LaurentGuard& guard = {});

// Evaluates every symbolic term at cfg.trials random nonzero rational
// (alpha, beta, t_0 .. t_{N-1}) and compares with the numeric orbit.
IdentityReport verify_laurent_specializations(const SymbolicOrbit& orbit, const TrialConfig& cfg);

}  // namespace somos
