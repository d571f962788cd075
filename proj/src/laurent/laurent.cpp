#include "somos/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "somos/errors.hpp"
#include "somos/sequences.hpp"

namespace somos {

int Monomial::t_degree() const {
    int d = 0;
    for (int k = 0; k < kMaxLaurentVars; ++k) d += e[static_cast<std::size_t>(k)];
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.t_degree(), db = b.t_degree();
    if (da != db) return da > db;
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (a.e[k] != b.e[k]) return a.e[k] > b.e[k];
    return false;
}

void CoeffPoly::add(int deg_alpha, int deg_beta, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({deg_alpha, deg_beta}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer CoeffPoly::evaluate_integer(const Integer& alpha, const Integer& beta) const {
    Integer sum = 0;
    for (const auto& [deg, c] : terms_) {
        Integer pa, pb;
        mpz_pow_ui(pa.get_mpz_t(), alpha.get_mpz_t(), static_cast<unsigned long>(deg.first));
        mpz_pow_ui(pb.get_mpz_t(), beta.get_mpz_t(), static_cast<unsigned long>(deg.second));
        sum += c * pa * pb;
    }
    return sum;
}

std::string CoeffPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.get_str() + "*a^" + std::to_string(it->first.first) + "*b^" +
               std::to_string(it->first.second);
    }
    return out;
}

LaurentPoly::LaurentPoly(int num_vars) : n_(num_vars) {
    if (num_vars < 1 || num_vars > kMaxLaurentVars)
        throw std::invalid_argument("Laurent polynomials support 1.." + std::to_string(kMaxLaurentVars) +
                                    " variables");
}

LaurentPoly LaurentPoly::constant(int num_vars, const Integer& c) {
    LaurentPoly p(num_vars);
    p.add_term(Monomial{}, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int k) {
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    e.at(static_cast<std::size_t>(k)) = 1;
    return monomial(num_vars, e);
}

LaurentPoly LaurentPoly::alpha(int num_vars) {
    return monomial(num_vars, std::vector<int>(static_cast<std::size_t>(num_vars), 0), 1, 1, 0);
}

LaurentPoly LaurentPoly::beta(int num_vars) {
    return monomial(num_vars, std::vector<int>(static_cast<std::size_t>(num_vars), 0), 1, 0, 1);
}

LaurentPoly LaurentPoly::monomial(int num_vars, const std::vector<int>& exps, const Integer& c,
                                  int deg_alpha, int deg_beta) {
    if (exps.size() != static_cast<std::size_t>(num_vars)) throw ArityMismatch();
    if (deg_alpha < 0 || deg_beta < 0) throw std::invalid_argument("negative parameter degree");
    LaurentPoly p(num_vars);
    Monomial m;
    std::copy(exps.begin(), exps.end(), m.e.begin());
    m.e[Monomial::kAlpha] = deg_alpha;
    m.e[Monomial::kBeta] = deg_beta;
    p.add_term(m, c);
    return p;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::size_t LaurentPoly::monomial_count() const {
    std::size_t count = 0;
    const Monomial* prev = nullptr;
    // Terms sharing a t-part are adjacent in MonomialOrder.
    for (const auto& [m, c] : terms_) {
        if (!prev || !std::equal(m.e.begin(), m.e.begin() + kMaxLaurentVars, prev->e.begin())) ++count;
        prev = &m;
    }
    return count;
}

CoeffPoly LaurentPoly::coefficient(const std::vector<int>& t_exps) const {
    if (t_exps.size() != static_cast<std::size_t>(n_)) throw ArityMismatch();
    CoeffPoly out;
    for (const auto& [m, c] : terms_)
        if (std::equal(t_exps.begin(), t_exps.end(), m.e.begin()))
            out.add(m.e[Monomial::kAlpha], m.e[Monomial::kBeta], c);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Integer mag = neg ? Integer(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (mag != 1) out += mag.get_str() + "*";
        out += "a^" + std::to_string(m.e[Monomial::kAlpha]) + "*b^" + std::to_string(m.e[Monomial::kBeta]);
        for (int k = 0; k < n_; ++k)
            if (const int e = m.e[static_cast<std::size_t>(k)]; e != 0)
                out += "*t" + std::to_string(k) + "^" + std::to_string(e);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.n_ != b.n_) throw ArityMismatch();
    LaurentPoly r(a);
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.n_ != b.n_) throw ArityMismatch();
    LaurentPoly r(a);
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

namespace {

Monomial add_exps(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t k = 0; k < m.e.size(); ++k) m.e[k] = a.e[k] + b.e[k];
    return m;
}

Monomial sub_exps(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t k = 0; k < m.e.size(); ++k) m.e[k] = a.e[k] - b.e[k];
    return m;
}

bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t k = 0; k < m.e.size(); ++k)
        if (d.e[k] > m.e[k]) return false;
    return true;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int v : m.e) h = (h ^ static_cast<std::size_t>(v + 1024)) * 1099511628211ULL;
        return h;
    }
};

// Per-variable minimum exponent over all t-variables; alpha/beta stay 0.
Monomial min_t_exponents(const LaurentPoly& p) {
    Monomial lo;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        for (int k = 0; k < kMaxLaurentVars; ++k) {
            const auto i = static_cast<std::size_t>(k);
            lo.e[i] = first ? m.e[i] : std::min(lo.e[i], m.e[i]);
        }
        first = false;
    }
    return lo;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.n_ != b.n_) throw ArityMismatch();
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, inserted] = acc.try_emplace(add_exps(ma, mb));
            mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    LaurentPoly r(a.n_);
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace(m, std::move(c));
    return r;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

std::optional<LaurentPoly> laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.num_vars() != b.num_vars()) throw ArityMismatch();
    if (b.is_zero()) throw DivisionByZeroPoly();
    const int n = a.num_vars();
    if (a.is_zero()) return LaurentPoly(n);

    // Shift both operands into the polynomial ring: a = a' t^ma, b = b' t^mb.
    const Monomial ma = min_t_exponents(a);
    const Monomial mb = min_t_exponents(b);

    LaurentPoly::Terms rem;
    for (const auto& [m, c] : a.terms()) rem.emplace_hint(rem.end(), sub_exps(m, ma), c);
    std::vector<std::pair<Monomial, Integer>> divisor;
    divisor.reserve(b.terms().size());
    for (const auto& [m, c] : b.terms()) divisor.emplace_back(sub_exps(m, mb), c);

    const Monomial& lead_m = divisor.front().first;
    const Integer& lead_c = divisor.front().second;
    const Monomial shift = sub_exps(ma, mb);

    LaurentPoly quotient(n);
    Integer qc, tmp;
    while (!rem.empty()) {
        const auto top = rem.begin();
        // A leading term the divisor cannot reach would stay in the remainder forever.
        if (!divides(lead_m, top->first)) return std::nullopt;
        if (!mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
        mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead_c.get_mpz_t());
        const Monomial qm = sub_exps(top->first, lead_m);
        rem.erase(top);
        for (std::size_t i = 1; i < divisor.size(); ++i) {
            const auto& [dm, dc] = divisor[i];
            tmp = qc * dc;
            auto [it, inserted] = rem.try_emplace(add_exps(qm, dm));
            it->second -= tmp;
            if (it->second == 0) rem.erase(it);
        }
        quotient.add_term(add_exps(qm, shift), qc);
    }
    return quotient;
}

Rational evaluate(const LaurentPoly& p, const Rational& alpha, const Rational& beta,
                  const std::vector<Rational>& point) {
    if (point.size() != static_cast<std::size_t>(p.num_vars())) throw ArityMismatch();
    for (const auto& v : point)
        if (v.is_zero()) throw ZeroSubstitution();

    struct PowerCache {
        Rational base;
        std::map<int, Rational> cache;
        const Rational& get(int e) {
            auto it = cache.find(e);
            if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
            return it->second;
        }
    };
    std::vector<PowerCache> caches;
    for (const auto& v : point) caches.push_back({v, {}});
    PowerCache ca{alpha, {}}, cb{beta, {}};

    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        Rational term(c);
        term *= ca.get(m.e[Monomial::kAlpha]);
        term *= cb.get(m.e[Monomial::kBeta]);
        for (int k = 0; k < p.num_vars(); ++k)
            if (const int e = m.e[static_cast<std::size_t>(k)]; e != 0)
                term *= caches[static_cast<std::size_t>(k)].get(e);
        sum += term;
    }
    return sum;
}

std::vector<std::size_t> SymbolicOrbit::monomial_counts() const {
    std::vector<std::size_t> out;
    for (std::size_t n = static_cast<std::size_t>(N); n < terms.size(); ++n)
        out.push_back(terms[n].monomial_count());
    return out;
}

SymbolicOrbit symbolic_iterate(int N, int p, int q, int n_max, const LaurentGuard& guard) {
    if (N < 4 || !(0 < p && p < q && 2 * q <= N))
        throw std::invalid_argument("need N >= 4 and 0 < p < q <= N/2");
    if (n_max < N) throw std::invalid_argument("n_max must be at least N");
    if (N > guard.max_N || N > kMaxLaurentVars) throw GuardExceeded("N = " + std::to_string(N));
    if (n_max > N + guard.max_extra_steps) throw GuardExceeded("n_max = " + std::to_string(n_max));

    SymbolicOrbit orbit{N, p, q, {}};
    orbit.terms.reserve(static_cast<std::size_t>(n_max + 1));
    for (int k = 0; k < N; ++k) orbit.terms.push_back(LaurentPoly::variable(N, k));
    const LaurentPoly a = LaurentPoly::alpha(N);
    const LaurentPoly b = LaurentPoly::beta(N);
    for (int m = N; m <= n_max; ++m) {
        const int n = m - N;
        const auto& t = orbit.terms;
        auto at = [&](int k) -> const LaurentPoly& { return t[static_cast<std::size_t>(k)]; };
        const LaurentPoly num = a * (at(n + p) * at(n + N - p)) + b * (at(n + q) * at(n + N - q));
        auto next = laurent_exact_div(num, at(n));
        if (!next) throw LaurentFailure(m);
        orbit.terms.push_back(std::move(*next));
    }
    return orbit;
}

IdentityReport verify_laurent_specializations(const SymbolicOrbit& orbit, const TrialConfig& cfg) {
    const std::string id = "laurent-" + std::to_string(orbit.N) + "-" + std::to_string(orbit.p) + "-" +
                           std::to_string(orbit.q);
    return run_trials(id, cfg, [&](TrialRng& rng, TrialOutcome& out) {
        GaleRobinsonParams gp;
        gp.N = orbit.N;
        gp.p = orbit.p;
        gp.q = orbit.q;
        gp.alpha = rng.nonzero_rational();
        gp.beta = rng.nonzero_rational();
        for (int k = 0; k < orbit.N; ++k) gp.init.push_back(rng.nonzero_rational());
        const OrbitWindow w = gale_robinson_extend(gp, 0, orbit.n_max());
        std::string par = "alpha=" + gp.alpha.to_string() + " beta=" + gp.beta.to_string() + " init=";
        for (const auto& v : gp.init) par += v.to_string() + ",";
        par.pop_back();
        for (int n = orbit.N; n <= orbit.n_max(); ++n)
            out.expect_equal("symbolic term at the specialization", par, {n},
                             evaluate(orbit.at(n), gp.alpha, gp.beta, gp.init), w.at(n));
    });
}

}  // namespace somos
