#include "somos/trials.hpp"

namespace somos {

namespace {

// FNV-1a, so trial streams do not depend on the standard library's hash.
std::uint64_t tag_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint32_t lo32(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t hi32(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

}  // namespace

TrialRng::TrialRng(const TrialConfig& cfg, const std::string& tag, long trial) : cfg_(&cfg) {
    const std::uint64_t h = tag_hash(tag);
    const auto t = static_cast<std::uint64_t>(trial);
    std::seed_seq seq{lo32(cfg.seed), hi32(cfg.seed), lo32(h), hi32(h), lo32(t), hi32(t)};
    eng_.seed(seq);
}

long TrialRng::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

Rational TrialRng::rational() {
    const long num = integer(-cfg_->num_bound, cfg_->num_bound);
    const long den = integer(1, std::max(1L, cfg_->den_bound));
    return Rational(num, den);
}

Rational TrialRng::nonzero_rational() {
    if (cfg_->num_bound < 1) throw std::invalid_argument("num_bound must be positive");
    for (;;) {
        Rational r = rational();
        if (!r.is_zero()) return r;
    }
}

namespace detail {

IdentityReport merge_outcomes(const std::string& id, std::vector<TrialOutcome>& outcomes) {
    IdentityReport rep;
    rep.identity = id;
    rep.trials_run = static_cast<long>(outcomes.size());
    for (auto& o : outcomes) {
        rep.checks_run += o.checks;
        for (auto& f : o.failures) rep.failures.push_back(std::move(f));
    }
    return rep;
}

}  // namespace detail

}  // namespace somos
