#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "somos/errors.hpp"
#include "somos/rational.hpp"

namespace somos {

enum class Execution { Serial, Parallel };

struct TrialConfig {
    std::uint64_t seed = 42;
    long trials = 100;
    long index_lo = -8;  // free indices are drawn from [index_lo, index_hi]
    long index_hi = 8;
    long num_bound = 9;  // random rationals: |num| <= num_bound, 1 <= den <= den_bound
    long den_bound = 4;
    Execution exec = Execution::Parallel;
    bool inject_vajda_fault = false;  // test hook: flips the sign of one Vajda term
};

inline constexpr int kResampleCap = 100;

struct Failure {
    long trial = 0;
    std::string form;    // which displayed form of the identity failed
    std::string params;  // parameter draw, rendered exactly
    std::vector<long> indices;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string identity;
    long trials_run = 0;
    long checks_run = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

// Per-trial random stream. Seeded from (seed, identity tag, trial index) so a
// trial draws the same values whether trials run serially or under OpenMP.
class TrialRng {
public:
    TrialRng(const TrialConfig& cfg, const std::string& tag, long trial);

    long integer(long lo, long hi);
    long index() { return integer(cfg_->index_lo, cfg_->index_hi); }
    Rational rational();
    Rational nonzero_rational();
    std::mt19937_64& engine() { return eng_; }

private:
    const TrialConfig* cfg_;
    std::mt19937_64 eng_;
};

// Raised inside a trial body when the draw hits a vanishing divisor.
struct Resample {};

// Outcome of one trial; the body appends checks and failures.
struct TrialOutcome {
    long checks = 0;
    std::vector<Failure> failures;

    // Records one exact comparison.
    template <typename T>
    void expect_equal(const std::string& form, const std::string& params, std::vector<long> idx, const T& lhs,
                      const T& rhs) {
        ++checks;
        if (!(lhs == rhs)) failures.push_back({0, form, params, std::move(idx), lhs.to_string(), rhs.to_string()});
    }
};

namespace detail {
IdentityReport merge_outcomes(const std::string& id, std::vector<TrialOutcome>& outcomes);
}

// Runs cfg.trials independent trials of `body(TrialRng&, TrialOutcome&)`.
// Trials that throw Resample or a DomainError are redrawn from the same stream
// up to kResampleCap times; beyond that the trial is reported as a failure.
// Results are merged by trial index, so the report does not depend on
// cfg.exec or the thread count.
template <typename Body>
IdentityReport run_trials(const std::string& id, const TrialConfig& cfg, Body&& body) {
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(std::max(cfg.trials, 0L)));
    const long n = static_cast<long>(outcomes.size());
    const bool parallel = cfg.exec == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long t = 0; t < n; ++t) {
        TrialRng rng(cfg, id, t);
        TrialOutcome& out = outcomes[static_cast<std::size_t>(t)];
        bool done = false;
        for (int attempt = 0; attempt < kResampleCap && !done; ++attempt) {
            TrialOutcome scratch;
            try {
                body(rng, scratch);
                out = std::move(scratch);
                done = true;
            } catch (const Resample&) {
            } catch (const DomainError&) {
            }
        }
        if (!done) out.failures.push_back({t, "resample-cap", "", {}, "", "resample cap exceeded"});
        for (auto& f : out.failures) f.trial = t;
    }
    return detail::merge_outcomes(id, outcomes);
}

}  // namespace somos
