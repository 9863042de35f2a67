#pragma once

#include "fae/confidence.hpp"
#include "fae/rng.hpp"

#include <cmath>
#include <cstdint>
#include <optional>

namespace fae {

/// Largest attenuated angle, arcsin(1/4).
inline const double kMaxTheta = std::asin(0.25);

/// theta = arcsin(amplitude / 4). Throws DomainError outside [0, 1].
double attenuate(double amplitude);

/// The unknown amplitude together with its attenuated angle and the seed of the
/// sampling oracle. Immutable once built.
struct ProblemSpec {
    double amplitude = 0.0;
    double theta = 0.0;
    std::uint64_t seed = 0;

    static ProblemSpec from_amplitude(double amplitude, std::uint64_t seed = 0);
};

/// sin^2((2m + 1) theta): probability that the last two qubits read 11 after m
/// Grover applications.
double good_probability(double theta, std::uint64_t m) noexcept;

/// cos(2 (2m + 1) theta), the quantity estimated by one batch of shots.
double true_cosine(double theta, std::uint64_t m) noexcept;

/// One batch measurement. n_11 is absent for the noise-free oracle.
struct CosEstimate {
    std::uint64_t m = 0;
    std::uint64_t n_shot = 0;
    std::optional<std::uint64_t> n_11;
    double c_hat = 1.0;
    ConfidenceInterval interval;
};

struct LedgerSnapshot {
    std::uint64_t exact_q_calls = 0;
    std::uint64_t paper_q_calls = 0;
    std::uint64_t state_preparations = 0;

    friend bool operator==(const LedgerSnapshot&, const LedgerSnapshot&) = default;
};

/// Oracle-call accounting for one run.
///
/// exact_q_calls counts every Q application (m per shot). paper_q_calls uses the
/// per-iteration convention where every shot of iteration j is charged 2^(j-1),
/// including the shifted second-stage batch. State preparations are tracked
/// separately and never folded into either Q count.
class QueryLedger {
public:
    void record(std::uint64_t m, std::uint64_t n_shot, std::uint64_t paper_power) noexcept {
        exact_ += m * n_shot;
        paper_ += paper_power * n_shot;
        preparations_ += n_shot;
    }

    LedgerSnapshot snapshot() const noexcept { return {exact_, paper_, preparations_}; }

private:
    std::uint64_t exact_ = 0;
    std::uint64_t paper_ = 0;
    std::uint64_t preparations_ = 0;
};

inline LedgerSnapshot ledger_snapshot(const QueryLedger& ledger) noexcept { return ledger.snapshot(); }

/// Source of cosine estimates for the estimator.
class CosineOracle {
public:
    virtual ~CosineOracle() = default;

    /// Measures Q^m|Psi'> n_shot times and returns the cosine estimate with its
    /// Chernoff interval at delta_c. paper_power is the per-shot charge under the
    /// 2^(j-1) convention; 0 means "same as m". Requires m >= 1, n_shot >= 1.
    virtual CosEstimate measure_cos(std::uint64_t m, std::uint64_t n_shot, double delta_c,
                                    std::uint64_t paper_power = 0) = 0;

    virtual const QueryLedger& ledger() const noexcept = 0;
};

/// Ideal Bernoulli sampling oracle: N_11 ~ Binomial(n_shot, sin^2((2m+1) theta)).
class BernoulliOracle final : public CosineOracle {
public:
    /// Draws come from the substream (spec.seed, stream_key).
    explicit BernoulliOracle(const ProblemSpec& spec, std::uint64_t stream_key = 0)
        : spec_(spec), rng_(spec.seed, stream_key) {}

    CosEstimate measure_cos(std::uint64_t m, std::uint64_t n_shot, double delta_c,
                            std::uint64_t paper_power = 0) override;

    const QueryLedger& ledger() const noexcept override { return ledger_; }
    const ProblemSpec& spec() const noexcept { return spec_; }

private:
    ProblemSpec spec_;
    RngStream rng_;
    QueryLedger ledger_;
};

/// Infinite-shot limit: c_hat is the true cosine and the interval has zero width.
/// Shots are still charged to the ledger at their nominal count.
class ExactOracle final : public CosineOracle {
public:
    explicit ExactOracle(const ProblemSpec& spec) : spec_(spec) {}

    CosEstimate measure_cos(std::uint64_t m, std::uint64_t n_shot, double delta_c,
                            std::uint64_t paper_power = 0) override;

    const QueryLedger& ledger() const noexcept override { return ledger_; }

private:
    ProblemSpec spec_;
    QueryLedger ledger_;
};

/// Binomial draw used by the Bernoulli oracle. Consumes only `engine`.
std::uint64_t sample_good_count(std::uint64_t n_shot, double p, std::mt19937_64& engine);

} // namespace fae
