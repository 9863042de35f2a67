#pragma once

#include "fae/confidence.hpp"
#include "fae/oracle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fae {

/// Initial upper bound choices for theta.
inline constexpr double kRoundedInitialThetaMax = 0.252;
inline constexpr double kSafeInitialThetaMax = 0.2527; // arcsin(1/4) rounded up

enum class InitialBound { Safe, Rounded };

struct EstimatorConfig {
    double delta_c = 0.01;
    int ell = 1;
    std::uint64_t n_shot_first = 0;
    std::uint64_t n_shot_second = 0;
    double initial_theta_max = kSafeInitialThetaMax;

    /// Shot counts ceil(1944 ln(2/delta_c)) and ceil(972 ln(2/delta_c)).
    static EstimatorConfig make(double delta_c, int ell, InitialBound bound = InitialBound::Safe);

    /// Throws DomainError on an inconsistent configuration.
    void validate() const;
};

std::uint64_t first_stage_shots(double delta_c);
std::uint64_t second_stage_shots(double delta_c);

enum class Stage { First, Second };

const char* to_string(Stage stage) noexcept;

/// 2^(j+1) + 2, the multiple of theta probed by the Grover power 2^(j-1).
double angle_multiplier(int j) noexcept;

/// 2^(j-1) as an integer Grover power.
std::uint64_t grover_power(int j) noexcept;

struct ThetaBounds {
    double theta_min = 0.0;
    double theta_max = 0.0;
};

struct IterationRecord {
    int j = 0;
    Stage stage = Stage::First;
    double theta_min = 0.0;
    double theta_max = 0.0;
    double c_hat = 1.0;
    ConfidenceInterval c_interval;

    // Second stage only.
    std::optional<double> c_hat_shifted;
    std::optional<ConfidenceInterval> c_shifted_interval;
    std::optional<double> s_hat;
    std::optional<double> rho;
    std::optional<std::int64_t> n_winding;
    std::optional<AngleEstimate> rho_interval;
};

struct EstimationResult {
    double theta_hat = 0.0;
    double amplitude_hat = 0.0;
    int j0 = 0;
    std::optional<double> nu;
    std::vector<IterationRecord> trace;
    LedgerSnapshot ledger;
    double success_prob_bound = 0.0;
    double initial_theta_max = kSafeInitialThetaMax;

    bool first_stage_only() const noexcept { return !nu.has_value(); }
};

/// Runs all ell iterations against `oracle`.
///
/// Iterations start in the first stage, where theta is recovered by inverting
/// the cosine interval. Once 2^(j+1) theta_max >= 3 pi / 8 with j < ell the run
/// memorizes j0 and nu = 2^j0 (theta_max + theta_min) and switches to the
/// second stage, which pairs each cosine with a shifted one to recover the sine
/// and resolves the 2 pi winding against the previous interval.
///
/// Throws DegenerateNuError if the shift angle is too close to 0 or pi.
EstimationResult run_fae(const EstimatorConfig& config, CosineOracle& oracle);

/// Convenience overload: Bernoulli oracle on substream (spec.seed, stream_key).
EstimationResult run_fae(const EstimatorConfig& config, const ProblemSpec& spec,
                         std::uint64_t stream_key = 0);

/// Interval of theta from the cosine interval of iteration j (first stage).
ThetaBounds first_stage_update(const ConfidenceInterval& c_interval, int j);

/// Sine of the probed angle from the cosine and its nu-shifted counterpart,
/// before clamping. Throws DegenerateNuError when |sin(nu)| < 0.1.
double estimate_sin_raw(double c_hat_j, double c_hat_shifted, double nu);

/// estimate_sin_raw clamped to [-1, 1].
double estimate_sin(double c_hat_j, double c_hat_shifted, double nu);

/// floor(((2^(j+1)+2) theta_max_prev - rho + pi/3) / (2 pi)), never negative.
std::int64_t resolve_winding(double theta_max_prev, double rho_j, int j);

/// Second stage bounds (2 pi n + rho -+ pi/3) / (2^(j+1)+2) clamped to [0, theta_cap].
ThetaBounds second_stage_update(double rho_j, std::int64_t n_j, int j, double theta_cap);

/// Unclamped second stage bounds.
ThetaBounds second_stage_bounds(double rho_j, std::int64_t n_j, int j) noexcept;

/// Interval-arithmetic range of the sine estimate for fixed nu.
ConfidenceInterval sine_interval(const ConfidenceInterval& c_j, const ConfidenceInterval& c_shifted,
                                 double nu);

// ----------------------------------------------------------------------------
// Ground-truth diagnostics

struct IterationCheck {
    int j = 0;
    Stage stage = Stage::First;
    bool covered = false;
    double delta_c = 0.0;                 // |c_hat - true cosine|
    std::optional<double> delta_c_shifted;
    bool cos_errors_ok = false;           // every delta_c <= 1/9
    std::optional<bool> first_stage_sound; // (2^(j+1)+2) theta_max^(j-1) < pi
    std::optional<double> rho_true;
    std::optional<double> rho_distance;
    std::optional<bool> rho_within;       // rho_distance <= pi/3
    std::optional<bool> winding_unique;   // uniqueness margin for n_j
    std::optional<bool> winding_correct;  // 2 pi n_j + rho brackets the true angle

    bool passed() const noexcept;
};

struct DiagnosticsReport {
    std::vector<IterationCheck> iterations;
    std::optional<double> delta_nu;
    std::optional<bool> nu_ok;          // |delta_nu| < pi/60
    bool final_covered = false;
    std::optional<int> first_uncovered_j;
    std::optional<int> first_failing_j;
    bool all_passed = false;
};

DiagnosticsReport trace_diagnostics(const EstimationResult& result, const ProblemSpec& spec);

} // namespace fae
