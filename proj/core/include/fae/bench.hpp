#pragma once

#include "fae/estimator.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fae::bench {

struct BenchConfig {
    std::vector<double> amplitudes{0.1, 0.2, 0.3, 0.4};
    int ell_min = 3;
    int ell_max = 14;
    std::uint64_t trials = 1000;
    double delta_c = 0.01;
    std::uint64_t master_seed = 0;
    double percentile = 0.95;
    InitialBound initial_bound = InitialBound::Safe;
    unsigned threads = 0; // 0 = hardware concurrency

    void validate() const;
};

/// Outcome of one seeded FAE run.
struct TrialRecord {
    std::uint64_t trial = 0;
    double amplitude_hat = 0.0;
    double error = 0.0;          // |4 sin(theta_hat) - a|, +inf for failed runs
    std::uint64_t exact_q_calls = 0;
    std::uint64_t paper_q_calls = 0;
    int j0 = 0;
    bool covered = false;        // final interval contains the true theta
    bool diagnostics_pass = false;
    bool failed = false;
    std::string failure;
};

/// Aggregates of one (amplitude, ell) cell.
struct CellStats {
    double amplitude = 0.0;
    int ell = 0;
    int j0_mode = 0;
    std::uint64_t trials = 0;
    double delta_c = 0.0;
    double err_q = 0.0;
    std::uint64_t n_orac_exact_median = 0;
    std::uint64_t n_orac_exact_min = 0;
    std::uint64_t n_orac_exact_max = 0;
    std::uint64_t n_orac_paper_median = 0;
    double coverage_rate = 0.0;
    std::uint64_t seed = 0;

    bool first_stage_only() const noexcept { return j0_mode == ell; }

    friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct Cell {
    CellStats stats;
    std::vector<TrialRecord> trials;
    std::uint64_t failures = 0;
};

struct TrialSet {
    BenchConfig config;
    std::vector<Cell> cells; // amplitude-major, ell ascending
};

struct ScalingPoint {
    double epsilon = 0.0;
    double n_orac = 0.0;
};

/// log10 N = -log10 eps + b with b by least squares, plus a free-slope refit.
struct ScalingFit {
    double intercept_b = 0.0;
    double residual_rms = 0.0;
    double free_slope = 0.0;
    double free_intercept = 0.0;
    std::size_t points = 0;
};

struct AmplitudeFit {
    double amplitude = 0.0;
    ScalingFit fit;
};

/// Stream key of trial `trial` in cell (amplitude, ell). Depends only on the
/// logical coordinates, so execution order never changes a trial's draws.
std::uint64_t trial_stream_key(double amplitude, int ell, std::uint64_t trial) noexcept;

/// Runs one trial. Estimator errors are captured in the record.
TrialRecord run_trial(const EstimatorConfig& config, const ProblemSpec& spec, std::uint64_t trial);

/// Full sweep over amplitudes x [ell_min, ell_max].
TrialSet run_bench(const BenchConfig& config);

/// Reduces a cell's trials to its aggregates.
CellStats aggregate(double amplitude, int ell, const BenchConfig& config,
                    std::span<const TrialRecord> trials);

/// Smallest element e with at least q N elements <= e (lower empirical quantile).
double quantile_error(std::span<const double> errors, double q);

/// Lower median of unsigned counts.
std::uint64_t lower_median(std::vector<std::uint64_t> values);

ScalingFit fit_scaling(std::span<const ScalingPoint> points);

/// One fit per amplitude over (err_q, median exact N_orac). Cells with a
/// non-positive or non-finite error are skipped.
std::vector<AmplitudeFit> fit_by_amplitude(const TrialSet& tset);

// ----------------------------------------------------------------------------
// Export

enum class ExportFormat { Csv, Json, Svg };

inline constexpr std::string_view kCsvHeader =
    "amplitude,ell,j0_mode,trials,delta_c,err_q95,n_orac_exact_median,n_orac_exact_min,"
    "n_orac_exact_max,n_orac_paper_median,coverage_rate,seed";

std::string to_csv(const TrialSet& tset);
std::vector<CellStats> parse_csv(std::string_view text);

std::string to_json_text(const TrialSet& tset, std::span<const AmplitudeFit> fits, bool include_trials);
std::string to_svg(const TrialSet& tset, std::span<const AmplitudeFit> fits);

/// Writes one format to `path`. Throws IoError when the file cannot be written.
void export_trials(const TrialSet& tset, std::span<const AmplitudeFit> fits, ExportFormat format,
                   const std::filesystem::path& path, bool include_trials = false);

} // namespace fae::bench
