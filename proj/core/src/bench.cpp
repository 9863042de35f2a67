#include "fae/bench.hpp"

#include "fae/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

namespace fae::bench {

void BenchConfig::validate() const {
    if (amplitudes.empty()) throw DomainError("at least one amplitude is required");
    for (double a : amplitudes) {
        if (!(a >= 0.0 && a <= 1.0)) throw DomainError("amplitudes must lie in [0, 1]");
    }
    if (ell_min < 1 || ell_max < ell_min) throw DomainError("ell range must be non-empty with ell_min >= 1");
    if (trials < 1) throw DomainError("trials must be >= 1");
    if (!(delta_c > 0.0 && delta_c < 1.0)) throw DomainError("delta_c must lie in (0, 1)");
    if (!(percentile > 0.0 && percentile < 1.0)) throw DomainError("percentile must lie in (0, 1)");
    EstimatorConfig::make(delta_c, ell_max, initial_bound);
}

std::uint64_t trial_stream_key(double amplitude, int ell, std::uint64_t trial) noexcept {
    std::uint64_t h = splitmix64(std::bit_cast<std::uint64_t>(amplitude));
    h = splitmix64(h ^ static_cast<std::uint64_t>(ell));
    return splitmix64(h ^ trial);
}

TrialRecord run_trial(const EstimatorConfig& config, const ProblemSpec& spec, std::uint64_t trial) {
    TrialRecord rec;
    rec.trial = trial;
    try {
        BernoulliOracle oracle(spec, trial_stream_key(spec.amplitude, config.ell, trial));
        const EstimationResult res = run_fae(config, oracle);
        const DiagnosticsReport diag = trace_diagnostics(res, spec);
        rec.amplitude_hat = res.amplitude_hat;
        rec.error = std::abs(4.0 * std::sin(res.theta_hat) - spec.amplitude);
        rec.exact_q_calls = res.ledger.exact_q_calls;
        rec.paper_q_calls = res.ledger.paper_q_calls;
        rec.j0 = res.j0;
        rec.covered = diag.final_covered;
        rec.diagnostics_pass = diag.all_passed;
    } catch (const DegenerateNuError& e) {
        rec.failed = true;
        rec.failure = e.what();
        rec.error = std::numeric_limits<double>::infinity();
    }
    return rec;
}

double quantile_error(std::span<const double> errors, double q) {
    if (errors.empty()) throw DomainError("quantile of an empty sample");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile level must lie in (0, 1)");
    std::vector<double> sorted(errors.begin(), errors.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    // Rank k = ceil(q N); the slack absorbs q N landing a few ulps above an integer.
    auto k = static_cast<std::size_t>(std::ceil(q * n - 1e-9 * n));
    k = std::clamp<std::size_t>(k, 1, sorted.size());
    return sorted[k - 1];
}

std::uint64_t lower_median(std::vector<std::uint64_t> values) {
    if (values.empty()) return 0;
    const std::size_t k = (values.size() - 1) / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), values.end());
    return values[k];
}

CellStats aggregate(double amplitude, int ell, const BenchConfig& config,
                    std::span<const TrialRecord> trials) {
    CellStats s;
    s.amplitude = amplitude;
    s.ell = ell;
    s.trials = trials.size();
    s.delta_c = config.delta_c;
    s.seed = config.master_seed;
    if (trials.empty()) return s;

    std::vector<double> errors;
    std::vector<std::uint64_t> exact;
    std::vector<std::uint64_t> paper;
    std::map<int, std::uint64_t> j0_counts;
    std::uint64_t covered = 0;
    for (const TrialRecord& t : trials) {
        errors.push_back(t.error);
        if (!t.failed) {
            exact.push_back(t.exact_q_calls);
            paper.push_back(t.paper_q_calls);
            ++j0_counts[t.j0];
        }
        covered += t.covered ? 1 : 0;
    }

    s.err_q = quantile_error(errors, config.percentile);
    if (!exact.empty()) {
        s.n_orac_exact_min = *std::min_element(exact.begin(), exact.end());
        s.n_orac_exact_max = *std::max_element(exact.begin(), exact.end());
        s.n_orac_exact_median = lower_median(exact);
        s.n_orac_paper_median = lower_median(paper);
    }
    // Ties go to the smaller j0 (map iteration order).
    std::uint64_t best = 0;
    for (const auto& [j0, count] : j0_counts) {
        if (count > best) {
            best = count;
            s.j0_mode = j0;
        }
    }
    s.coverage_rate = static_cast<double>(covered) / static_cast<double>(trials.size());
    return s;
}

TrialSet run_bench(const BenchConfig& config) {
    config.validate();

    TrialSet tset;
    tset.config = config;
    for (double a : config.amplitudes) {
        for (int ell = config.ell_min; ell <= config.ell_max; ++ell) {
            Cell cell;
            cell.stats.amplitude = a;
            cell.stats.ell = ell;
            cell.trials.resize(config.trials);
            tset.cells.push_back(std::move(cell));
        }
    }

    struct Job {
        std::size_t cell;
        std::uint64_t trial;
    };
    const std::uint64_t total = static_cast<std::uint64_t>(tset.cells.size()) * config.trials;
    std::vector<EstimatorConfig> configs;
    std::vector<ProblemSpec> specs;
    for (const Cell& c : tset.cells) {
        configs.push_back(EstimatorConfig::make(config.delta_c, c.stats.ell, config.initial_bound));
        specs.push_back(ProblemSpec::from_amplitude(c.stats.amplitude, config.master_seed));
    }

    // Workers claim job indices from a shared counter and write to disjoint slots.
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t idx = next++; idx < total; idx = next++) {
            const Job job{static_cast<std::size_t>(idx / config.trials), idx % config.trials};
            tset.cells[job.cell].trials[job.trial] = run_trial(configs[job.cell], specs[job.cell], job.trial);
        }
    };

    unsigned n_threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(std::min<std::uint64_t>(n_threads, std::max<std::uint64_t>(total, 1)));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    }

    for (Cell& c : tset.cells) {
        c.stats = aggregate(c.stats.amplitude, c.stats.ell, config, c.trials);
        c.failures = static_cast<std::uint64_t>(
            std::count_if(c.trials.begin(), c.trials.end(), [](const TrialRecord& t) { return t.failed; }));
    }
    return tset;
}

ScalingFit fit_scaling(std::span<const ScalingPoint> points) {
    if (points.size() < 2) throw DomainError("scaling fit needs at least two points");
    std::vector<double> x;
    std::vector<double> y;
    for (const ScalingPoint& p : points) {
        if (!(p.epsilon > 0.0 && p.n_orac > 0.0) || !std::isfinite(p.epsilon) || !std::isfinite(p.n_orac)) {
            throw DomainError("scaling fit needs positive finite points");
        }
        x.push_back(std::log10(p.epsilon));
        y.push_back(std::log10(p.n_orac));
    }
    const double n = static_cast<double>(x.size());

    ScalingFit fit;
    fit.points = x.size();
    double sum_b = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum_b += y[i] + x[i];
    fit.intercept_b = sum_b / n;

    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (-x[i] + fit.intercept_b);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);

    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw DomainError("scaling fit needs at least two distinct errors");
    fit.free_slope = sxy / sxx;
    fit.free_intercept = my - fit.free_slope * mx;
    return fit;
}

std::vector<AmplitudeFit> fit_by_amplitude(const TrialSet& tset) {
    std::vector<AmplitudeFit> out;
    for (double a : tset.config.amplitudes) {
        std::vector<ScalingPoint> pts;
        for (const Cell& c : tset.cells) {
            if (c.stats.amplitude != a) continue;
            const double eps = c.stats.err_q;
            const auto n = static_cast<double>(c.stats.n_orac_exact_median);
            if (eps > 0.0 && std::isfinite(eps) && n > 0.0) pts.push_back({eps, n});
        }
        if (pts.size() < 2) continue;
        try {
            out.push_back({a, fit_scaling(pts)});
        } catch (const DomainError&) {
            // Degenerate cell set (identical errors); nothing to fit.
        }
    }
    return out;
}

} // namespace fae::bench
