// fae: command line front end.
//
//   fae estimate --amplitude 0.3 --delta-c 0.01 --ell 8 --seed 1 [--trace]
//   fae bench --amplitudes 0.1,0.2,0.3,0.4 --ell-min 3 --ell-max 14 --trials 1000 \
//             --delta-c 0.01 --seed 1 --out sweep.csv [--json sweep.json] [--svg sweep.svg]
//   fae verify --suite simulator|atan|chernoff|diagnostics
//   fae bounds --epsilon 1e-3 --delta 0.05 [--json]
//
// Exit codes: 0 success, 1 domain/config error, 2 I/O error, 3 verification failure.

#include "fae/bench.hpp"
#include "fae/bounds.hpp"
#include "fae/errors.hpp"
#include "fae/estimator.hpp"
#include "fae/json.hpp"
#include "fae/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 1, kIoError = 2, kVerifyFailed = 3 };

struct EstimateArgs {
    double amplitude = 0.0;
    double delta_c = 0.01;
    int ell = 8;
    std::uint64_t seed = 0;
    bool trace = false;
    bool rounded_bound = false;
};

struct BenchArgs {
    std::vector<double> amplitudes{0.1, 0.2, 0.3, 0.4};
    int ell_min = 3;
    int ell_max = 14;
    std::uint64_t trials = 1000;
    double delta_c = 0.01;
    std::uint64_t seed = 0;
    std::string out;
    std::string json;
    std::string svg;
    bool trace = false;
    bool rounded_bound = false;
    unsigned threads = 0;
};

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 2021;
};

struct BoundsArgs {
    double epsilon = 1e-3;
    double delta = 0.05;
    bool json = false;
};

int run_estimate(const EstimateArgs& a) {
    const auto cfg = fae::EstimatorConfig::make(a.delta_c, a.ell,
                                                a.rounded_bound ? fae::InitialBound::Rounded : fae::InitialBound::Safe);
    const auto spec = fae::ProblemSpec::from_amplitude(a.amplitude, a.seed);
    const auto result = fae::run_fae(cfg, spec);
    nlohmann::json out = fae::result_to_json(result, a.trace);
    out["amplitude"] = a.amplitude;
    out["error"] = std::abs(4.0 * std::sin(result.theta_hat) - a.amplitude);
    out["n_shot_first"] = cfg.n_shot_first;
    out["n_shot_second"] = cfg.n_shot_second;
    if (a.trace) out["diagnostics"] = fae::trace_diagnostics(result, spec);
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int run_bench(const BenchArgs& a) {
    fae::bench::BenchConfig cfg;
    cfg.amplitudes = a.amplitudes;
    cfg.ell_min = a.ell_min;
    cfg.ell_max = a.ell_max;
    cfg.trials = a.trials;
    cfg.delta_c = a.delta_c;
    cfg.master_seed = a.seed;
    cfg.threads = a.threads;
    cfg.initial_bound = a.rounded_bound ? fae::InitialBound::Rounded : fae::InitialBound::Safe;

    const auto tset = fae::bench::run_bench(cfg);
    const auto fits = fae::bench::fit_by_amplitude(tset);
    using fae::bench::ExportFormat;
    fae::bench::export_trials(tset, fits, ExportFormat::Csv, a.out);
    if (!a.json.empty()) fae::bench::export_trials(tset, fits, ExportFormat::Json, a.json, a.trace);
    if (!a.svg.empty()) fae::bench::export_trials(tset, fits, ExportFormat::Svg, a.svg);

    for (const auto& f : fits) {
        std::printf("a=%-6g b=%.4f free_slope=%.4f residual_rms=%.4f points=%zu\n", f.amplitude,
                    f.fit.intercept_b, f.fit.free_slope, f.fit.residual_rms, f.fit.points);
    }
    return kOk;
}

int run_verify(const VerifyArgs& a) {
    const auto rep = fae::verify::run_suite(a.suite, a.seed);
    for (const auto& line : rep.lines) std::cout << "  " << line << '\n';
    std::cout << (rep.passed ? "PASS " : "FAIL ") << rep.name << '\n';
    return rep.passed ? kOk : kVerifyFailed;
}

int run_bounds(const BoundsArgs& a) {
    const auto r = fae::bounds::make_report(a.epsilon, a.delta);
    if (a.json) {
        std::cout << nlohmann::json(r).dump(2) << '\n';
        return kOk;
    }
    std::printf("%-26s %.6g\n", "epsilon", r.epsilon);
    std::printf("%-26s %.6g\n", "delta", r.delta);
    std::printf("%-26s %d\n", "ell", r.ell);
    std::printf("%-26s %.6g\n", "delta_c = delta/(2 ell)", r.delta_c);
    std::printf("%-26s %.6g\n", "fae bound", r.fae_bound);
    std::printf("%-26s %.6g\n", "worst-case count", r.worst_case_count);
    std::printf("%-26s %.6g\n", "competitor bound", r.competitor_bound);
    std::printf("%-26s %.2f\n", "competitor / fae", r.competitor_bound / r.fae_bound);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-stage Grover amplitude estimator: runs, Monte Carlo sweeps and bounds"};
    app.require_subcommand(1);

    EstimateArgs est;
    auto* estimate = app.add_subcommand("estimate", "Run one seeded estimation and print JSON");
    estimate->add_option("--amplitude", est.amplitude, "Amplitude a in [0, 1]")->required();
    estimate->add_option("--delta-c", est.delta_c, "Per-interval failure probability");
    estimate->add_option("--ell", est.ell, "Number of iterations");
    estimate->add_option("--seed", est.seed, "Oracle seed");
    estimate->add_flag("--trace", est.trace, "Include the iteration trace and diagnostics");
    estimate->add_flag("--rounded-initial-bound", est.rounded_bound, "Start from theta_max = 0.252");

    BenchArgs bch;
    auto* bench = app.add_subcommand("bench", "Monte Carlo sweep over amplitudes and ell");
    bench->add_option("--amplitudes", bch.amplitudes, "Comma separated amplitudes")->delimiter(',');
    bench->add_option("--ell-min", bch.ell_min);
    bench->add_option("--ell-max", bch.ell_max);
    bench->add_option("--trials", bch.trials, "Trials per (amplitude, ell) cell");
    bench->add_option("--delta-c", bch.delta_c);
    bench->add_option("--seed", bch.seed, "Master seed");
    bench->add_option("--out", bch.out, "CSV output path")->required();
    bench->add_option("--json", bch.json, "JSON output path");
    bench->add_option("--svg", bch.svg, "SVG output path");
    bench->add_option("--threads", bch.threads, "Worker threads (0 = all cores)");
    bench->add_flag("--trace", bch.trace, "Include per-trial records in the JSON output");
    bench->add_flag("--rounded-initial-bound", bch.rounded_bound, "Start from theta_max = 0.252");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", ver.suite, "simulator|atan|chernoff|diagnostics")
        ->required()
        ->check(CLI::IsMember({"simulator", "atan", "chernoff", "diagnostics"}));
    verify->add_option("--seed", ver.seed);

    BoundsArgs bnd;
    auto* bounds = app.add_subcommand("bounds", "Query-count bounds for a target error");
    bounds->add_option("--epsilon", bnd.epsilon)->required();
    bounds->add_option("--delta", bnd.delta)->required();
    bounds->add_flag("--json", bnd.json, "Print JSON instead of a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        if (*estimate) return run_estimate(est);
        if (*bench) return run_bench(bch);
        if (*verify) return run_verify(ver);
        if (*bounds) return run_bounds(bnd);
    } catch (const fae::IoError& e) {
        std::cerr << "fae: " << e.what() << '\n';
        return kIoError;
    } catch (const fae::DomainError& e) {
        std::cerr << "fae: " << e.what() << '\n';
        return kConfigError;
    } catch (const fae::DegenerateNuError& e) {
        std::cerr << "fae: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}
