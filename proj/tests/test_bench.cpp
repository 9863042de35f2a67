#include "fae/bench.hpp"
#include "fae/bounds.hpp"
#include "fae/errors.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <random>

namespace fb = fae::bench;

namespace {

fb::BenchConfig small_config() {
    fb::BenchConfig cfg;
    cfg.amplitudes = {0.1, 0.3};
    cfg.ell_min = 3;
    cfg.ell_max = 7;
    cfg.trials = 40;
    cfg.master_seed = 17;
    cfg.threads = 1;
    return cfg;
}

double brute_quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    for (double e : v) {
        const auto at_most = std::count_if(v.begin(), v.end(), [&](double x) { return x <= e; });
        if (static_cast<double>(at_most) >= q * static_cast<double>(v.size())) return e;
    }
    return v.back();
}

} // namespace

TEST(Quantile, ExactRank) {
    std::vector<double> v(100);
    std::iota(v.begin(), v.end(), 1.0);
    std::shuffle(v.begin(), v.end(), std::mt19937_64(3));
    EXPECT_EQ(fb::quantile_error(v, 0.95), 95.0);
    EXPECT_EQ(fb::quantile_error(v, 0.5), 50.0);
    EXPECT_EQ(fb::quantile_error(v, 0.951), 96.0);
    const std::vector<double> one{4.2};
    EXPECT_EQ(fb::quantile_error(one, 0.3), 4.2);
    EXPECT_EQ(fb::quantile_error(one, 0.99), 4.2);
    EXPECT_THROW(fb::quantile_error({}, 0.5), fae::DomainError);
    EXPECT_THROW(fb::quantile_error(one, 1.0), fae::DomainError);
}

TEST(Quantile, MatchesSortAndCount) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> len(1, 300);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> v(static_cast<std::size_t>(len(rng)));
        for (double& x : v) x = rep % 3 == 0 ? std::floor(u(rng) * 10) : u(rng);
        for (double q : {0.05, 0.5, 0.9, 0.95, 0.99}) EXPECT_EQ(fb::quantile_error(v, q), brute_quantile(v, q));
    }
}

TEST(LowerMedian, OrderStatistic) {
    EXPECT_EQ(fb::lower_median({5, 1, 3, 2}), 2u);
    EXPECT_EQ(fb::lower_median({9}), 9u);
    EXPECT_EQ(fb::lower_median({4, 4, 1}), 4u);
}

TEST(FitScaling, Examples) {
    const std::vector<fb::ScalingPoint> two{{1e-2, 1e5}, {1e-3, 1e6}};
    const auto fit = fb::fit_scaling(two);
    EXPECT_NEAR(fit.intercept_b, 3.0, 1e-12);
    EXPECT_NEAR(fit.free_slope, -1.0, 1e-12);
    EXPECT_NEAR(fit.residual_rms, 0.0, 1e-12);

    std::vector<fb::ScalingPoint> line;
    for (double e = 1e-6; e < 1e-1; e *= 3.7) line.push_back({e, std::pow(10.0, 2.5) / e});
    const auto exact = fb::fit_scaling(line);
    EXPECT_NEAR(exact.intercept_b, 2.5, 1e-12);
    EXPECT_NEAR(exact.residual_rms, 0.0, 1e-12);

    const std::vector<fb::ScalingPoint> bad{{1e-2, 1e5}, {0.0, 1e6}};
    EXPECT_THROW(fb::fit_scaling(bad), fae::DomainError);
    EXPECT_THROW(fb::fit_scaling(std::vector<fb::ScalingPoint>{{1e-2, 1e5}}), fae::DomainError);
}

TEST(Bench, ConfigValidation) {
    auto cfg = small_config();
    cfg.trials = 0;
    EXPECT_THROW(fb::run_bench(cfg), fae::DomainError);
    cfg = small_config();
    cfg.ell_max = 2;
    EXPECT_THROW(fb::run_bench(cfg), fae::DomainError);
    cfg = small_config();
    cfg.amplitudes = {1.2};
    EXPECT_THROW(fb::run_bench(cfg), fae::DomainError);
}

TEST(Bench, SingleTrialIsDeterministic) {
    auto cfg = small_config();
    cfg.trials = 1;
    cfg.amplitudes = {0.2};
    cfg.ell_min = cfg.ell_max = 6;
    const auto a = fb::run_bench(cfg);
    const auto b = fb::run_bench(cfg);
    ASSERT_EQ(a.cells.size(), 1u);
    EXPECT_EQ(a.cells[0].stats, b.cells[0].stats);
    EXPECT_EQ(fb::to_csv(a), fb::to_csv(b));
}

TEST(Bench, ThreadAndOrderInvariance) {
    auto cfg = small_config();
    const auto serial = fb::run_bench(cfg);
    cfg.threads = 4;
    const auto parallel = fb::run_bench(cfg);
    EXPECT_EQ(fb::to_csv(serial), fb::to_csv(parallel));

    // Executing a cell's trials backwards yields the same records and aggregates.
    const auto& cell = serial.cells[3];
    const auto config = fae::EstimatorConfig::make(0.01, cell.stats.ell);
    const auto spec = fae::ProblemSpec::from_amplitude(cell.stats.amplitude, cfg.master_seed);
    std::vector<fb::TrialRecord> backwards(cfg.trials);
    for (std::uint64_t t = cfg.trials; t-- > 0;) backwards[t] = fb::run_trial(config, spec, t);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        EXPECT_EQ(backwards[t].error, cell.trials[t].error);
        EXPECT_EQ(backwards[t].exact_q_calls, cell.trials[t].exact_q_calls);
    }
    EXPECT_EQ(fb::aggregate(cell.stats.amplitude, cell.stats.ell, cfg, backwards), cell.stats);
}

TEST(Bench, CellInvariants) {
    const auto cfg = small_config();
    const auto tset = fb::run_bench(cfg);
    ASSERT_EQ(tset.cells.size(), 10u);
    for (const auto& cell : tset.cells) {
        const auto& s = cell.stats;
        EXPECT_EQ(s.trials, cfg.trials);
        EXPECT_EQ(cell.failures, 0u);
        EXPECT_LE(s.n_orac_exact_min, s.n_orac_exact_median);
        EXPECT_LE(s.n_orac_exact_median, s.n_orac_exact_max);
        EXPECT_LE(s.n_orac_paper_median, s.n_orac_exact_median);
        EXPECT_LE(static_cast<double>(s.n_orac_paper_median),
                  fae::bounds::theorem1_bound(fae::bounds::epsilon_for_ell(s.ell), 2 * s.ell * cfg.delta_c));
        EXPECT_EQ(s.n_orac_exact_median, fae::bounds::exact_count(s.ell, s.j0_mode, 10300, 5150));
        const double target = 1 - (2 * s.ell - s.j0_mode) * cfg.delta_c;
        EXPECT_GE(s.coverage_rate, target - 3 * std::sqrt(target * (1 - target) / cfg.trials));
        EXPECT_GT(s.err_q, 0.0);
        EXPECT_LT(s.err_q, fae::bounds::epsilon_for_ell(s.ell));
    }
}

TEST(Bench, FitsPerAmplitude) {
    auto cfg = small_config();
    cfg.ell_max = 11;
    cfg.trials = 100;
    const auto tset = fb::run_bench(cfg);
    const auto fits = fb::fit_by_amplitude(tset);
    ASSERT_EQ(fits.size(), 2u);
    for (const auto& f : fits) {
        EXPECT_EQ(f.fit.points, 9u);
        EXPECT_GT(f.fit.free_slope, -1.3);
        EXPECT_LT(f.fit.free_slope, -0.7);
        EXPECT_GT(f.fit.intercept_b, 2.0);
        EXPECT_LT(f.fit.intercept_b, 3.5);
    }
}

TEST(Export, CsvRoundTrip) {
    const auto tset = fb::run_bench(small_config());
    const std::string csv = fb::to_csv(tset);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), fb::kCsvHeader);
    const auto parsed = fb::parse_csv(csv);
    ASSERT_EQ(parsed.size(), tset.cells.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) EXPECT_EQ(parsed[i], tset.cells[i].stats);
}

TEST(Export, EmptySetIsHeaderOnly) {
    fb::TrialSet empty;
    const std::string csv = fb::to_csv(empty);
    EXPECT_EQ(csv, std::string(fb::kCsvHeader) + "\n");
    EXPECT_TRUE(fb::parse_csv(csv).empty());
    EXPECT_THROW(fb::parse_csv("amplitude,ell\n"), fae::DomainError);
}

TEST(Export, JsonAndSvg) {
    auto cfg = small_config();
    cfg.amplitudes = {0.1, 0.2, 0.3, 0.4};
    cfg.trials = 10;
    const auto tset = fb::run_bench(cfg);
    const auto fits = fb::fit_by_amplitude(tset);

    const auto doc = nlohmann::json::parse(fb::to_json_text(tset, fits, true));
    EXPECT_EQ(doc.at("cells").size(), tset.cells.size());
    EXPECT_EQ(doc.at("fits").size(), 4u);
    EXPECT_EQ(doc.at("trials")[0].at("records").size(), 10u);
    EXPECT_FALSE(nlohmann::json::parse(fb::to_json_text(tset, fits, false)).contains("trials"));

    const std::string svg = fb::to_svg(tset, fits);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(svg.find("<script"), std::string::npos);
    EXPECT_NE(svg.find("First Stage Only"), std::string::npos);
    EXPECT_NE(svg.find("j0="), std::string::npos);
    for (const char* label : {"a = 0.1", "a = 0.2", "a = 0.3", "a = 0.4"}) EXPECT_NE(svg.find(label), std::string::npos) << label;
}

TEST(Export, UnwritablePath) {
    fb::TrialSet empty;
    EXPECT_THROW(fb::export_trials(empty, {}, fb::ExportFormat::Csv, "/nonexistent-dir/x.csv"), fae::IoError);
    const auto path = std::filesystem::temp_directory_path() / "fae_export_test.csv";
    fb::export_trials(empty, {}, fb::ExportFormat::Csv, path);
    EXPECT_TRUE(std::filesystem::exists(path));
    std::filesystem::remove(path);
}
