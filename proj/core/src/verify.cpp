#include "fae/verify.hpp"

#include "fae/bench.hpp"
#include "fae/confidence.hpp"
#include "fae/errors.hpp"
#include "fae/oracle.hpp"
#include "fae/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace fae::verify {

namespace {

std::string format(const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

} // namespace

SuiteReport simulator_suite(int theta_points, std::uint64_t m_max) {
    SuiteReport rep{"simulator", true, {}};
    double worst = 0.0;
    double worst_unitary = 0.0;
    for (int i = 0; i < theta_points; ++i) {
        const double theta_a = (kPi / 2.0) * i / std::max(1, theta_points - 1);
        const auto chi = sim::build_chi(theta_a);
        const auto q = sim::build_grover(chi);
        worst_unitary = std::max(worst_unitary, sim::unitarity_defect(q.matrix));
        const double theta = std::asin(std::sin(theta_a) / 4.0);
        const auto seq = sim::p11_sequence(chi, q, m_max);
        for (std::uint64_t m = 0; m <= m_max; ++m) {
            worst = std::max(worst, std::abs(seq[m] - good_probability(theta, m)));
        }
    }
    rep.passed = worst < 1e-10 && worst_unitary < 1e-10;
    rep.lines.push_back(format("max |p11 - sin^2((2m+1)theta)| = %.3e over %d angles, m <= %llu", worst,
                               theta_points, static_cast<unsigned long long>(m_max)));
    rep.lines.push_back(format("max unitarity defect of Q = %.3e", worst_unitary));
    return rep;
}

SuiteReport atan_suite(std::uint64_t samples, std::uint64_t seed) {
    SuiteReport rep{"atan", true, {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> dc_dist(0.0, 0.25);
    std::uniform_real_distribution<double> ds_dist(0.0, 0.5);
    std::bernoulli_distribution coin(0.5);

    std::uint64_t accepted = 0;
    std::uint64_t violations = 0;
    double worst_ratio = 0.0;
    while (accepted < samples) {
        const double c_star = unit(rng);
        const double s_star = (coin(rng) ? 1.0 : -1.0) * std::sqrt(1.0 - c_star * c_star);
        const double dc = dc_dist(rng);
        const double ds = ds_dist(rng);
        const double c = c_star + (coin(rng) ? dc : -dc);
        const double s = s_star + (coin(rng) ? ds : -ds);
        if (std::abs(c) > 1.0 || std::abs(s) > 1.0) continue;
        // Skip boxes that touch the discontinuity {s = 0, c <= 0}.
        if (s_star - ds <= 0.0 && s_star + ds >= 0.0 && c_star - dc <= 0.0) continue;
        ++accepted;
        const double err = std::abs(atan_ext(s, c) - atan_ext(s_star, c_star));
        const double bound = atan_error_bound(dc, ds);
        if (!(err < bound)) ++violations;
        if (bound > 0.0) worst_ratio = std::max(worst_ratio, err / bound);
    }
    rep.passed = violations == 0;
    rep.lines.push_back(format("%llu admissible samples, %llu violations, max err/bound = %.4f",
                               static_cast<unsigned long long>(accepted),
                               static_cast<unsigned long long>(violations), worst_ratio));
    return rep;
}

SuiteReport chernoff_suite(std::uint64_t resamples, std::uint64_t seed) {
    SuiteReport rep{"chernoff", true, {}};
    const double ps[] = {0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
    const std::uint64_t shots[] = {100, 1000, 10000};
    const double deltas[] = {0.1, 0.01};
    std::mt19937_64 rng(seed);
    double worst_margin = 1.0;
    for (double delta : deltas) {
        for (std::uint64_t n : shots) {
            for (double p : ps) {
                const double truth = 1.0 - 2.0 * p;
                std::uint64_t inside = 0;
                for (std::uint64_t r = 0; r < resamples; ++r) {
                    const std::uint64_t k = sample_good_count(n, p, rng);
                    const double c_hat = 1.0 - 2.0 * static_cast<double>(k) / static_cast<double>(n);
                    inside += chernoff(c_hat, n, delta).contains(truth) ? 1 : 0;
                }
                const double rate = static_cast<double>(inside) / static_cast<double>(resamples);
                const double sigma = std::sqrt(delta * (1.0 - delta) / static_cast<double>(resamples));
                const double margin = rate - (1.0 - delta - 3.0 * sigma);
                worst_margin = std::min(worst_margin, margin);
                if (margin < 0.0) {
                    rep.passed = false;
                    rep.lines.push_back(format("FAIL p=%.2f n=%llu delta=%.2f coverage=%.4f", p,
                                               static_cast<unsigned long long>(n), delta, rate));
                }
            }
        }
    }
    rep.lines.push_back(format("66 configurations x %llu resamples, worst coverage margin = %.4f",
                               static_cast<unsigned long long>(resamples), worst_margin));
    return rep;
}

SuiteReport diagnostics_suite(std::uint64_t trials, std::uint64_t seed) {
    SuiteReport rep{"diagnostics", true, {}};
    bench::BenchConfig cfg;
    cfg.amplitudes = {0.1, 0.3};
    cfg.ell_min = 6;
    cfg.ell_max = 8;
    cfg.trials = trials;
    cfg.master_seed = seed;
    const bench::TrialSet tset = bench::run_bench(cfg);

    for (const bench::Cell& cell : tset.cells) {
        const double eps = kPi / (3.0 * std::ldexp(1.0, cell.stats.ell - 1));
        std::uint64_t conditional = 0;
        std::uint64_t bound_miss = 0;
        for (const bench::TrialRecord& t : cell.trials) {
            if (t.diagnostics_pass) {
                ++conditional;
                if (!(t.error < eps)) ++bound_miss;
            }
        }
        const double target = 1.0 - (2.0 * cell.stats.ell - cell.stats.j0_mode) * cfg.delta_c;
        const double sigma = std::sqrt(std::max(0.0, target * (1.0 - target)) / static_cast<double>(trials));
        const bool ok = bound_miss == 0 && cell.stats.coverage_rate >= target - 3.0 * sigma;
        rep.passed = rep.passed && ok;
        rep.lines.push_back(format("%s a=%.2f ell=%d j0=%d coverage=%.4f (>= %.4f) bound misses=%llu/%llu",
                                   ok ? "ok  " : "FAIL", cell.stats.amplitude, cell.stats.ell, cell.stats.j0_mode,
                                   cell.stats.coverage_rate, target - 3.0 * sigma,
                                   static_cast<unsigned long long>(bound_miss),
                                   static_cast<unsigned long long>(conditional)));
    }
    return rep;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
    if (name == "simulator") return simulator_suite();
    if (name == "atan") return atan_suite(200000, seed);
    if (name == "chernoff") return chernoff_suite(2000, seed);
    if (name == "diagnostics") return diagnostics_suite(200, seed);
    throw DomainError("unknown verification suite: " + std::string(name));
}

} // namespace fae::verify
