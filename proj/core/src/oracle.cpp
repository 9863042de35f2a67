#include "fae/oracle.hpp"

#include "fae/errors.hpp"

#include <cmath>
#include <random>

namespace fae {

double attenuate(double amplitude) {
    if (!(amplitude >= 0.0 && amplitude <= 1.0)) {
        throw DomainError("amplitude must lie in [0, 1]");
    }
    return std::asin(amplitude / 4.0);
}

ProblemSpec ProblemSpec::from_amplitude(double amplitude, std::uint64_t seed) {
    return {amplitude, attenuate(amplitude), seed};
}

double good_probability(double theta, std::uint64_t m) noexcept {
    const double s = std::sin(static_cast<double>(2 * m + 1) * theta);
    return s * s;
}

double true_cosine(double theta, std::uint64_t m) noexcept {
    return std::cos(2.0 * static_cast<double>(2 * m + 1) * theta);
}

std::uint64_t sample_good_count(std::uint64_t n_shot, double p, std::mt19937_64& engine) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return n_shot;
    std::binomial_distribution<std::uint64_t> dist(n_shot, p);
    return dist(engine);
}

namespace {

void check_request(std::uint64_t m, std::uint64_t n_shot) {
    if (m == 0) throw DomainError("measure_cos requires m >= 1");
    if (n_shot == 0) throw DomainError("measure_cos requires n_shot >= 1");
}

} // namespace

CosEstimate BernoulliOracle::measure_cos(std::uint64_t m, std::uint64_t n_shot, double delta_c,
                                         std::uint64_t paper_power) {
    check_request(m, n_shot);
    auto engine = rng_.next_engine();
    const std::uint64_t n11 = sample_good_count(n_shot, good_probability(spec_.theta, m), engine);
    const double c_hat = 1.0 - 2.0 * static_cast<double>(n11) / static_cast<double>(n_shot);
    ledger_.record(m, n_shot, paper_power == 0 ? m : paper_power);
    return {m, n_shot, n11, c_hat, chernoff(c_hat, n_shot, delta_c)};
}

CosEstimate ExactOracle::measure_cos(std::uint64_t m, std::uint64_t n_shot, double delta_c,
                                     std::uint64_t paper_power) {
    check_request(m, n_shot);
    if (!(delta_c > 0.0 && delta_c < 1.0)) throw DomainError("delta_c must lie in (0, 1)");
    const double c = true_cosine(spec_.theta, m);
    ledger_.record(m, n_shot, paper_power == 0 ? m : paper_power);
    return {m, n_shot, std::nullopt, c, ConfidenceInterval{c, c, delta_c}};
}

} // namespace fae
