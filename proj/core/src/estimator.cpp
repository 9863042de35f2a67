#include "fae/estimator.hpp"

#include "fae/errors.hpp"

#include <algorithm>
#include <cmath>

namespace fae {

namespace {

constexpr double kTransitionAngle = 3.0 * kPi / 8.0;
constexpr double kRhoMargin = kPi / 3.0;
constexpr double kMinSinNu = 0.1;

} // namespace

std::uint64_t first_stage_shots(double delta_c) {
    if (!(delta_c > 0.0 && delta_c < 1.0)) throw DomainError("delta_c must lie in (0, 1)");
    return static_cast<std::uint64_t>(std::ceil(1944.0 * std::log(2.0 / delta_c)));
}

std::uint64_t second_stage_shots(double delta_c) {
    if (!(delta_c > 0.0 && delta_c < 1.0)) throw DomainError("delta_c must lie in (0, 1)");
    return static_cast<std::uint64_t>(std::ceil(972.0 * std::log(2.0 / delta_c)));
}

EstimatorConfig EstimatorConfig::make(double delta_c, int ell, InitialBound bound) {
    EstimatorConfig cfg;
    cfg.delta_c = delta_c;
    cfg.ell = ell;
    cfg.n_shot_first = first_stage_shots(delta_c);
    cfg.n_shot_second = second_stage_shots(delta_c);
    cfg.initial_theta_max = bound == InitialBound::Rounded ? kRoundedInitialThetaMax : kSafeInitialThetaMax;
    cfg.validate();
    return cfg;
}

void EstimatorConfig::validate() const {
    if (!(delta_c > 0.0 && delta_c < 1.0)) throw DomainError("delta_c must lie in (0, 1)");
    // 2^(ell+1) must stay exact and Grover powers must fit comfortably in 64 bits.
    if (ell < 1 || ell > 50) throw DomainError("ell must lie in [1, 50]");
    if (n_shot_first == 0 || n_shot_second == 0) throw DomainError("shot counts must be positive");
    if (!(initial_theta_max > 0.0 && initial_theta_max < kPi / 6.0)) {
        throw DomainError("initial_theta_max must lie in (0, pi/6)");
    }
}

const char* to_string(Stage stage) noexcept { return stage == Stage::First ? "first" : "second"; }

double angle_multiplier(int j) noexcept { return std::ldexp(1.0, j + 1) + 2.0; }

std::uint64_t grover_power(int j) noexcept { return std::uint64_t{1} << (j - 1); }

ThetaBounds first_stage_update(const ConfidenceInterval& c_interval, int j) {
    if (j < 1) throw DomainError("iteration index must be >= 1");
    const double k = angle_multiplier(j);
    const double lo = std::clamp(c_interval.lo, -1.0, 1.0);
    const double hi = std::clamp(c_interval.hi, -1.0, 1.0);
    return {std::acos(hi) / k, std::acos(lo) / k};
}

double estimate_sin_raw(double c_hat_j, double c_hat_shifted, double nu) {
    const double s = std::sin(nu);
    if (!(std::abs(s) >= kMinSinNu)) throw DegenerateNuError(nu);
    return (c_hat_j * std::cos(nu) - c_hat_shifted) / s;
}

double estimate_sin(double c_hat_j, double c_hat_shifted, double nu) {
    return std::clamp(estimate_sin_raw(c_hat_j, c_hat_shifted, nu), -1.0, 1.0);
}

std::int64_t resolve_winding(double theta_max_prev, double rho_j, int j) {
    const double arg = (angle_multiplier(j) * theta_max_prev - rho_j + kRhoMargin) / (2.0 * kPi);
    return std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(arg)));
}

ThetaBounds second_stage_bounds(double rho_j, std::int64_t n_j, int j) noexcept {
    const double k = angle_multiplier(j);
    const double centre = 2.0 * kPi * static_cast<double>(n_j) + rho_j;
    return {(centre - kRhoMargin) / k, (centre + kRhoMargin) / k};
}

ThetaBounds second_stage_update(double rho_j, std::int64_t n_j, int j, double theta_cap) {
    const ThetaBounds raw = second_stage_bounds(rho_j, n_j, j);
    return {std::clamp(raw.theta_min, 0.0, theta_cap), std::clamp(raw.theta_max, 0.0, theta_cap)};
}

ConfidenceInterval sine_interval(const ConfidenceInterval& c_j, const ConfidenceInterval& c_shifted,
                                 double nu) {
    const double cn = std::cos(nu);
    const double sn = std::sin(nu);
    const double a = std::min(c_j.lo * cn, c_j.hi * cn);
    const double b = std::max(c_j.lo * cn, c_j.hi * cn);
    double lo = (a - c_shifted.hi) / sn;
    double hi = (b - c_shifted.lo) / sn;
    if (lo > hi) std::swap(lo, hi);
    return {std::max(-1.0, lo), std::min(1.0, hi), c_j.delta_c};
}

EstimationResult run_fae(const EstimatorConfig& config, CosineOracle& oracle) {
    config.validate();

    EstimationResult result;
    result.j0 = config.ell;
    result.initial_theta_max = config.initial_theta_max;
    result.trace.reserve(static_cast<std::size_t>(config.ell));

    double theta_min = 0.0;
    double theta_max = config.initial_theta_max;
    bool first_stage = true;
    double nu = 0.0;

    for (int j = 1; j <= config.ell; ++j) {
        const std::uint64_t m = grover_power(j);
        IterationRecord rec;
        rec.j = j;

        if (first_stage) {
            const CosEstimate est = oracle.measure_cos(m, config.n_shot_first, config.delta_c, m);
            const ThetaBounds b = first_stage_update(est.interval, j);
            theta_min = b.theta_min;
            theta_max = b.theta_max;

            rec.stage = Stage::First;
            rec.c_hat = est.c_hat;
            rec.c_interval = est.interval;

            if (std::ldexp(theta_max, j + 1) >= kTransitionAngle && j < config.ell) {
                result.j0 = j;
                nu = std::ldexp(theta_max + theta_min, j);
                result.nu = nu;
                first_stage = false;
            }
        } else {
            const std::uint64_t shifted_m = m + grover_power(result.j0);
            const CosEstimate est = oracle.measure_cos(m, config.n_shot_second, config.delta_c, m);
            const CosEstimate shifted = oracle.measure_cos(shifted_m, config.n_shot_second, config.delta_c, m);

            const double s_hat = estimate_sin(est.c_hat, shifted.c_hat, nu);
            const double rho = atan_ext(s_hat, est.c_hat);
            const std::int64_t n_j = resolve_winding(theta_max, rho, j);
            const ThetaBounds b = second_stage_update(rho, n_j, j, config.initial_theta_max);
            theta_min = b.theta_min;
            theta_max = b.theta_max;

            rec.stage = Stage::Second;
            rec.c_hat = est.c_hat;
            rec.c_interval = est.interval;
            rec.c_hat_shifted = shifted.c_hat;
            rec.c_shifted_interval = shifted.interval;
            rec.s_hat = s_hat;
            rec.rho = rho;
            rec.n_winding = n_j;
            rec.rho_interval = angle_interval(rho, sine_interval(est.interval, shifted.interval, nu),
                                              est.interval);
        }

        rec.theta_min = theta_min;
        rec.theta_max = theta_max;
        result.trace.push_back(rec);
    }

    result.theta_hat = 0.5 * (theta_min + theta_max);
    result.amplitude_hat = std::clamp(4.0 * std::sin(result.theta_hat), 0.0, 1.0);
    result.ledger = oracle.ledger().snapshot();
    result.success_prob_bound = 1.0 - static_cast<double>(2 * config.ell - result.j0) * config.delta_c;
    return result;
}

EstimationResult run_fae(const EstimatorConfig& config, const ProblemSpec& spec, std::uint64_t stream_key) {
    BernoulliOracle oracle(spec, stream_key);
    return run_fae(config, oracle);
}

bool IterationCheck::passed() const noexcept {
    auto ok = [](const std::optional<bool>& flag) { return !flag.has_value() || *flag; };
    return covered && cos_errors_ok && ok(first_stage_sound) && ok(rho_within) && ok(winding_unique) &&
           ok(winding_correct);
}

DiagnosticsReport trace_diagnostics(const EstimationResult& result, const ProblemSpec& spec) {
    constexpr double kMaxCosError = 1.0 / 9.0;
    constexpr double kMaxNuError = kPi / 60.0;
    // Absorbs acos/cos round-off when an interval collapses onto theta.
    constexpr double kCoverSlack = 1e-12;

    const double theta = spec.theta;
    DiagnosticsReport report;
    report.iterations.reserve(result.trace.size());

    if (result.nu) {
        report.delta_nu = *result.nu - std::ldexp(theta, result.j0 + 1);
        report.nu_ok = std::abs(*report.delta_nu) < kMaxNuError;
    }

    // The interval before iteration 1 is the a priori bound; only its upper end
    // enters the checks below.
    std::optional<ThetaBounds> prev;
    for (const IterationRecord& rec : result.trace) {
        IterationCheck chk;
        chk.j = rec.j;
        chk.stage = rec.stage;
        chk.covered = rec.theta_min - kCoverSlack <= theta && theta <= rec.theta_max + kCoverSlack;

        const std::uint64_t m = grover_power(rec.j);
        const double k = angle_multiplier(rec.j);
        chk.delta_c = std::abs(rec.c_hat - true_cosine(theta, m));
        chk.cos_errors_ok = chk.delta_c <= kMaxCosError;

        if (rec.stage == Stage::First) {
            const double prev_max = prev ? prev->theta_max : result.initial_theta_max;
            chk.first_stage_sound = k * prev_max < kPi;
        } else {
            const std::uint64_t shifted_m = m + grover_power(result.j0);
            chk.delta_c_shifted = std::abs(*rec.c_hat_shifted - true_cosine(theta, shifted_m));
            chk.cos_errors_ok = chk.cos_errors_ok && *chk.delta_c_shifted <= kMaxCosError;

            const double angle = k * theta;
            chk.rho_true = wrap_to_pi(angle);
            chk.rho_distance = circular_distance(*rec.rho, *chk.rho_true);
            chk.rho_within = *chk.rho_distance <= kRhoMargin;

            if (prev) {
                chk.winding_unique = k * (prev->theta_max - prev->theta_min) + 2.0 * kRhoMargin < 2.0 * kPi;
            }
            const double true_n = std::round((angle - *rec.rho) / (2.0 * kPi));
            chk.winding_correct = static_cast<std::int64_t>(true_n) == *rec.n_winding;
        }

        if (!chk.covered && !report.first_uncovered_j) report.first_uncovered_j = rec.j;
        if (!chk.passed() && !report.first_failing_j) report.first_failing_j = rec.j;

        report.iterations.push_back(chk);
        prev = ThetaBounds{rec.theta_min, rec.theta_max};
    }

    report.final_covered = !result.trace.empty() && report.iterations.back().covered;
    report.all_passed = !report.first_failing_j && report.nu_ok.value_or(true);
    if (report.nu_ok == false && result.j0 < static_cast<int>(result.trace.size())) {
        // A bad nu first shows up in the first second-stage iteration.
        const int j = result.j0 + 1;
        if (!report.first_failing_j || *report.first_failing_j > j) report.first_failing_j = j;
    }
    return report;
}

} // namespace fae
