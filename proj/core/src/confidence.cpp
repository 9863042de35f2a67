#include "fae/confidence.hpp"

#include "fae/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fae {

double chernoff_half_width(std::uint64_t n_shot, double delta_c) {
    if (!(delta_c > 0.0 && delta_c < 1.0)) {
        throw DomainError("delta_c must lie in (0, 1)");
    }
    if (n_shot == 0) {
        throw DomainError("n_shot must be positive");
    }
    return std::sqrt(std::log(2.0 / delta_c) * 12.0 / static_cast<double>(n_shot));
}

ConfidenceInterval chernoff(double c_hat, std::uint64_t n_shot, double delta_c) {
    const double h = chernoff_half_width(n_shot, delta_c);
    return {std::max(-1.0, c_hat - h), std::min(1.0, c_hat + h), delta_c};
}

double atan_ext(double s, double c) {
    if (!(std::abs(s) <= 1.0 && std::abs(c) <= 1.0)) {
        throw DomainError("atan_ext arguments must lie in [-1, 1]");
    }
    if (c > 0.0) {
        return std::atan(s / c);
    }
    if (c == 0.0) {
        if (s > 0.0) return kPi / 2.0;
        if (s < 0.0) return -kPi / 2.0;
        return 0.0;
    }
    if (s >= 0.0) {
        return kPi + std::atan(s / c);
    }
    return -kPi + std::atan(s / c);
}

double atan_error_bound(double delta_c_err, double delta_s_err) {
    if (!(delta_c_err >= 0.0 && delta_c_err < 0.25)) {
        throw DomainError("atan_error_bound requires 0 <= delta_c < 1/4");
    }
    if (!(delta_s_err >= 0.0 && delta_s_err < 0.5)) {
        throw DomainError("atan_error_bound requires 0 <= delta_s < 1/2");
    }
    return std::max(2.0 * delta_c_err + 2.0 * delta_s_err, 3.0 * delta_c_err);
}

double wrap_to_pi(double angle) noexcept {
    double r = std::remainder(angle, 2.0 * kPi);
    // remainder() lands in [-pi, pi] already; keep +pi rather than -pi at the cut.
    if (r == -kPi) r = kPi;
    return r;
}

double circular_distance(double a, double b) noexcept {
    return std::abs(std::remainder(a - b, 2.0 * kPi));
}

bool AngleEstimate::contains(double angle) const noexcept {
    if (kind == IntervalKind::Connected) {
        return bounds.first <= angle && angle <= bounds.second;
    }
    return (angle >= -kPi && angle <= bounds.first) || (angle >= bounds.second && angle <= kPi);
}

double AngleEstimate::delta_rho() const noexcept {
    const double rho = value;
    if (kind == IntervalKind::Connected) {
        return std::max(rho - bounds.first, bounds.second - rho);
    }
    const double c = bounds.first;
    const double d = bounds.second;
    if (rho <= c) {
        return std::max(2.0 * kPi + rho - d, c - rho);
    }
    return std::max(rho - d, 2.0 * kPi + c - rho);
}

AngleEstimate angle_interval(double rho, const ConfidenceInterval& s_interval,
                             const ConfidenceInterval& c_interval) {
    const double s_lo = std::clamp(s_interval.lo, -1.0, 1.0);
    const double s_hi = std::clamp(s_interval.hi, -1.0, 1.0);
    const double c_lo = std::clamp(c_interval.lo, -1.0, 1.0);
    const double c_hi = std::clamp(c_interval.hi, -1.0, 1.0);

    AngleEstimate out;
    out.value = rho;

    const bool s_spans_zero = s_lo <= 0.0 && 0.0 <= s_hi;
    if (s_spans_zero && c_lo <= 0.0 && 0.0 <= c_hi) {
        out.bounds = {-kPi, kPi};
        return out;
    }

    if (s_spans_zero && c_hi < 0.0) {
        // Box straddles the branch cut on the negative c axis.
        out.kind = IntervalKind::Disconnected;
        const double upper = std::min(atan_ext(s_hi, c_lo), atan_ext(s_hi, c_hi));
        const double lower = s_lo < 0.0 ? std::max(atan_ext(s_lo, c_lo), atan_ext(s_lo, c_hi)) : -kPi;
        out.bounds = {lower, upper};
        return out;
    }

    const std::array<double, 4> corners{atan_ext(s_lo, c_lo), atan_ext(s_lo, c_hi),
                                        atan_ext(s_hi, c_lo), atan_ext(s_hi, c_hi)};
    const auto [lo, hi] = std::minmax_element(corners.begin(), corners.end());
    out.bounds = {*lo, *hi};
    return out;
}

} // namespace fae
