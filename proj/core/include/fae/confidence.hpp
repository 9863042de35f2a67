#pragma once

#include <cstdint>
#include <numbers>
#include <utility>

namespace fae {

inline constexpr double kPi = std::numbers::pi;

/// Closed interval [lo, hi] carrying the failure probability it was built for.
struct ConfidenceInterval {
    double lo = 0.0;
    double hi = 0.0;
    double delta_c = 0.0;

    double width() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// Half-width sqrt(ln(2/delta_c) * 12 / n_shot) of the Chernoff interval for a
/// cosine estimate built from n_shot Bernoulli samples.
double chernoff_half_width(std::uint64_t n_shot, double delta_c);

/// Chernoff interval around c_hat, clamped to [-1, 1].
/// Throws DomainError unless 0 < delta_c < 1 and n_shot > 0.
ConfidenceInterval chernoff(double c_hat, std::uint64_t n_shot, double delta_c);

/// Six-case extended arctangent on the closed square [-1, 1]^2, range [-pi, pi].
/// Unlike std::atan2 the value at (0, 0) is 0 and the c < 0, s = 0 edge maps to +pi.
double atan_ext(double s, double c);

/// Error bound max(2 dc + 2 ds, 3 dc) for atan_ext under perturbations dc, ds of a
/// point on the unit circle. Requires 0 <= dc < 1/4 and 0 <= ds < 1/2.
double atan_error_bound(double delta_c_err, double delta_s_err);

/// Maps any angle to [-pi, pi].
double wrap_to_pi(double angle) noexcept;

/// Shortest arc length between two angles, in [0, pi].
double circular_distance(double a, double b) noexcept;

enum class IntervalKind { Connected, Disconnected };

/// Confidence set of an angle estimate in [-pi, pi].
///
/// Connected sets are one interval [a, b]. Disconnected sets wrap through the
/// +-pi cut and are stored as [-pi, c] U [d, pi] with first = c, second = d.
struct AngleEstimate {
    double value = 0.0;
    IntervalKind kind = IntervalKind::Connected;
    std::pair<double, double> bounds{0.0, 0.0};

    bool contains(double angle) const noexcept;

    /// Half-width of the set as seen from value, accounting for the wrap.
    double delta_rho() const noexcept;
};

/// Image of the box [s.lo, s.hi] x [c.lo, c.hi] under atan_ext, around rho.
/// A box containing the origin yields the full circle [-pi, pi].
AngleEstimate angle_interval(double rho, const ConfidenceInterval& s_interval,
                             const ConfidenceInterval& c_interval);

} // namespace fae
