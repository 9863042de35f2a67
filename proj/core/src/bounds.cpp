#include "fae/bounds.hpp"

#include "fae/confidence.hpp"
#include "fae/errors.hpp"

#include <cmath>

namespace fae::bounds {

namespace {

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
}

void check_epsilon_open(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 2.0 * kPi / 3.0)) {
        throw DomainError("epsilon must lie in (0, 2 pi / 3)");
    }
}

} // namespace

double epsilon_for_ell(int ell) {
    if (ell < 1) throw DomainError("ell must be >= 1");
    return kPi / (3.0 * std::ldexp(1.0, ell - 1));
}

int choose_ell(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 2.0 * kPi / 3.0)) {
        throw DomainError("epsilon must lie in (0, 2 pi / 3]");
    }
    // Walk rather than ceil(log2(...)) so exact powers round-trip.
    int ell = 1;
    while (epsilon_for_ell(ell) > epsilon) {
        ++ell;
        if (ell > 1000) throw DomainError("epsilon too small");
    }
    return ell;
}

double theorem1_bound(double epsilon, double delta) {
    check_epsilon_open(epsilon);
    check_delta(delta);
    return 4.1e3 / epsilon * std::log(4.0 * std::log2(2.0 * kPi / (3.0 * epsilon)) / delta);
}

double worst_case_count(int ell, double delta_c) {
    if (ell < 1) throw DomainError("ell must be >= 1");
    check_delta(delta_c);
    const double l = std::log(2.0 / delta_c);
    return 1944.0 * l + 1944.0 * (std::ldexp(1.0, ell) - 2.0) * l;
}

std::uint64_t paper_count(int ell, int j0, std::uint64_t n_first, std::uint64_t n_second) {
    if (ell < 1 || j0 < 1 || j0 > ell || ell > 62) throw DomainError("need 1 <= j0 <= ell <= 62");
    const std::uint64_t p_j0 = std::uint64_t{1} << j0;
    const std::uint64_t p_ell = std::uint64_t{1} << ell;
    return n_first * (p_j0 - 1) + 2 * n_second * (p_ell - p_j0);
}

std::uint64_t exact_count(int ell, int j0, std::uint64_t n_first, std::uint64_t n_second) {
    const std::uint64_t shift = std::uint64_t{1} << (j0 - 1);
    return paper_count(ell, j0, n_first, n_second) +
           n_second * shift * static_cast<std::uint64_t>(ell - j0);
}

double competitor_bound(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon < 3.0 * kPi / 20.0)) {
        throw DomainError("epsilon must lie in (0, 3 pi / 20)");
    }
    check_delta(delta);
    const double log3 = std::log(3.0 * kPi / (20.0 * epsilon)) / std::log(3.0);
    return 1.15e6 / epsilon * std::log(2.0 / delta * log3);
}

BoundReport make_report(double epsilon, double delta) {
    check_epsilon_open(epsilon);
    check_delta(delta);
    BoundReport r;
    r.epsilon = epsilon;
    r.delta = delta;
    r.ell = choose_ell(epsilon);
    r.delta_c = delta / (2.0 * r.ell);
    r.fae_bound = theorem1_bound(epsilon, delta);
    r.worst_case_count = worst_case_count(r.ell, r.delta_c);
    r.competitor_bound = competitor_bound(epsilon, delta);
    return r;
}

} // namespace fae::bounds
