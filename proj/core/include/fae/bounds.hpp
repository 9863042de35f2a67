#pragma once

#include <cstdint>

namespace fae::bounds {

/// Amplitude error guaranteed after ell iterations: pi / (3 * 2^(ell-1)).
double epsilon_for_ell(int ell);

/// Smallest ell >= 1 whose guaranteed error is <= epsilon.
/// Domain 0 < epsilon <= 2 pi / 3.
int choose_ell(double epsilon);

/// N_orac < (4.1e3 / eps) ln(4 log2(2 pi / (3 eps)) / delta).
/// Domain 0 < epsilon < 2 pi / 3, 0 < delta < 1.
double theorem1_bound(double epsilon, double delta);

/// Worst-case oracle count when the second stage starts at j = 1:
/// 1944 ln(2/delta_c) + 1944 (2^ell - 2) ln(2/delta_c).
double worst_case_count(int ell, double delta_c);

/// Nominal-convention count for a run that switched stage at j0 with the given
/// integer shot counts: n_first (2^j0 - 1) + 2 n_second (2^ell - 2^j0).
/// j0 == ell means the run never left the first stage.
std::uint64_t paper_count(int ell, int j0, std::uint64_t n_first, std::uint64_t n_second);

/// Exact Q-call count for the same run. Each shifted second-stage batch also
/// pays 2^(j0-1) per shot on top of the nominal convention.
std::uint64_t exact_count(int ell, int j0, std::uint64_t n_first, std::uint64_t n_second);

/// Prior-art bound (1.15e6 / eps) ln((2/delta) log3(3 pi / (20 eps))).
double competitor_bound(double epsilon, double delta);

struct BoundReport {
    double epsilon = 0.0;
    double delta = 0.0;
    int ell = 0;
    double delta_c = 0.0;          // delta / (2 ell)
    double fae_bound = 0.0;
    double worst_case_count = 0.0;
    double competitor_bound = 0.0;
};

/// Plans a run for target error epsilon and failure probability delta.
BoundReport make_report(double epsilon, double delta);

} // namespace fae::bounds
