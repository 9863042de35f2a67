#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fae::verify {

struct SuiteReport {
    std::string name;
    bool passed = false;
    std::vector<std::string> lines;
};

/// Rotation identity of the Grover operator on the dense simulator.
SuiteReport simulator_suite(int theta_points = 20, std::uint64_t m_max = 1000);

/// Randomized check of the extended-arctangent error bound.
SuiteReport atan_suite(std::uint64_t samples, std::uint64_t seed);

/// Empirical coverage of the Chernoff interval.
SuiteReport chernoff_suite(std::uint64_t resamples, std::uint64_t seed);

/// Seeded FAE runs checked against ground truth: coverage rate and the
/// conditional error bound.
SuiteReport diagnostics_suite(std::uint64_t trials, std::uint64_t seed);

/// Dispatch by name: simulator, atan, chernoff, diagnostics.
/// Throws DomainError for an unknown suite.
SuiteReport run_suite(std::string_view name, std::uint64_t seed);

} // namespace fae::verify
