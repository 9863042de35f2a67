#pragma once

#include <stdexcept>
#include <string>

namespace fae {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when the memorized shift angle makes sine recovery ill-conditioned.
/// Only reachable when the stage-transition analysis has already been violated.
class DegenerateNuError : public std::runtime_error {
public:
    explicit DegenerateNuError(double nu)
        : std::runtime_error("degenerate shift angle: |sin(nu)| < 0.1 for nu = " + std::to_string(nu)),
          nu_(nu) {}

    double nu() const noexcept { return nu_; }

private:
    double nu_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fae
