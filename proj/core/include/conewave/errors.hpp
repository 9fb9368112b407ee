#pragma once

#include <stdexcept>
#include <string>

namespace conewave {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Parameters outside the regime an operation is defined for
/// (e.g. asking for a subcritical certificate at a supercritical power).
struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Caller misuse: empty sample sets, off-grid points, too few records.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bad run configuration (CFL violation, malformed tables, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A quadrature or iteration failed to meet its tolerance within budget.
/// Carries the best available estimate and its error bound.
struct AccuracyError : std::runtime_error {
    double best_estimate;
    double error_bound;

    AccuracyError(const std::string& msg, double best, double bound)
        : std::runtime_error(msg), best_estimate(best), error_bound(bound) {}
};

}  // namespace conewave
