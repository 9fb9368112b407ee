#pragma once

#include <cstddef>
#include <functional>

namespace conewave {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::size_t max_subdivisions = 10000;
    // Pre-split this many geometrically shrinking slivers at the left
    // endpoint before adapting (for integrands with a rough endpoint).
    int graded_left = 0;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    std::size_t intervals = 0;
    bool converged = true;
};

/// Adaptive Gauss–Kronrod (G7/K15) on [a, b], worst-interval-first bisection.
/// Orientation-aware: a > b gives the negated integral.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opt = {});

/// As integrate(), but throws AccuracyError (carrying the best estimate and
/// its bound) when the tolerance is not met within the subdivision budget.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opt = {});

}  // namespace conewave
