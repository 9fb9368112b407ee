#pragma once

#include <cmath>

#include "conewave/exponents.hpp"

namespace conewave {

/// Existence weight w1(t, r) = r <r>^{-mu/2} * decay-in-(t-r, t+r) profile,
/// case split on the sign of nu (|nu| <= 1e-12 counts as nu = 0).
inline double weight1(double mu, double nu, double t, double r) {
    const double base = r * std::pow(angle_bracket(r), -0.5 * mu);
    const double s = t + r;
    if (std::fabs(nu) <= 1e-12) return base / angle_bracket(s) * psi_weight(t - r, s);
    if (nu < 0.0) return base * std::pow(angle_bracket(s), -1.0 - nu);
    return base / angle_bracket(s) * std::pow(angle_bracket(t - r), -nu);
}

/// Lifespan weight w2(t, r) for the p nu >= 1 analysis. Selectors:
/// q2 = 1 iff eta = 0, q3 = 1 iff p nu = 1 (0 for p nu > 1).
inline double weight2(double mu, double eta, double p_nu, double t, double r) {
    if (p_nu < 1.0 - 1e-12) throw UsageError("weight2: requires p nu >= 1");
    const int q2 = std::fabs(eta) <= 1e-12 ? 1 : 0;
    const int q3 = std::fabs(p_nu - 1.0) <= 1e-12 ? 1 : 0;
    const double base = r * std::pow(angle_bracket(r), -0.5 * mu);
    const double s = t + r;
    if (eta <= 1e-12) {
        double num = 1.0;
        if (q2) num *= psi_weight(t - r, s);
        if (q3) num *= std::log(2.0 + s);
        return base * num * std::pow(angle_bracket(s), -1.0 - eta);
    }
    double num = 1.0;
    if (q3) num *= std::log(2.0 + std::fabs(t - r));
    return base * num / (angle_bracket(s) * std::pow(angle_bracket(t - r), eta));
}

}  // namespace conewave
