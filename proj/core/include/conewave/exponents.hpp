#pragma once

#include <limits>
#include <string>

#include "conewave/errors.hpp"

namespace conewave {

/// Japanese bracket, smooth at 0: <s> = sqrt(1 + s^2).
double angle_bracket(double s);

/// Tie band used when classifying against the critical curves.
inline constexpr double kClassifyTol = 1e-12;

/// (p, mu, kappa): nonlinearity power, damping strength, data decay rate.
struct ProblemParams {
    double p;
    double mu;
    double kappa;

    ProblemParams(double p_, double mu_, double kappa_);
};

struct DerivedExponents {
    double nu;         // kappa - mu/2 - 1
    double eta;        // (mu/2 + 1) p - (mu/2 + 2)
    double gamma_s;    // gamma_S(p, 3 + mu)
    double gamma_f;    // 2 - (p - 1) kappa
    double p_strauss;  // p_S(3 + mu)
    double p_fujita;   // p_F(kappa), +inf at kappa = 0
};

enum class Regime { Global, BlowupCritical, BlowupSubcritical, SlowDecaySubfujita, Unclassified };

enum class LawKind { None, Power, ExpPower, BOfEps };

/// A lifespan law T(eps) ~ C * eps^exponent (Power),
/// exp(C * eps^exponent) (ExpPower), or C * b(eps) (BOfEps, no exponent).
struct LifespanLaw {
    LawKind kind = LawKind::None;
    double exponent = std::numeric_limits<double>::quiet_NaN();
};

struct RegimeReport {
    Regime regime = Regime::Unclassified;
    LifespanLaw lower_law;  // lower bound on the lifespan
    LifespanLaw upper_law;  // upper bound, kind None when no theorem applies
    double exponent_value = std::numeric_limits<double>::quiet_NaN();
    bool boundary_tie = false;  // p within the tie band of p_S or p_F
    std::string notes;
};

/// gamma_S(p, n) = 2 + (n+1) p - (n-1) p^2. Total.
double gamma_s(double p, double n);

/// Positive root of gamma_S(., n); gamma_s(result, n) = 0 to 1e-12.
double strauss_exponent(double n);

/// p_F(kappa) = 1 + 2/kappa; +infinity for kappa = 0 (compares greater
/// than every finite power).
double fujita_exponent(double kappa);

/// Psi(beta, alpha) = 1 + log((1+alpha)/(1+|beta|)) for |beta| <= alpha.
double psi_weight(double beta, double alpha);

/// Phi_rho(s) = max{1, <s>^rho}.
double phi_weight(double rho, double s);

DerivedExponents derive(const ProblemParams& params);

/// Solves b * {log(1+b)}^{2(p-1)/gamma_S} = eps^{-2p(p-1)/gamma_S} by
/// bracketing bisection; relative residual < 1e-10 at the returned value.
double solve_b(double epsilon, double p, double mu);

/// Places (p, mu, kappa) in the theorem case table; never throws on
/// uncovered parameter sets (returns Unclassified instead).
RegimeReport classify_regime(const ProblemParams& params);

const char* to_string(Regime r);
const char* to_string(LawKind k);

}  // namespace conewave
