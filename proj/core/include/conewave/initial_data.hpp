#pragma once

#include <limits>

#include "conewave/coefficients.hpp"

namespace conewave {

enum class DataFamily { Decay, BlowupSlab, Bump, Zero };

/// Reduced initial data (phi, psi) = (r f0, r f1) with phi(0) = 0.
/// BlowupSlab is specified directly at the reduced level: phi == 0 and
/// psi(r) = (1+r)^{-kappa}, which attains the slab hypothesis with equality
/// (the matching 3D f1 = psi/r would be singular at the origin).
class ReducedData {
  public:
    /// f0 = <r>^{-kappa}, f1 = <r>^{-kappa-1}.
    static ReducedData decay(double kappa);
    /// phi == 0, psi = (1+r)^{-kappa}.
    static ReducedData blowup_slab(double kappa);
    /// C^2 polynomial bump (1-x^2)^3 supported on [s0, s1] in both f0 and f1.
    static ReducedData bump(double s0, double s1, double amp0 = 1.0, double amp1 = 1.0);
    static ReducedData zero();

    DataFamily family() const { return family_; }
    double kappa() const { return kappa_; }
    double support_lo() const { return s0_; }
    double support_hi() const { return s1_; }

    double phi(double r) const;
    double phiprime(double r) const;
    double psi(double r) const;

    /// int_0^r psi, in closed form (for d'Alembert golden checks).
    double psi_antiderivative(double r) const;

    /// Sharp constant C in |f0'| + |f1| <= C <r>^{-kappa-1} for the Decay
    /// family (the f0 bound itself holds with constant 1).
    double decay_bound_constant() const { return 1.0 + kappa_; }

    /// Same data with both components multiplied by c.
    ReducedData scaled(double c) const;

  private:
    ReducedData() = default;
    DataFamily family_ = DataFamily::Zero;
    double kappa_ = std::numeric_limits<double>::infinity();
    double s0_ = 0.0, s1_ = 0.0;  // bump support
    double amp0_ = 0.0, amp1_ = 0.0;
    double scale_ = 1.0;
};

/// psi(y) + phi'(y) + w(y) phi(y): the integrand of the free solution.
double source_density(const ReducedData& data, const DampingProfile& profile, double y);

}  // namespace conewave
