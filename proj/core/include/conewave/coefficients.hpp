#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "conewave/errors.hpp"

namespace conewave {

enum class ProfileKind { Model, ExactInverse, Tabulated };

/// Radial damping coefficient w with 2w(r) = mu/r + O(r^{-1-delta}) tail.
/// Continuous on [0, inf), C^1 away from 0. Immutable value type.
class DampingProfile {
  public:
    /// 2w(r) = mu/(1+r); W(r) = (mu/2) log(1+r) in closed form.
    static DampingProfile model(double mu);

    /// 2w(r) = mu r/(r0^2 + r^2): smooth at 0, exactly inverse-linear tail
    /// to O(r^-3); W(r) = (mu/4) log(1 + (r/r0)^2).
    static DampingProfile exact_inverse(double mu, double r0 = 1.0);

    /// Monotone-cubic interpolant of (r, w) samples; r strictly increasing
    /// from 0. mu/delta/r0/K are declared tail metadata.
    static DampingProfile tabulated(std::vector<double> r, std::vector<double> w,
                                    double mu, double delta, double r0, double K);

    /// Two-column CSV "r,w" (optional header), strictly increasing r from 0.
    static DampingProfile from_csv(const std::string& path, double mu, double delta,
                                   double r0, double K);

    ProfileKind kind() const { return kind_; }
    double mu() const { return mu_; }
    double delta() const { return delta_; }
    double r0() const { return r0_; }
    double tail_constant() const { return K_; }

    double w(double r) const;
    double wprime(double r) const;  // r > 0

    bool has_closed_form_W() const { return kind_ != ProfileKind::Tabulated; }
    double closed_form_W(double r) const;

    /// max over a log-spaced grid on [r0, r_hi] of |2w(r) - mu/r| r^{1+delta} / K;
    /// <= 1 (up to rounding) when the declared tail bound holds.
    double tail_bound_excess(double r_hi, int n = 200) const;

  private:
    DampingProfile() = default;
    struct Table;
    ProfileKind kind_ = ProfileKind::Model;
    double mu_ = 0.0, delta_ = 1.0, r0_ = 1.0, K_ = 0.0;
    std::shared_ptr<const Table> table_;
};

/// V(r) = -w'(r) + w(r)^2 for r > 0.
double potential_from_damping(const DampingProfile& profile, double r);

/// Kernel E_-(t, r, y) = exp(-W(r) + 2 W((y-t+r)/2) - W(y)) with
/// W(r) = int_0^r w. Holds a dense Simpson table of W (the generic path)
/// and uses the closed form when the profile has one.
class KernelEvaluator {
  public:
    KernelEvaluator(DampingProfile profile, double r_max, double table_step = 1.0 / 1024.0);

    const DampingProfile& profile() const { return profile_; }
    double r_max() const { return r_max_; }

    /// Closed form when available, tabulated otherwise.
    double W(double r) const;
    /// Always the tabulated (Simpson + cubic Hermite) path.
    double W_tabulated(double r) const;

    double log_kernel(double t, double r, double y) const;
    double kernel(double t, double r, double y) const;
    /// Kernel through the tabulated-W path regardless of closed form.
    double kernel_tabulated(double t, double r, double y) const;

  private:
    double middle_arg(double t, double r, double y) const;
    DampingProfile profile_;
    double r_max_;
    double step_;
    std::vector<double> W_nodes_;
    std::vector<double> w_nodes_;
};

struct KernelBoundRatio {
    double min_ratio;
    double max_ratio;
};

/// Extremes of E_-(t,r,y) / (<r-t+y>^mu / (<r>^{mu/2} <y>^{mu/2})) over the
/// given admissible samples; throws UsageError when samples are empty.
KernelBoundRatio kernel_bound_ratio(const KernelEvaluator& ke,
                                    const std::vector<std::array<double, 3>>& samples);

/// n Sobol samples in [0, box]^3 restricted to the admissible region y >= t - r.
std::vector<std::array<double, 3>> admissible_sobol_samples(std::size_t n, double box);

}  // namespace conewave
