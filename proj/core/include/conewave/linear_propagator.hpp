#pragma once

#include <cstddef>

#include "conewave/coefficients.hpp"
#include "conewave/initial_data.hpp"

namespace conewave {

/// Free solution of the damped linear problem:
///   u_L(t,r) = 1/2 int_{|t-r|}^{t+r} E_-(t,r,y) (psi + phi' + w phi)(y) dy
///              + chi(r-t) E_-(t,r,r-t) phi(r-t),
/// with chi = 1 on [0, inf). Adaptive quadrature with estimated absolute
/// error <= tol * (1 + |result|); throws AccuracyError past the budget.
double u_L(const KernelEvaluator& ke, const ReducedData& data, double t, double r,
           double tol = 1e-10);

/// Forward/odd-extension difference estimate of (d/dt) u_L(0, r); converges
/// to psi(r) at first order in h.
double verify_velocity(const KernelEvaluator& ke, const ReducedData& data, double r, double h);

struct GridSpec {
    double T;
    double R;
    std::size_t nt;
    std::size_t nr;
};

/// C0_hat = max over the grid (t in [0,T], r in (0,R]) of |u_L| / w1.
double linear_weighted_bound(const KernelEvaluator& ke, const ReducedData& data, double nu,
                             const GridSpec& grid, int threads = 1, double tol = 1e-10);

}  // namespace conewave
