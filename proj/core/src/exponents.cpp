#include "conewave/exponents.hpp"

#include <cmath>

namespace conewave {

double angle_bracket(double s) { return std::hypot(1.0, s); }

ProblemParams::ProblemParams(double p_, double mu_, double kappa_) : p(p_), mu(mu_), kappa(kappa_) {
    if (!(p > 1.0)) throw DomainError("ProblemParams: p must be > 1");
    if (!(mu >= 0.0)) throw DomainError("ProblemParams: mu must be >= 0");
    if (!(kappa > 0.0)) throw DomainError("ProblemParams: kappa must be > 0");
}

double gamma_s(double p, double n) { return 2.0 + (n + 1.0) * p - (n - 1.0) * p * p; }

double strauss_exponent(double n) {
    if (!(n > 1.0)) throw DomainError("strauss_exponent: n must be > 1 (quadratic degenerates)");
    const double a = n - 1.0, b = n + 1.0;
    return (b + std::sqrt(b * b + 8.0 * a)) / (2.0 * a);
}

double fujita_exponent(double kappa) {
    if (kappa < 0.0) throw DomainError("fujita_exponent: kappa must be >= 0");
    if (kappa == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 + 2.0 / kappa;
}

double psi_weight(double beta, double alpha) {
    if (std::fabs(beta) > alpha)
        throw DomainError("psi_weight: requires |beta| <= alpha");
    return 1.0 + std::log1p(alpha) - std::log1p(std::fabs(beta));
}

double phi_weight(double rho, double s) {
    return std::max(1.0, std::pow(angle_bracket(s), rho));
}

DerivedExponents derive(const ProblemParams& params) {
    const double p = params.p, mu = params.mu, kappa = params.kappa;
    DerivedExponents d;
    d.nu = kappa - mu / 2.0 - 1.0;
    d.eta = (mu / 2.0 + 1.0) * p - (mu / 2.0 + 2.0);
    d.gamma_s = gamma_s(p, 3.0 + mu);
    d.gamma_f = 2.0 - (p - 1.0) * kappa;
    d.p_strauss = strauss_exponent(3.0 + mu);
    d.p_fujita = fujita_exponent(kappa);
    return d;
}

double solve_b(double epsilon, double p, double mu) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("solve_b: epsilon must be in (0, 1]");
    if (!(p > 1.0)) throw DomainError("solve_b: p must be > 1");
    const double gs = gamma_s(p, 3.0 + mu);
    if (!(gs > 0.0)) throw RegimeError("solve_b: requires 1 < p < p_S(3+mu) (gamma_S > 0)");

    const double c = 2.0 * (p - 1.0) / gs;
    const double rhs = std::pow(epsilon, -p * c);  // eps^{-2p(p-1)/gamma_S}
    auto lhs = [c](double b) { return b * std::pow(std::log1p(b), c); };

    // LHS is strictly increasing on (0, inf): bracket, then bisect.
    double lo = 1e-8, hi = 1.0;
    while (lhs(hi) < rhs) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw AccuracyError("solve_b: bracket expansion overflow", hi, rhs);
    }
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 400; ++it) {
        mid = 0.5 * (lo + hi);
        const double v = lhs(mid);
        if (std::fabs(v - rhs) <= 1e-10 * rhs) return mid;
        (v < rhs ? lo : hi) = mid;
    }
    const double res = std::fabs(lhs(mid) - rhs) / rhs;
    throw AccuracyError("solve_b: residual tolerance not met", mid, res);
}

namespace {

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace

RegimeReport classify_regime(const ProblemParams& params) {
    RegimeReport rep;
    const DerivedExponents d = derive(params);
    const double p = params.p;
    const double pnu = p * d.nu;

    rep.boundary_tie = near(p, d.p_strauss, kClassifyTol) ||
                       (std::isfinite(d.p_fujita) && near(p, d.p_fujita, kClassifyTol));

    if (!(params.kappa > params.mu / 2.0)) {
        rep.regime = Regime::Unclassified;
        rep.notes = "kappa <= mu/2: outside the lower-bound hypotheses (nu <= -1)";
        return rep;
    }

    const bool critical = near(p, d.p_strauss, kClassifyTol);
    const bool pnu_one = near(pnu, 1.0, kClassifyTol);

    if (p > d.p_strauss && !critical && p >= d.p_fujita - kClassifyTol) {
        rep.regime = Regime::Global;
        if (d.nu > 0.0 && d.nu <= 1.0)
            rep.notes = "pointwise bound: stated cases skip 0 < nu <= 1; "
                        "using the nu > 0 weight with min{nu, eta}";
        return rep;
    }

    if (pnu < 1.0 && !pnu_one && p < d.p_fujita) {
        rep.regime = Regime::SlowDecaySubfujita;
        const double e = -(p - 1.0) / d.gamma_f;
        rep.lower_law = {LawKind::Power, e};
        rep.upper_law = {LawKind::Power, e};  // slab data
        rep.exponent_value = e;
        return rep;
    }

    if (critical) {
        rep.regime = Regime::BlowupCritical;
        if (pnu_one) {
            const double e = -(p - 1.0);
            rep.lower_law = {LawKind::ExpPower, e};
            rep.upper_law = {LawKind::ExpPower, e};  // slab data
            rep.exponent_value = e;
        } else {
            const double e = -p * (p - 1.0);
            rep.lower_law = {LawKind::ExpPower, e};
            rep.upper_law = {LawKind::ExpPower, e};  // nonnegative data
            rep.exponent_value = e;
        }
        return rep;
    }

    if (p < d.p_strauss) {
        rep.regime = Regime::BlowupSubcritical;
        if (pnu_one) {
            rep.lower_law = {LawKind::BOfEps, std::numeric_limits<double>::quiet_NaN()};
            rep.upper_law = {LawKind::BOfEps, std::numeric_limits<double>::quiet_NaN()};
        } else {
            const double e = -2.0 * p * (p - 1.0) / d.gamma_s;
            rep.lower_law = {LawKind::Power, e};
            rep.upper_law = {LawKind::Power, e};  // nonnegative data
            rep.exponent_value = e;
        }
        return rep;
    }

    rep.regime = Regime::Unclassified;
    rep.notes = "no theorem case covers this parameter set";
    return rep;
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Global: return "GLOBAL";
        case Regime::BlowupCritical: return "BLOWUP_CRITICAL";
        case Regime::BlowupSubcritical: return "BLOWUP_SUBCRITICAL";
        case Regime::SlowDecaySubfujita: return "SLOW_DECAY_SUBFUJITA";
        case Regime::Unclassified: return "UNCLASSIFIED";
    }
    return "UNCLASSIFIED";
}

const char* to_string(LawKind k) {
    switch (k) {
        case LawKind::None: return "NONE";
        case LawKind::Power: return "POWER";
        case LawKind::ExpPower: return "EXP_POWER";
        case LawKind::BOfEps: return "B_OF_EPS";
    }
    return "NONE";
}

}  // namespace conewave
