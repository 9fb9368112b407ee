#include "conewave/initial_data.hpp"

#include <cmath>

#include "conewave/exponents.hpp"

namespace conewave {

namespace {

// Bump shape B(x) = (1 - x^2)^3 on [-1, 1]; vanishes with two derivatives
// at the edges, so r f(r) is C^2 on [0, inf).
double bump_shape(double x) {
    const double q = 1.0 - x * x;
    return (q <= 0.0) ? 0.0 : q * q * q;
}

double bump_shape_prime(double x) {
    const double q = 1.0 - x * x;
    return (q <= 0.0) ? 0.0 : -6.0 * x * q * q;
}

// Antiderivatives of B and x B on [-1, x].
double bump_int(double x) {
    auto F = [](double s) { return s - s * s * s + 0.6 * std::pow(s, 5) - std::pow(s, 7) / 7.0; };
    return F(x) - F(-1.0);
}

double bump_xint(double x) {
    auto F = [](double s) {
        const double s2 = s * s;
        return 0.5 * s2 - 0.75 * s2 * s2 + 0.5 * s2 * s2 * s2 - 0.125 * s2 * s2 * s2 * s2;
    };
    return F(x) - F(-1.0);
}

}  // namespace

ReducedData ReducedData::decay(double kappa) {
    if (!(kappa > 0.0)) throw DomainError("decay family: kappa must be > 0");
    ReducedData d;
    d.family_ = DataFamily::Decay;
    d.kappa_ = kappa;
    return d;
}

ReducedData ReducedData::blowup_slab(double kappa) {
    if (!(kappa > 0.0)) throw DomainError("blowup_slab family: kappa must be > 0");
    ReducedData d;
    d.family_ = DataFamily::BlowupSlab;
    d.kappa_ = kappa;
    return d;
}

ReducedData ReducedData::bump(double s0, double s1, double amp0, double amp1) {
    if (!(0.0 < s0 && s0 < s1)) throw DomainError("bump family: need 0 < s0 < s1");
    ReducedData d;
    d.family_ = DataFamily::Bump;
    d.s0_ = s0;
    d.s1_ = s1;
    d.amp0_ = amp0;
    d.amp1_ = amp1;
    return d;
}

ReducedData ReducedData::zero() { return ReducedData{}; }

ReducedData ReducedData::scaled(double c) const {
    ReducedData d = *this;
    d.scale_ *= c;
    return d;
}

double ReducedData::phi(double r) const {
    switch (family_) {
        case DataFamily::Decay:
            return scale_ * r * std::pow(angle_bracket(r), -kappa_);
        case DataFamily::Bump: {
            const double x = (2.0 * r - s0_ - s1_) / (s1_ - s0_);
            return scale_ * amp0_ * r * bump_shape(x);
        }
        case DataFamily::BlowupSlab:
        case DataFamily::Zero:
            return 0.0;
    }
    return 0.0;
}

double ReducedData::phiprime(double r) const {
    switch (family_) {
        case DataFamily::Decay: {
            const double br = angle_bracket(r);
            return scale_ * (std::pow(br, -kappa_) - kappa_ * r * r * std::pow(br, -kappa_ - 2.0));
        }
        case DataFamily::Bump: {
            const double x = (2.0 * r - s0_ - s1_) / (s1_ - s0_);
            const double dx = 2.0 / (s1_ - s0_);
            return scale_ * amp0_ * (bump_shape(x) + r * bump_shape_prime(x) * dx);
        }
        case DataFamily::BlowupSlab:
        case DataFamily::Zero:
            return 0.0;
    }
    return 0.0;
}

double ReducedData::psi(double r) const {
    switch (family_) {
        case DataFamily::Decay:
            return scale_ * r * std::pow(angle_bracket(r), -kappa_ - 1.0);
        case DataFamily::BlowupSlab:
            return scale_ * std::pow(1.0 + r, -kappa_);
        case DataFamily::Bump: {
            const double x = (2.0 * r - s0_ - s1_) / (s1_ - s0_);
            return scale_ * amp1_ * r * bump_shape(x);
        }
        case DataFamily::Zero:
            return 0.0;
    }
    return 0.0;
}

double ReducedData::psi_antiderivative(double r) const {
    if (r <= 0.0) return 0.0;
    switch (family_) {
        case DataFamily::Decay: {
            // int_0^r y <y>^{-k-1} dy
            if (kappa_ == 1.0) return scale_ * 0.5 * std::log1p(r * r);
            const double km1 = kappa_ - 1.0;
            return scale_ * (1.0 - std::pow(angle_bracket(r), -km1)) / km1;
        }
        case DataFamily::BlowupSlab: {
            if (kappa_ == 1.0) return scale_ * std::log1p(r);
            return scale_ * (std::pow(1.0 + r, 1.0 - kappa_) - 1.0) / (1.0 - kappa_);
        }
        case DataFamily::Bump: {
            const double m = 0.5 * (s0_ + s1_), s = 0.5 * (s1_ - s0_);
            const double x = std::min(1.0, (r - m) / s);
            if (x <= -1.0) return 0.0;
            return scale_ * amp1_ * s * (m * bump_int(x) + s * bump_xint(x));
        }
        case DataFamily::Zero:
            return 0.0;
    }
    return 0.0;
}

double source_density(const ReducedData& data, const DampingProfile& profile, double y) {
    if (y < 0.0) throw DomainError("source_density: y must be >= 0");
    return data.psi(y) + data.phiprime(y) + profile.w(y) * data.phi(y);
}

}  // namespace conewave
