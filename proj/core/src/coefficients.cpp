#include "conewave/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "conewave/exponents.hpp"
#include "conewave/sampling.hpp"

namespace conewave {

// Monotone cubic (Fritsch–Carlson) interpolant data for tabulated profiles.
struct DampingProfile::Table {
    std::vector<double> r, w, slope;
};

namespace {

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0), h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) return {delta[0], delta[0]};
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // One-sided ends, limited to preserve monotonicity.
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) s = 0.0;
        else if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0)) s = 3.0 * d0;
        return s;
    };
    d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

struct HermiteEval {
    double value, derivative;
};

HermiteEval hermite(double x0, double x1, double y0, double y1, double d0, double d1, double x) {
    const double h = x1 - x0;
    const double t = (x - x0) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    const double v = h00 * y0 + h * h10 * d0 + h01 * y1 + h * h11 * d1;
    const double dv = (6 * t2 - 6 * t) * y0 / h + (3 * t2 - 4 * t + 1) * d0 +
                      (6 * t - 6 * t2) * y1 / h + (3 * t2 - 2 * t) * d1;
    return {v, dv};
}

}  // namespace

DampingProfile DampingProfile::model(double mu) {
    if (mu < 0.0) throw DomainError("model profile: mu must be >= 0");
    DampingProfile p;
    p.kind_ = ProfileKind::Model;
    p.mu_ = mu;
    p.delta_ = 1.0;
    p.r0_ = 1.0;
    p.K_ = mu;
    return p;
}

DampingProfile DampingProfile::exact_inverse(double mu, double r0) {
    if (mu < 0.0) throw DomainError("exact_inverse profile: mu must be >= 0");
    if (!(r0 > 0.0)) throw DomainError("exact_inverse profile: r0 must be > 0");
    DampingProfile p;
    p.kind_ = ProfileKind::ExactInverse;
    p.mu_ = mu;
    p.delta_ = 2.0;
    p.r0_ = r0;
    p.K_ = mu * r0 * r0;
    return p;
}

DampingProfile DampingProfile::tabulated(std::vector<double> r, std::vector<double> w,
                                         double mu, double delta, double r0, double K) {
    if (r.size() != w.size() || r.size() < 2)
        throw ConfigError("tabulated profile: need >= 2 matching (r, w) samples");
    if (r.front() != 0.0) throw ConfigError("tabulated profile: r must start at 0");
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (!(r[i] < r[i + 1])) throw ConfigError("tabulated profile: r must be strictly increasing");
    if (mu < 0.0 || delta <= 0.0 || r0 <= 0.0)
        throw ConfigError("tabulated profile: bad tail metadata");
    auto table = std::make_shared<Table>();
    table->slope = pchip_slopes(r, w);
    table->r = std::move(r);
    table->w = std::move(w);
    DampingProfile p;
    p.kind_ = ProfileKind::Tabulated;
    p.mu_ = mu;
    p.delta_ = delta;
    p.r0_ = r0;
    p.K_ = K;
    p.table_ = std::move(table);
    return p;
}

DampingProfile DampingProfile::from_csv(const std::string& path, double mu, double delta,
                                        double r0, double K) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open profile CSV: " + path);
    std::vector<double> r, w;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b)) continue;
        try {
            r.push_back(std::stod(a));
            w.push_back(std::stod(b));
        } catch (const std::exception&) {
            if (r.empty() && w.empty()) continue;  // header row
            throw ConfigError("malformed profile CSV row: " + line);
        }
    }
    return tabulated(std::move(r), std::move(w), mu, delta, r0, K);
}

double DampingProfile::w(double r) const {
    switch (kind_) {
        case ProfileKind::Model:
            return 0.5 * mu_ / (1.0 + r);
        case ProfileKind::ExactInverse:
            return 0.5 * mu_ * r / (r0_ * r0_ + r * r);
        case ProfileKind::Tabulated: {
            const auto& t = *table_;
            if (r <= t.r.front()) return t.w.front();
            if (r >= t.r.back()) {
                // Decay extrapolation consistent with the declared tail.
                return 0.5 * (mu_ / r) + (t.w.back() - 0.5 * mu_ / t.r.back()) *
                                             std::pow(t.r.back() / r, 1.0 + delta_);
            }
            const auto it = std::upper_bound(t.r.begin(), t.r.end(), r);
            const std::size_t k = static_cast<std::size_t>(it - t.r.begin()) - 1;
            return hermite(t.r[k], t.r[k + 1], t.w[k], t.w[k + 1], t.slope[k], t.slope[k + 1], r).value;
        }
    }
    return 0.0;
}

double DampingProfile::wprime(double r) const {
    if (!(r > 0.0)) throw DomainError("wprime: r must be > 0");
    switch (kind_) {
        case ProfileKind::Model: {
            const double q = 1.0 + r;
            return -0.5 * mu_ / (q * q);
        }
        case ProfileKind::ExactInverse: {
            const double q = r0_ * r0_ + r * r;
            return 0.5 * mu_ * (r0_ * r0_ - r * r) / (q * q);
        }
        case ProfileKind::Tabulated: {
            const auto& t = *table_;
            if (r >= t.r.back()) {
                const double c = t.w.back() - 0.5 * mu_ / t.r.back();
                return -0.5 * mu_ / (r * r) -
                       c * (1.0 + delta_) * std::pow(t.r.back(), 1.0 + delta_) * std::pow(r, -2.0 - delta_);
            }
            const auto it = std::upper_bound(t.r.begin(), t.r.end(), r);
            const std::size_t k = (it == t.r.begin()) ? 0 : static_cast<std::size_t>(it - t.r.begin()) - 1;
            const std::size_t k1 = std::min(k + 1, t.r.size() - 1);
            if (k1 == k) return t.slope[k];
            return hermite(t.r[k], t.r[k1], t.w[k], t.w[k1], t.slope[k], t.slope[k1], r).derivative;
        }
    }
    return 0.0;
}

double DampingProfile::closed_form_W(double r) const {
    switch (kind_) {
        case ProfileKind::Model:
            return 0.5 * mu_ * std::log1p(r);
        case ProfileKind::ExactInverse:
            return 0.25 * mu_ * std::log1p((r / r0_) * (r / r0_));
        case ProfileKind::Tabulated:
            throw UsageError("tabulated profile has no closed-form W");
    }
    return 0.0;
}

double DampingProfile::tail_bound_excess(double r_hi, int n) const {
    if (K_ == 0.0) return 0.0;  // exact tail (mu = 0 model, ...)
    double worst = 0.0;
    const double lo = std::log(r0_), hi = std::log(r_hi);
    for (int i = 0; i <= n; ++i) {
        const double r = std::exp(lo + (hi - lo) * i / n);
        const double wt = std::fabs(2.0 * w(r) - mu_ / r) * std::pow(r, 1.0 + delta_) / K_;
        worst = std::max(worst, wt);
    }
    return worst;
}

double potential_from_damping(const DampingProfile& profile, double r) {
    if (!(r > 0.0)) throw DomainError("potential_from_damping: r must be > 0");
    const double wr = profile.w(r);
    return -profile.wprime(r) + wr * wr;
}

KernelEvaluator::KernelEvaluator(DampingProfile profile, double r_max, double table_step)
    : profile_(std::move(profile)), r_max_(r_max), step_(table_step) {
    if (!(r_max > 0.0) || !(table_step > 0.0))
        throw ConfigError("KernelEvaluator: r_max and table_step must be > 0");
    const std::size_t m = static_cast<std::size_t>(std::ceil(r_max / step_));
    r_max_ = static_cast<double>(m) * step_;
    W_nodes_.resize(m + 1);
    w_nodes_.resize(m + 1);
    W_nodes_[0] = 0.0;
    w_nodes_[0] = profile_.w(0.0);
    for (std::size_t k = 0; k < m; ++k) {
        const double a = k * step_, b = (k + 1) * step_;
        const double wm = profile_.w(0.5 * (a + b));
        w_nodes_[k + 1] = profile_.w(b);
        W_nodes_[k + 1] = W_nodes_[k] + (step_ / 6.0) * (w_nodes_[k] + 4.0 * wm + w_nodes_[k + 1]);
    }
}

double KernelEvaluator::W_tabulated(double r) const {
    if (r < 0.0) throw DomainError("W: r must be >= 0");
    if (r > r_max_ * (1.0 + 1e-12))
        throw DomainError("W: r beyond the tabulated range");
    r = std::min(r, r_max_);
    const std::size_t k = std::min(static_cast<std::size_t>(r / step_), W_nodes_.size() - 2);
    const double x0 = k * step_, x1 = x0 + step_;
    return hermite(x0, x1, W_nodes_[k], W_nodes_[k + 1], w_nodes_[k], w_nodes_[k + 1], r).value;
}

double KernelEvaluator::W(double r) const {
    if (profile_.has_closed_form_W()) {
        if (r < 0.0) throw DomainError("W: r must be >= 0");
        return profile_.closed_form_W(r);
    }
    return W_tabulated(r);
}

double KernelEvaluator::middle_arg(double t, double r, double y) const {
    if (t < 0.0 || r < 0.0) throw DomainError("kernel: t, r must be >= 0");
    const double m = 0.5 * (y - t + r);
    if (m < 0.0) {
        if (m < -1e-12 * (1.0 + std::fabs(t) + std::fabs(r) + std::fabs(y)))
            throw DomainError("kernel: requires y >= t - r");
        return 0.0;  // admissible boundary hit by rounding
    }
    return m;
}

double KernelEvaluator::log_kernel(double t, double r, double y) const {
    const double m = middle_arg(t, r, y);
    return -W(r) + 2.0 * W(m) - W(y);
}

double KernelEvaluator::kernel(double t, double r, double y) const {
    return std::exp(log_kernel(t, r, y));
}

double KernelEvaluator::kernel_tabulated(double t, double r, double y) const {
    const double m = middle_arg(t, r, y);
    return std::exp(-W_tabulated(r) + 2.0 * W_tabulated(m) - W_tabulated(y));
}

KernelBoundRatio kernel_bound_ratio(const KernelEvaluator& ke,
                                    const std::vector<std::array<double, 3>>& samples) {
    if (samples.empty()) throw UsageError("kernel_bound_ratio: empty sample set");
    const double mu = ke.profile().mu();
    KernelBoundRatio out{std::numeric_limits<double>::infinity(), 0.0};
    for (const auto& s : samples) {
        const double t = s[0], r = s[1], y = s[2];
        const double log_cmp = mu * std::log(angle_bracket(r - t + y)) -
                               0.5 * mu * (std::log(angle_bracket(r)) + std::log(angle_bracket(y)));
        const double ratio = std::exp(ke.log_kernel(t, r, y) - log_cmp);
        out.min_ratio = std::min(out.min_ratio, ratio);
        out.max_ratio = std::max(out.max_ratio, ratio);
    }
    return out;
}

std::vector<std::array<double, 3>> admissible_sobol_samples(std::size_t n, double box) {
    Sobol3 sobol(3);
    std::vector<std::array<double, 3>> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        auto u = sobol.next();
        const std::array<double, 3> s{box * u[0], box * u[1], box * u[2]};
        if (s[2] >= s[0] - s[1]) pts.push_back(s);
    }
    return pts;
}

}  // namespace conewave
