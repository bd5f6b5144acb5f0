#pragma once

// Asymptotic computation-speed laws V = lim Q(t)/t of the cursor, and the
// empirical finite-t distribution of Q/t used to demonstrate convergence.
//
// Every law is stored through its momentum density g(p) on (0, pi/2), the
// density of p = arcsin V. The velocity density is f(v) = g(arcsin v)/sqrt(1-v^2);
// all integrals are taken in p, where the integrand is bounded.

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "core.hpp"
#include "quadrature.hpp"

namespace qwclock {

enum class SpeedFamily { localized, shifted, general, pad_ck, pad_cn };

inline std::string to_string(SpeedFamily f) {
    switch (f) {
        case SpeedFamily::localized: return "localized-M1";
        case SpeedFamily::shifted: return "shifted-Mx0";
        case SpeedFamily::general: return "general-psi0";
        case SpeedFamily::pad_ck: return "pad-ck";
        case SpeedFamily::pad_cn: return "pad-cn";
    }
    return "unknown";
}

// Closed-form moments.
inline double localized_mean() { return 8.0 / (3.0 * pi); }
inline double localized_second_moment() { return 0.75; }
inline double localized_variance() { return 0.75 - localized_mean() * localized_mean(); }
inline double shifted_mean(int x0) {
    require(x0 >= 1, "x0 must be >= 1");
    return 8.0 / (4.0 * pi - pi / (static_cast<double>(x0) * x0));
}
/// (4/pi) sum_{h=1}^{n} (1/(4h-3) - 1/(4h-1)).
inline double pad_cn_mean(int n) {
    require(n >= 1, "n must be >= 1");
    double sum = 0.0;
    for (int h = 1; h <= n; ++h) sum += 1.0 / (4.0 * h - 3.0) - 1.0 / (4.0 * h - 1.0);
    return 4.0 / pi * sum;
}
inline double pad_cn_mean_approx(int n) { return 1.0 - 1.0 / (2.0 * pi * n); }
inline double pad_cn_second_moment(int n) { return 1.0 - 1.0 / (4.0 * n); }
inline double pad_cn_asymptotic_variance(int n) { return (4.0 - pi) / (4.0 * pi * n); }

class SpeedLaw {
public:
    using Fn = std::function<double(double)>;

    struct Params {
        SpeedFamily family = SpeedFamily::general;
        int x0 = 0;
        int epsilon = 0;
        int k = 0;
        int n = 0;
    };

    /// momentum_density: g(p) on (0, pi/2). closed_cdf, when given, replaces
    /// quadrature in cdf().
    SpeedLaw(Params params, Fn momentum_density, int panels, Fn closed_cdf = {})
        : params_(params), g_(std::move(momentum_density)), cdf_(std::move(closed_cdf)),
          panels_(std::max(panels, 64)) {
        norm_ = expectation([](double) { return 1.0; });
        mean_ = expectation([](double v) { return v; });
        second_ = expectation([](double v) { return v * v; });
    }

    [[nodiscard]] const Params& params() const noexcept { return params_; }
    [[nodiscard]] SpeedFamily family() const noexcept { return params_.family; }

    [[nodiscard]] double momentum_density(double p) const { return g_(p); }

    /// f(v) on (0,1); 0 outside.
    [[nodiscard]] double density(double v) const {
        if (!(v > 0.0 && v < 1.0)) return 0.0;
        return g_(std::asin(v)) / std::sqrt(1.0 - v * v);
    }

    /// F(v) = P(V <= v), clamped to 0 below 0 and to 1 from v >= 1.
    [[nodiscard]] double cdf(double v) const {
        if (v <= 0.0) return 0.0;
        if (v >= 1.0) return 1.0;
        if (cdf_) return cdf_(v);
        const double a = std::asin(v);
        const int panels = std::max(1, static_cast<int>(std::ceil(panels_ * a / (pi / 2))));
        return integrate_gl(g_, 0.0, a, panels);
    }

    /// E[h(V)] = int_0^{pi/2} h(sin p) g(p) dp.
    template <class H>
    [[nodiscard]] double expectation(H&& h) const {
        return integrate_gl([&](double p) { return h(std::sin(p)) * g_(p); }, 0.0, pi / 2, panels_);
    }

    [[nodiscard]] Complex characteristic(double z) const {
        const double re = expectation([z](double v) { return std::cos(z * v); });
        const double im = expectation([z](double v) { return std::sin(z * v); });
        return {re, im};
    }

    [[nodiscard]] double normalization() const noexcept { return norm_; }
    [[nodiscard]] double mean() const noexcept { return mean_; }
    [[nodiscard]] double second_moment() const noexcept { return second_; }
    [[nodiscard]] double variance() const noexcept { return second_ - mean_ * mean_; }
    [[nodiscard]] int panels() const noexcept { return panels_; }
    [[nodiscard]] int quadrature_nodes() const noexcept { return panels_ * gl_nodes_per_panel; }

private:
    Params params_;
    Fn g_;
    Fn cdf_;
    int panels_;
    double norm_ = 0.0;
    double mean_ = 0.0;
    double second_ = 0.0;
};

/// Cursor started at site 1: f(v) = 4 v^2 / (pi sqrt(1-v^2)).
inline SpeedLaw law_localized() {
    SpeedLaw::Params params{SpeedFamily::localized, 1, 1, 1, 1};
    return SpeedLaw(
        params, [](double p) { return 4.0 / pi * std::sin(p) * std::sin(p); }, 64,
        [](double v) {
            const double a = std::asin(v);
            return 2.0 / pi * (a - std::sin(a) * std::cos(a));
        });
}

/// Cursor started at site x0 (after a clock reading), CDF 2a/pi - sin(2 x0 a)/(pi x0), a = arcsin v.
inline SpeedLaw law_shifted(int x0) {
    require(x0 >= 1, "x0 must be >= 1");
    SpeedLaw::Params params{SpeedFamily::shifted, x0, x0, 0, 0};
    const double x = x0;
    return SpeedLaw(
        params,
        [x](double p) {
            const double s = std::sin(x * p);
            return 4.0 / pi * s * s;
        },
        std::max(64, 2 * x0),
        [x](double v) {
            const double a = std::asin(v);
            return 2.0 * a / pi - std::sin(2.0 * x * a) / (pi * x);
        });
}

/// Sine-transform Psi(p) = sqrt(2/pi) sum_x sin(p x) psi(x) of a pad-supported state.
class MomentumTransform {
public:
    explicit MomentumTransform(std::vector<Eigen::VectorXcd> components)
        : components_(std::move(components)) {}

    /// |Psi(p)|^2 + |Psi(pi - p)|^2 summed over components.
    [[nodiscard]] double folded_density(double p) const {
        const double c = std::cos(p);
        double total = 0.0;
        for (const auto& psi : components_) {
            Complex fwd{0.0, 0.0};
            Complex bwd{0.0, 0.0};
            // sin((x+1)p) = 2 cos p sin(xp) - sin((x-1)p)
            double s_prev = 0.0;
            double s_cur = std::sin(p);
            for (Eigen::Index i = 0; i < psi.size(); ++i) {
                const Complex a = psi(i);
                fwd += s_cur * a;
                bwd += ((i % 2 == 0) ? s_cur : -s_cur) * a;  // sin(x(pi-p)) = (-1)^(x+1) sin(xp)
                const double s_next = 2.0 * c * s_cur - s_prev;
                s_prev = s_cur;
                s_cur = s_next;
            }
            total += std::norm(fwd) + std::norm(bwd);
        }
        return 2.0 / pi * total;
    }

    /// Psi(p) of a single component.
    [[nodiscard]] Complex value(std::size_t component, double p) const {
        const auto& psi = components_.at(component);
        Complex sum{0.0, 0.0};
        for (Eigen::Index i = 0; i < psi.size(); ++i) sum += std::sin(p * static_cast<double>(i + 1)) * psi(i);
        return std::sqrt(2.0 / pi) * sum;
    }

    [[nodiscard]] int max_support() const {
        Eigen::Index m = 0;
        for (const auto& c : components_) m = std::max(m, c.size());
        return static_cast<int>(m);
    }

private:
    std::vector<Eigen::VectorXcd> components_;
};

/// Values of Psi(p) on a Gauss-Legendre grid over (0, pi).
struct MomentumProfile {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<Complex> values;

    /// int_0^pi |Psi(p)|^2 dp.
    [[nodiscard]] double parseval_norm() const {
        double total = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) total += weights[i] * std::norm(values[i]);
        return total;
    }
};

inline MomentumProfile momentum_profile(const CursorWavefunction& psi0, int panels = 128) {
    using rule = boost::math::quadrature::gauss<double, 20>;
    const int eps = psi0.support_end();
    require(eps >= 1, "momentum profile of a zero state");
    MomentumTransform transform({psi0.amplitudes().head(eps)});
    MomentumProfile profile;
    panels = std::max(panels, eps);
    const double h = pi / panels;
    const auto& xs = rule::abscissa();
    const auto& ws = rule::weights();
    for (int j = 0; j < panels; ++j) {
        const double mid = (j + 0.5) * h;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (double sgn : {-1.0, 1.0}) {
                if (xs[i] == 0.0 && sgn > 0) continue;
                const double p = mid + sgn * xs[i] * h / 2;
                profile.nodes.push_back(p);
                profile.weights.push_back(ws[i] * h / 2);
                profile.values.push_back(transform.value(0, p));
            }
        }
    }
    return profile;
}

/// Law of a (possibly register-resolved) initial cursor state given as components
/// whose squared norms sum to 1. Each component is supported on {1..size}.
inline SpeedLaw law_general_components(std::vector<Eigen::VectorXcd> components) {
    double total = 0.0;
    for (const auto& c : components) total += c.squaredNorm();
    require(!components.empty() && std::abs(total - 1.0) <= 1e-10,
            "speed law input must have unit total norm");
    auto transform = std::make_shared<MomentumTransform>(std::move(components));
    const int eps = transform->max_support();
    SpeedLaw::Params params{SpeedFamily::general, 0, eps, 0, 0};
    return SpeedLaw(params, [transform](double p) { return transform->folded_density(p); },
                    std::max(64, eps));
}

/// f(v) = (|Psi(arcsin v)|^2 + |Psi(pi - arcsin v)|^2) / sqrt(1-v^2) for psi0 on {1..epsilon}.
inline SpeedLaw law_general(const CursorWavefunction& psi0, int epsilon) {
    require_index(epsilon, 1, psi0.sites(), "support length epsilon");
    require(psi0.support_end() <= epsilon, "initial state is not supported on {1..epsilon}");
    return law_general_components({psi0.amplitudes().head(epsilon)});
}

inline SpeedLaw law_general(const CursorWavefunction& psi0) {
    const int eps = psi0.support_end();
    require(eps >= 1, "initial state has no support");
    return law_general(psi0, eps);
}

/// Law of the launch-pad eigenstate c_k on {1..epsilon}.
inline SpeedLaw law_pad_ck(int epsilon, int k) {
    require(epsilon >= 1, "epsilon must be >= 1");
    require_index(k, 1, epsilon, "pad mode k");
    SpeedLaw::Params params{SpeedFamily::pad_ck, 0, epsilon, k, 0};
    const double e1 = epsilon + 1.0;
    const double q = k * pi / e1;
    // The naive form is 0/0 at p* = q or pi - q (same v* = sin q); both factors vanish there.
    const double p_sing = (q <= pi / 2) ? q : pi - q;
    const double sq = std::sin(q);
    const double cq = std::cos(q);
    auto g = [=](double p) {
        if (std::abs(p - p_sing) < 1e-12) p = p_sing - 1e-9;
        const double cp = std::cos(p);
        const double s = std::sin(e1 * p);
        const double d = std::sin(p + q) * std::sin(p - q);
        return 2.0 * (cp * cp + cq * cq) * sq * sq * s * s / (pi * e1 * d * d);
    };
    return SpeedLaw(params, g, std::max(64, 2 * epsilon + 2));
}

/// Law of the flat state c_n: f(v) = sin^2(2n arcsin v) / (pi n (1-v^2)^{3/2}).
inline SpeedLaw law_pad_cn(int n) {
    require(n >= 1, "n must be >= 1");
    SpeedLaw::Params params{SpeedFamily::pad_cn, 0, 2 * n - 1, n, n};
    const double nn = n;
    // With d = pi/2 - p: sin^2(2np) = sin^2(2nd) and cos p = sin d.
    auto g = [nn](double p) {
        const double d = pi / 2 - p;
        if (std::abs(d) < 1e-12) return 4.0 * nn / pi;
        const double a = std::sin(2.0 * nn * d);
        const double b = std::sin(d);
        return a * a / (pi * nn * b * b);
    };
    return SpeedLaw(params, g, std::max(64, 4 * n));
}

/// Distribution of Q/t at finite t: mass |psi(t,x)|^2 at v = x/t.
class EmpiricalSpeed {
public:
    EmpiricalSpeed(double t, std::vector<double> masses) : t_(t), masses_(std::move(masses)) {
        require(t > 0.0, "empirical speed needs t > 0");
    }

    [[nodiscard]] double time() const noexcept { return t_; }
    [[nodiscard]] const std::vector<double>& masses() const noexcept { return masses_; }
    [[nodiscard]] double velocity(std::size_t index) const { return static_cast<double>(index + 1) / t_; }

    [[nodiscard]] double mean() const {
        double m = 0.0;
        for (std::size_t i = 0; i < masses_.size(); ++i) m += masses_[i] * velocity(i);
        return m;
    }
    [[nodiscard]] double variance() const {
        double m2 = 0.0;
        for (std::size_t i = 0; i < masses_.size(); ++i) m2 += masses_[i] * velocity(i) * velocity(i);
        const double m = mean();
        return m2 - m * m;
    }
    [[nodiscard]] double cdf(double v) const {
        double c = 0.0;
        for (std::size_t i = 0; i < masses_.size() && velocity(i) <= v; ++i) c += masses_[i];
        return c;
    }
    /// phi(z) = sum_x |psi(t,x)|^2 exp(i z x / t).
    [[nodiscard]] Complex characteristic(double z) const {
        Complex c{0.0, 0.0};
        for (std::size_t i = 0; i < masses_.size(); ++i) c += masses_[i] * std::exp(I * (z * velocity(i)));
        return c;
    }
    /// sup_v |F_emp(v) - F(v)|, checked on both sides of every jump.
    [[nodiscard]] double sup_cdf_distance(const SpeedLaw& law) const {
        double below = 0.0;
        double worst = 0.0;
        for (std::size_t i = 0; i < masses_.size(); ++i) {
            const double f = law.cdf(velocity(i));
            const double above = below + masses_[i];
            worst = std::max({worst, std::abs(below - f), std::abs(above - f)});
            below = above;
        }
        return worst;
    }

private:
    double t_;
    std::vector<double> masses_;
};

inline EmpiricalSpeed empirical_speed(const CursorWavefunction& psi0, double t) {
    require(t > 0.0, "empirical speed needs t > 0");
    const auto psi_t = propagate(psi0, t);
    return {t, site_probabilities(psi_t.amplitudes())};
}

inline EmpiricalSpeed empirical_speed(const ChainSpec& spec, const CursorWavefunction& psi0, double t) {
    require(spec == psi0.spec(), "state does not belong to the given chain");
    return empirical_speed(psi0, t);
}

}  // namespace qwclock
