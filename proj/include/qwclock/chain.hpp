#pragma once

// Single-excitation spectral machinery of the open XY chain with boundary
// conditions v(0) = v(s+1) = 0. Sites and momenta are 1-based throughout.

#include <Eigen/Dense>

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace qwclock {

inline void require_index(int value, int lo, int hi, const char* name) {
    if (value < lo || value > hi) {
        throw std::domain_error(std::string(name) + " = " + std::to_string(value) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

/// e_k = -lambda cos(k pi / (s+1)).
inline double eigenvalue(const ChainSpec& spec, int k) {
    require_index(k, 1, spec.sites(), "momentum index k");
    return -spec.lambda() * std::cos(k * pi / (spec.sites() + 1));
}

/// v_k(x) = sqrt(2/(s+1)) sin(k pi x / (s+1)).
inline double eigenfunction(const ChainSpec& spec, int k, int x) {
    require_index(k, 1, spec.sites(), "momentum index k");
    require_index(x, 1, spec.sites(), "site x");
    const double s1 = spec.sites() + 1.0;
    return std::sqrt(2.0 / s1) * std::sin(k * pi * x / s1);
}

/// Amplitude c(t,x;s) at site x of a cursor started at site 1, by direct O(s) summation.
inline Complex amplitude_kernel(const ChainSpec& spec, double t, int x) {
    require_index(x, 1, spec.sites(), "site x");
    const int s = spec.sites();
    const double s1 = s + 1.0;
    Complex sum{0.0, 0.0};
    for (int k = 1; k <= s; ++k) {
        const double q = k * pi / s1;
        sum += std::exp(I * (spec.lambda() * t * std::cos(q))) * (std::sin(q) * std::sin(q * x));
    }
    return sum * (2.0 / s1);
}

/// Cursor state in the one-excitation sector: one complex amplitude per site, unit norm.
class CursorWavefunction {
public:
    static constexpr double norm_tolerance = 1e-12;

    CursorWavefunction(ChainSpec spec, Eigen::VectorXcd amplitudes)
        : spec_(spec), amplitudes_(std::move(amplitudes)) {
        require(amplitudes_.size() == spec_.sites(),
                "cursor amplitude vector length must equal the chain length");
        require(std::abs(amplitudes_.squaredNorm() - 1.0) <= norm_tolerance,
                "cursor wavefunction is not normalized");
    }

    /// Normalizes arbitrary nonzero amplitudes.
    static CursorWavefunction normalized(ChainSpec spec, Eigen::VectorXcd amplitudes) {
        const double n = amplitudes.norm();
        require(n > 0.0, "cannot normalize a zero cursor wavefunction");
        return {spec, amplitudes / n};
    }

    /// The localized state |C(x)>.
    static CursorWavefunction basis_state(ChainSpec spec, int x) {
        require_index(x, 1, spec.sites(), "site x");
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(spec.sites());
        a(x - 1) = 1.0;
        return {spec, std::move(a)};
    }

    [[nodiscard]] const ChainSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] int sites() const noexcept { return spec_.sites(); }

    /// Amplitude at 1-based site x.
    [[nodiscard]] Complex operator()(int x) const { return amplitudes_(x - 1); }

    /// Largest site carrying a nonzero amplitude.
    [[nodiscard]] int support_end() const {
        for (int x = sites(); x >= 1; --x) {
            if (std::abs(amplitudes_(x - 1)) > 0.0) return x;
        }
        return 0;
    }

private:
    ChainSpec spec_;
    Eigen::VectorXcd amplitudes_;
};

/// Cached sine eigenbasis of the chain. The matrix V(k,x) = v_k(x) is real,
/// symmetric and orthogonal, so it is its own inverse.
class SineBasis {
public:
    explicit SineBasis(const ChainSpec& spec) : spec_(spec), modes_(spec.sites(), spec.sites()),
                                                energies_(spec.sites()) {
        const int s = spec.sites();
        const double s1 = s + 1.0;
        const double scale = std::sqrt(2.0 / s1);
        for (int k = 1; k <= s; ++k) {
            energies_(k - 1) = -spec.lambda() * std::cos(k * pi / s1);
            for (int x = 1; x <= s; ++x) modes_(k - 1, x - 1) = scale * std::sin(k * pi * x / s1);
        }
    }

    [[nodiscard]] const ChainSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const Eigen::MatrixXd& modes() const noexcept { return modes_; }
    [[nodiscard]] const Eigen::VectorXd& energies() const noexcept { return energies_; }

    /// Sine-transform coefficients sum_y v_k(y) psi(y).
    [[nodiscard]] Eigen::VectorXcd coefficients(const Eigen::VectorXcd& site_amplitudes) const {
        return apply(site_amplitudes);
    }

    /// psi(t,x) = sum_k exp(-i e_k t) v_k(x) coeff_k.
    [[nodiscard]] Eigen::VectorXcd evolve_coefficients(const Eigen::VectorXcd& coeffs, double t) const {
        Eigen::VectorXcd phased(coeffs.size());
        for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
            phased(k) = coeffs(k) * Complex(std::cos(energies_(k) * t), -std::sin(energies_(k) * t));
        }
        return apply(phased);
    }

private:
    [[nodiscard]] Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
        const Eigen::VectorXd re = modes_ * v.real();
        const Eigen::VectorXd im = modes_ * v.imag();
        Eigen::VectorXcd out(v.size());
        out.real() = re;
        out.imag() = im;
        return out;
    }

    ChainSpec spec_;
    Eigen::MatrixXd modes_;
    Eigen::VectorXd energies_;
};

namespace detail {

inline void check_drift(const Eigen::VectorXcd& a) {
    const double drift = std::abs(a.squaredNorm() - 1.0);
    if (drift > 1e-9) {
        throw normalization_error("normalization drift " + std::to_string(drift) +
                                  " after propagation exceeds 1e-9");
    }
}

}  // namespace detail

/// Propagates one initial cursor state to many times with a single O(s^2) setup.
class CursorPropagator {
public:
    explicit CursorPropagator(const CursorWavefunction& psi0)
        : basis_(psi0.spec()), coeffs_(basis_.coefficients(psi0.amplitudes())) {}

    CursorPropagator(SineBasis basis, const CursorWavefunction& psi0)
        : basis_(std::move(basis)), coeffs_(basis_.coefficients(psi0.amplitudes())) {
        require(basis_.spec() == psi0.spec(), "basis and state belong to different chains");
    }

    [[nodiscard]] Eigen::VectorXcd amplitudes_at(double t) const {
        return basis_.evolve_coefficients(coeffs_, t);
    }

    [[nodiscard]] CursorWavefunction at(double t) const {
        Eigen::VectorXcd a = amplitudes_at(t);
        detail::check_drift(a);
        // Rounding at the 1e-15 level is absorbed here; larger drift already threw.
        return CursorWavefunction::normalized(basis_.spec(), std::move(a));
    }

    [[nodiscard]] const SineBasis& basis() const noexcept { return basis_; }

private:
    SineBasis basis_;
    Eigen::VectorXcd coeffs_;
};

/// psi(t) expanded in the sine eigenbasis. Negative t runs the evolution backwards.
inline CursorWavefunction propagate(const CursorWavefunction& psi0, double t) {
    return CursorPropagator(psi0).at(t);
}

/// The tridiagonal single-excitation Hamiltonian, -lambda/2 on the off-diagonals.
inline Eigen::MatrixXd chain_hamiltonian(const ChainSpec& spec) {
    const int s = spec.sites();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(s, s);
    for (int x = 0; x + 1 < s; ++x) {
        h(x, x + 1) = -spec.lambda() / 2.0;
        h(x + 1, x) = -spec.lambda() / 2.0;
    }
    return h;
}

struct PositionStatistics {
    std::vector<double> distribution;  // p(x) at index x-1
    double mean = 0.0;
    double variance = 0.0;
};

inline PositionStatistics position_statistics(std::span<const double> probabilities) {
    PositionStatistics stats;
    stats.distribution.assign(probabilities.begin(), probabilities.end());
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        const double x = static_cast<double>(i + 1);
        m1 += x * probabilities[i];
        m2 += x * x * probabilities[i];
    }
    stats.mean = m1;
    stats.variance = m2 - m1 * m1;
    return stats;
}

inline std::vector<double> site_probabilities(const Eigen::VectorXcd& amplitudes) {
    std::vector<double> p(static_cast<std::size_t>(amplitudes.size()));
    for (Eigen::Index i = 0; i < amplitudes.size(); ++i) p[static_cast<std::size_t>(i)] = std::norm(amplitudes(i));
    return p;
}

inline PositionStatistics position_statistics(const CursorWavefunction& psi) {
    const auto p = site_probabilities(psi.amplitudes());
    return position_statistics(std::span<const double>(p));
}

/// Eigenstate |c_k> of the free chain restricted to the pad {1..epsilon}, zero beyond.
inline CursorWavefunction launchpad_state(const ChainSpec& spec, int epsilon, int k) {
    require_index(epsilon, 1, spec.sites(), "launch pad length epsilon");
    require_index(k, 1, epsilon, "pad mode k");
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(spec.sites());
    const double e1 = epsilon + 1.0;
    for (int x = 1; x <= epsilon; ++x) a(x - 1) = std::sqrt(2.0 / e1) * std::sin(k * pi * x / e1);
    return CursorWavefunction::normalized(spec, std::move(a));
}

/// Flat alternating state c_n: amplitude +-1/sqrt(n) on odd sites of {1..2n-1}.
inline CursorWavefunction flat_state(const ChainSpec& spec, int n) {
    require(n >= 1 && 2 * n - 1 <= spec.sites(), "flat state needs 1 <= n and 2n-1 <= s");
    return launchpad_state(spec, 2 * n - 1, n);
}

/// Three-mode state gamma_n on {1..2n-1}, renormalized after construction.
inline CursorWavefunction gamma_state(const ChainSpec& spec, int n) {
    require(n >= 1 && 2 * n - 1 <= spec.sites(), "gamma state needs 1 <= n and 2n-1 <= s");
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(spec.sites());
    const double prefactor = std::sqrt(2.0 / (3.0 * n));
    for (int x = 1; x <= 2 * n - 1; x += 2) {
        const double sign = (x % 4 == 1) ? 1.0 : -1.0;  // sin(pi x / 2); zero on even sites
        a(x - 1) = prefactor * (1.0 + std::cos(pi * x / (2.0 * n))) * sign;
    }
    return CursorWavefunction::normalized(spec, std::move(a));
}

}  // namespace qwclock
