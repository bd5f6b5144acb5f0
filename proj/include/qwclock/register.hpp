#pragma once

// One-qubit register clocked by a single cursor excitation (the N3 = 1 sector).
//
// The machine state is phi(x) in C^2 for each cursor site x. Hopping x -> x+1
// applies U_x to the register, so with W_x = U_{x-1}...U_1 the untwisted
// amplitudes w(x) = W_x^dagger phi(x) evolve under the free chain. Every
// evolution below goes through that change of frame.

#include <Eigen/Dense>

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "core.hpp"
#include "special_functions.hpp"
#include "speed_laws.hpp"

namespace qwclock {

using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

inline Matrix2c pauli_x() { return (Matrix2c() << 0, 1, 1, 0).finished(); }
inline Matrix2c pauli_y() { return (Matrix2c() << 0, -I, I, 0).finished(); }
inline Matrix2c pauli_z() { return (Matrix2c() << 1, 0, 0, -1).finished(); }

struct GroverParams {
    int mu = 0;
    double chi = 0.0;
    double theta = 0.0;
    double alpha = 0.0;
};

/// chi = arcsin(2^{-mu/2}), theta = pi - 2 chi, alpha = -4 chi.
inline GroverParams grover_params(int mu) {
    require(mu >= 1, "mu must be >= 1");
    GroverParams g;
    g.mu = mu;
    g.chi = std::asin(std::pow(2.0, -0.5 * mu));
    g.theta = pi - 2.0 * g.chi;
    g.alpha = -4.0 * g.chi;
    return g;
}

/// exp(-i a sigma_2 / 2).
inline Matrix2c rotation(double a) {
    const double c = std::cos(a / 2);
    const double s = std::sin(a / 2);
    return (Matrix2c() << c, -s, s, c).finished();
}

/// |omega> = |sigma_3 = +1>.
inline Vector2c marked_state() { return Vector2c(1.0, 0.0); }

/// |iota> = (cos(theta/2), sin(theta/2)), the uniform superposition seen in span{omega, omega-perp}.
inline Vector2c initial_register(const GroverParams& g) {
    return Vector2c(std::cos(g.theta / 2), std::sin(g.theta / 2));
}

/// Oracle step: I - 2|omega><omega|.
inline Matrix2c oracle_a() { return (Matrix2c() << -1, 0, 0, 1).finished(); }

/// Estimation step: 2|iota><iota| - I.
inline Matrix2c estimation_b(const GroverParams& g) {
    const Vector2c iota = initial_register(g);
    return 2.0 * iota * iota.adjoint() - Matrix2c::Identity();
}

inline double unitarity_defect(const Matrix2c& u) {
    return (u.adjoint() * u - Matrix2c::Identity()).cwiseAbs().maxCoeff();
}

enum class ProgramKind { toy, alternating, identity, telomere, pad_window, custom };

/// Link unitaries U_1..U_{s-1} on an s-site chain.
class PrimitiveProgram {
public:
    PrimitiveProgram(int sites, std::vector<Matrix2c> unitaries, ProgramKind kind = ProgramKind::custom)
        : sites_(sites), kind_(kind), unitaries_(std::move(unitaries)) {
        require(sites >= 2, "program needs s >= 2");
        require(static_cast<int>(unitaries_.size()) == sites - 1, "program needs exactly s-1 link unitaries");
        for (const auto& u : unitaries_) {
            require(unitarity_defect(u) <= 1e-12, "link operator is not unitary within 1e-12");
        }
        prefix_.reserve(static_cast<std::size_t>(sites));
        prefix_.push_back(Matrix2c::Identity());
        for (int x = 1; x < sites; ++x) prefix_.push_back(unitaries_[x - 1] * prefix_.back());
    }

    static PrimitiveProgram identity(int sites) {
        return {sites, std::vector<Matrix2c>(static_cast<std::size_t>(sites - 1), Matrix2c::Identity()),
                ProgramKind::identity};
    }

    /// Every link rotates by alpha.
    static PrimitiveProgram toy(int sites, double alpha) {
        return {sites, std::vector<Matrix2c>(static_cast<std::size_t>(std::max(sites - 1, 0)), rotation(alpha)),
                ProgramKind::toy};
    }

    /// U_x = A for odd x, B for even x.
    static PrimitiveProgram alternating(int sites, const GroverParams& g) {
        std::vector<Matrix2c> u;
        for (int x = 1; x < sites; ++x) u.push_back(x % 2 == 1 ? oracle_a() : estimation_b(g));
        return {sites, std::move(u), ProgramKind::alternating};
    }

    /// Rotations on links 1..active, identity beyond (trailing storage chain).
    static PrimitiveProgram telomere(int sites, double alpha, int active) {
        require_index(active, 0, sites - 1, "number of active links");
        std::vector<Matrix2c> u;
        for (int x = 1; x < sites; ++x) u.push_back(x <= active ? rotation(alpha) : Matrix2c::Identity());
        return {sites, std::move(u), ProgramKind::telomere};
    }

    /// Rotations on links epsilon..epsilon+active-1, identity elsewhere.
    static PrimitiveProgram pad_window(int sites, double alpha, int epsilon, int active) {
        require(epsilon >= 1 && active >= 0 && epsilon + active - 1 <= sites - 1,
                "pad window links must lie within 1..s-1");
        std::vector<Matrix2c> u;
        for (int x = 1; x < sites; ++x) {
            u.push_back((x >= epsilon && x < epsilon + active) ? rotation(alpha) : Matrix2c::Identity());
        }
        return {sites, std::move(u), ProgramKind::pad_window};
    }

    [[nodiscard]] int sites() const noexcept { return sites_; }
    [[nodiscard]] ProgramKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<Matrix2c>& unitaries() const noexcept { return unitaries_; }
    /// U_x for 1 <= x <= s-1.
    [[nodiscard]] const Matrix2c& link(int x) const {
        require_index(x, 1, sites_ - 1, "link x");
        return unitaries_[static_cast<std::size_t>(x - 1)];
    }
    /// W_x = U_{x-1}...U_1, W_1 = I.
    [[nodiscard]] const Matrix2c& accumulated(int x) const {
        require_index(x, 1, sites_, "site x");
        return prefix_[static_cast<std::size_t>(x - 1)];
    }

private:
    int sites_;
    ProgramKind kind_;
    std::vector<Matrix2c> unitaries_;
    std::vector<Matrix2c> prefix_;
};

/// |R(x)> = U_{x-1}...U_1 |R(1)>, x = 1..s.
inline std::vector<Vector2c> register_state_sequence(const PrimitiveProgram& program, const Vector2c& r1) {
    require(std::abs(r1.squaredNorm() - 1.0) <= 1e-12, "register state must be normalized");
    std::vector<Vector2c> seq;
    seq.reserve(static_cast<std::size_t>(program.sites()));
    for (int x = 1; x <= program.sites(); ++x) seq.push_back(program.accumulated(x) * r1);
    return seq;
}

struct BlochVector {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    [[nodiscard]] double norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }
};

/// rho = (I + s . sigma)/2.
inline BlochVector bloch(const Matrix2c& rho) {
    return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

inline Matrix2c density_from_bloch(const BlochVector& b) {
    return 0.5 * (Matrix2c::Identity() + b.s1 * pauli_x() + b.s2 * pauli_y() + b.s3 * pauli_z());
}

struct BlochPolar {
    double r = 0.0;
    double gamma = 0.0;
    bool degenerate = false;  // r < 1e-12: gamma carried over, not measured
};

/// s1 = r sin gamma, s3 = r cos gamma. With previous, gamma is moved onto the
/// branch nearest to previous->gamma, and carried over when r vanishes.
inline BlochPolar bloch_polar(const Matrix2c& rho, std::optional<double> previous = std::nullopt) {
    const BlochVector b = bloch(rho);
    require(std::abs(b.s2) <= 1e-9, "polar form needs a Bloch vector in the 1-3 plane");
    BlochPolar p;
    p.r = std::hypot(b.s1, b.s3);
    if (p.r < 1e-12) {
        p.degenerate = true;
        p.gamma = previous.value_or(0.0);
        return p;
    }
    p.gamma = std::atan2(b.s1, b.s3);
    if (previous) p.gamma += 2.0 * pi * std::round((*previous - p.gamma) / (2.0 * pi));
    return p;
}

/// Binary entropy in nats of eigenvalues (1 +- r)/2, with 0 ln 0 = 0.
inline double entropy_from_radius(double r) {
    r = std::clamp(r, 0.0, 1.0);
    auto term = [](double l) { return l > 0.0 ? -l * std::log(l) : 0.0; };
    return term((1.0 + r) / 2.0) + term((1.0 - r) / 2.0);
}

inline double entropy(const Matrix2c& rho) { return entropy_from_radius(bloch(rho).norm()); }

struct Readout {
    Vector2c b1;
    double lambda1 = 0.0;
    bool degenerate = false;  // r = 0: every projector is optimal
};

/// |b1> = (cos(gamma/2), sin(gamma/2)) with probability lambda1 = (1+r)/2.
inline Readout optimal_readout(const Matrix2c& rho) {
    const BlochPolar p = bloch_polar(rho);
    Readout out;
    out.b1 = Vector2c(std::cos(p.gamma / 2), std::sin(p.gamma / 2));
    out.lambda1 = (1.0 + p.r) / 2.0;
    out.degenerate = p.degenerate;
    return out;
}

/// Tr(rho (I + sigma_3)/2).
inline double success_probability(const Matrix2c& rho) { return rho(0, 0).real(); }

/// Large-chain form of r e^{i gamma}: (2 e^{i(theta-alpha)}/T)(J1 - T J2 + i(T H0 - H1)), T = alpha lambda t.
inline Complex bessel_struve_approx(const GroverParams& g, double lambda, double t) {
    const double tt = g.alpha * lambda * t;
    const Complex phase = std::exp(I * (g.theta - g.alpha));
    if (tt == 0.0) return phase;
    using special::bessel_j;
    using special::struve_h;
    const double re = bessel_j(1, tt) - tt * bessel_j(2, tt);
    const double im = tt * struve_h(0, tt) - struve_h(1, tt);
    return phase * (2.0 / tt) * Complex(re, im);
}

/// Machine state in the N3 = 1 sector. Column x-1 holds phi(x); basis index 2(x-1) + zeta.
class MachineState {
public:
    using Amplitudes = Eigen::Matrix<Complex, 2, Eigen::Dynamic>;

    MachineState(ChainSpec spec, std::shared_ptr<const PrimitiveProgram> program, Amplitudes phi)
        : spec_(spec), program_(std::move(program)), phi_(std::move(phi)) {
        require(program_ != nullptr, "machine state needs a program");
        require(program_->sites() == spec_.sites(), "program and chain lengths differ");
        require(phi_.cols() == spec_.sites(), "machine amplitudes must have s columns");
        require(std::abs(phi_.squaredNorm() - 1.0) <= 1e-12, "machine state is not normalized");
    }

    /// phi(x) = psi0(x) |R(x)>. Equals |R(1)> (x) psi0 whenever W_x = I on the support of psi0
    /// (the launch-pad programs).
    static MachineState product(std::shared_ptr<const PrimitiveProgram> program, const Vector2c& r1,
                                const CursorWavefunction& psi0) {
        require(std::abs(r1.squaredNorm() - 1.0) <= 1e-12, "register state must be normalized");
        Amplitudes phi(2, psi0.sites());
        for (int x = 1; x <= psi0.sites(); ++x) phi.col(x - 1) = psi0(x) * (program->accumulated(x) * r1);
        return {psi0.spec(), std::move(program), std::move(phi)};
    }

    [[nodiscard]] const ChainSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const PrimitiveProgram& program() const noexcept { return *program_; }
    [[nodiscard]] const std::shared_ptr<const PrimitiveProgram>& program_ptr() const noexcept { return program_; }
    [[nodiscard]] const Amplitudes& amplitudes() const noexcept { return phi_; }

    /// Flattened composite vector, register label fastest.
    [[nodiscard]] Eigen::VectorXcd flattened() const {
        return Eigen::Map<const Eigen::VectorXcd>(phi_.data(), phi_.size());
    }

    /// Untwisted components w^zeta(x) = (W_x^dagger phi(x))_zeta.
    [[nodiscard]] std::vector<Eigen::VectorXcd> untwisted() const {
        std::vector<Eigen::VectorXcd> w(2, Eigen::VectorXcd(spec_.sites()));
        for (int x = 1; x <= spec_.sites(); ++x) {
            const Vector2c v = program_->accumulated(x).adjoint() * phi_.col(x - 1);
            w[0](x - 1) = v(0);
            w[1](x - 1) = v(1);
        }
        return w;
    }

    [[nodiscard]] Matrix2c register_density() const { return phi_ * phi_.adjoint(); }

    [[nodiscard]] std::vector<double> cursor_distribution() const {
        std::vector<double> p(static_cast<std::size_t>(spec_.sites()));
        for (int x = 0; x < spec_.sites(); ++x) p[static_cast<std::size_t>(x)] = phi_.col(x).squaredNorm();
        return p;
    }

    /// Reduced cursor density operator (s x s).
    [[nodiscard]] Eigen::MatrixXcd cursor_density() const { return phi_.transpose() * phi_.conjugate(); }

private:
    ChainSpec spec_;
    std::shared_ptr<const PrimitiveProgram> program_;
    Amplitudes phi_;
};

/// Evolves one machine state to many times; O(s^2) per time.
class MachineEvolver {
public:
    explicit MachineEvolver(const MachineState& initial)
        : spec_(initial.spec()), program_(initial.program_ptr()), basis_(initial.spec()) {
        for (const auto& w : initial.untwisted()) coeffs_.push_back(basis_.coefficients(w));
    }

    [[nodiscard]] MachineState at(double t) const {
        MachineState::Amplitudes phi(2, spec_.sites());
        const Eigen::VectorXcd w0 = basis_.evolve_coefficients(coeffs_[0], t);
        const Eigen::VectorXcd w1 = basis_.evolve_coefficients(coeffs_[1], t);
        for (int x = 1; x <= spec_.sites(); ++x) {
            phi.col(x - 1) = program_->accumulated(x) * Vector2c(w0(x - 1), w1(x - 1));
        }
        const double drift = std::abs(phi.squaredNorm() - 1.0);
        if (drift > 1e-9) {
            throw normalization_error("normalization drift " + std::to_string(drift) +
                                      " after propagation exceeds 1e-9");
        }
        phi /= phi.norm();
        return {spec_, program_, std::move(phi)};
    }

private:
    ChainSpec spec_;
    std::shared_ptr<const PrimitiveProgram> program_;
    SineBasis basis_;
    std::vector<Eigen::VectorXcd> coeffs_;
};

inline MachineState evolve(const MachineState& state, double t) { return MachineEvolver(state).at(t); }

/// rho_r(t) = sum_x |psi(t,x)|^2 |R(x)><R(x)|.
inline Matrix2c register_density(const PrimitiveProgram& program, const Vector2c& r1,
                                 const CursorWavefunction& psi0, double t) {
    require(program.sites() == psi0.sites(), "program and chain lengths differ");
    const auto psi_t = propagate(psi0, t);
    const auto seq = register_state_sequence(program, r1);
    Matrix2c rho = Matrix2c::Zero();
    for (int x = 1; x <= psi0.sites(); ++x) {
        rho += std::norm(psi_t(x)) * seq[static_cast<std::size_t>(x - 1)] *
               seq[static_cast<std::size_t>(x - 1)].adjoint();
    }
    return rho;
}

/// Collapse after the clock reads x0: cursor at |C(x0)>, register at phi(x0) normalized.
inline std::pair<MachineState, double> measure_clock(const MachineState& state, int x0) {
    require_index(x0, 1, state.spec().sites(), "clock reading x0");
    const double prob = state.amplitudes().col(x0 - 1).squaredNorm();
    require(prob > 1e-14, "clock reading has zero probability");
    MachineState::Amplitudes phi = MachineState::Amplitudes::Zero(2, state.spec().sites());
    phi.col(x0 - 1) = state.amplitudes().col(x0 - 1) / std::sqrt(prob);
    return {MachineState(state.spec(), state.program_ptr(), std::move(phi)), prob};
}

/// Projects with (I +- sigma_3)/2 on the register and renormalizes.
inline std::pair<MachineState, double> measure_register_sigma3(const MachineState& state, int outcome) {
    require(outcome == 1 || outcome == -1, "sigma_3 outcome must be +1 or -1");
    const int row = outcome == 1 ? 0 : 1;
    MachineState::Amplitudes phi = MachineState::Amplitudes::Zero(2, state.spec().sites());
    phi.row(row) = state.amplitudes().row(row);
    const double prob = phi.squaredNorm();
    require(prob > 1e-14, "sigma_3 outcome has zero probability");
    phi /= std::sqrt(prob);
    return {MachineState(state.spec(), state.program_ptr(), std::move(phi)), prob};
}

/// Asymptotic speed law for further evolution from this machine state, taken on an unbounded chain.
inline SpeedLaw machine_speed_law(const MachineState& state) {
    auto w = state.untwisted();
    int support = 0;
    for (const auto& c : w) {
        for (int x = static_cast<int>(c.size()); x >= 1; --x) {
            if (std::abs(c(x - 1)) > 0.0) {
                support = std::max(support, x);
                break;
            }
        }
    }
    require(support >= 1, "machine state has no cursor support");
    std::vector<Eigen::VectorXcd> comps;
    for (auto& c : w) {
        if (c.squaredNorm() > 0.0) comps.emplace_back(c.head(support));
    }
    // Rounding of the input norm (<= 1e-12) is absorbed here.
    double total = 0.0;
    for (const auto& c : comps) total += c.squaredNorm();
    for (auto& c : comps) c /= std::sqrt(total);
    return law_general_components(std::move(comps));
}

/// Register observables along a time grid.
struct RegisterTrajectory {
    std::vector<double> t;
    std::vector<double> s1, s2, s3;
    std::vector<double> r;
    std::vector<double> gamma;          // unwrapped polar angle in the 1-3 plane
    std::vector<bool> gamma_flagged;    // r < 1e-12, gamma carried over
    std::vector<double> entropy;        // nats
    std::vector<double> p_success;      // Tr(rho (I + sigma_3)/2)
    std::vector<double> lambda1, lambda2;

    [[nodiscard]] std::size_t size() const noexcept { return t.size(); }
    [[nodiscard]] Matrix2c density(std::size_t i) const { return density_from_bloch({s1[i], s2[i], s3[i]}); }
};

inline RegisterTrajectory register_trajectory(const MachineState& initial, const std::vector<double>& times) {
    MachineEvolver evolver(initial);
    RegisterTrajectory tr;
    std::optional<double> prev;
    for (double t : times) {
        const Matrix2c rho = evolver.at(t).register_density();
        const BlochVector b = bloch(rho);
        const double rr = b.norm();
        tr.t.push_back(t);
        tr.s1.push_back(b.s1);
        tr.s2.push_back(b.s2);
        tr.s3.push_back(b.s3);
        tr.r.push_back(rr);
        const double r13 = std::hypot(b.s1, b.s3);
        double g = prev.value_or(0.0);
        const bool flagged = r13 < 1e-12;
        if (!flagged) {
            g = std::atan2(b.s1, b.s3);
            if (prev) g += 2.0 * pi * std::round((*prev - g) / (2.0 * pi));
        }
        prev = g;
        tr.gamma.push_back(g);
        tr.gamma_flagged.push_back(flagged);
        tr.entropy.push_back(entropy_from_radius(rr));
        tr.p_success.push_back(success_probability(rho));
        tr.lambda1.push_back((1.0 + rr) / 2.0);
        tr.lambda2.push_back((1.0 - rr) / 2.0);
    }
    return tr;
}

inline RegisterTrajectory register_trajectory(std::shared_ptr<const PrimitiveProgram> program, const Vector2c& r1,
                                              const CursorWavefunction& psi0, const std::vector<double>& times) {
    return register_trajectory(MachineState::product(std::move(program), r1, psi0), times);
}

struct LindbladSample {
    double t = 0.0;
    double dgamma = 0.0;   // d gamma / dt
    double dlog_r = 0.0;   // d ln r / dt
    double residual = 0.0; // max entry of |d rho/dt - rhs|
    bool flagged = false;  // r too small for ln r
};

/// Right-hand side -(i/2) g' [sigma_2, rho] + (1/4) l' [sigma_2, [sigma_2, rho]].
inline Matrix2c lindblad_rhs(const Matrix2c& rho, double dgamma, double dlog_r) {
    const Matrix2c s2 = pauli_y();
    const Matrix2c c1 = s2 * rho - rho * s2;
    const Matrix2c c2 = s2 * c1 - c1 * s2;
    return -0.5 * I * dgamma * c1 + 0.25 * dlog_r * c2;
}

/// Central differences at interior sample i of a uniform grid.
inline LindbladSample lindblad_coefficients(const RegisterTrajectory& tr, std::size_t i) {
    require(i >= 1 && i + 1 < tr.size(), "central differences need interior samples");
    const double h2 = tr.t[i + 1] - tr.t[i - 1];
    require(h2 > 0.0, "trajectory time grid must increase");
    LindbladSample out;
    out.t = tr.t[i];
    out.dgamma = (tr.gamma[i + 1] - tr.gamma[i - 1]) / h2;
    const double rmin = std::min({tr.r[i - 1], tr.r[i], tr.r[i + 1]});
    out.flagged = rmin < 1e-12;
    out.dlog_r = out.flagged ? 0.0 : (std::log(tr.r[i + 1]) - std::log(tr.r[i - 1])) / h2;
    const Matrix2c drho = (tr.density(i + 1) - tr.density(i - 1)) / h2;
    out.residual = (drho - lindblad_rhs(tr.density(i), out.dgamma, out.dlog_r)).cwiseAbs().maxCoeff();
    return out;
}

inline std::vector<LindbladSample> lindblad_coefficients(const RegisterTrajectory& tr) {
    std::vector<LindbladSample> out;
    for (std::size_t i = 1; i + 1 < tr.size(); ++i) out.push_back(lindblad_coefficients(tr, i));
    return out;
}

}  // namespace qwclock
