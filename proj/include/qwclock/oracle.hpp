#pragma once

// Brute-force reference: dense composite Hamiltonian, exact eigendecomposition,
// partial traces. Small instances only.

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "core.hpp"
#include "multi.hpp"
#include "register.hpp"

namespace qwclock {

/// Largest dense dimension the oracle accepts.
inline constexpr std::size_t oracle_max_dimension = 4096;

inline constexpr int register_dimension = 2;

/// Dense H = -(lambda/2) sum_x U_x (x) tau+(x+1) tau-(x) + h.c. Basis index d * c + zeta,
/// with c the lexicographic rank (sector) or the occupation mask (full space, bit x-1 for site x).
class DenseHamiltonian {
public:
    /// Fixed-N3 sector.
    static DenseHamiltonian sector(const ChainSpec& spec, const PrimitiveProgram& program, int n) {
        require(program.sites() == spec.sites(), "program and chain lengths differ");
        require(n >= 1 && n <= spec.sites(), "sector needs 1 <= n <= s");
        double count = 1.0;
        for (int i = 0; i < n; ++i) count = count * (spec.sites() - i) / (i + 1);
        check_cap(register_dimension * count);
        DenseHamiltonian h(spec, static_cast<std::size_t>(count + 0.5), n);
        h.sector_basis_ = std::make_shared<SectorBasis>(spec.sites(), n);
        const SectorBasis& basis = *h.sector_basis_;
        h.fill(program, [&basis](std::size_t c, int x) -> std::optional<std::size_t> {
            std::vector<int> labels = basis[c].labels();
            const auto it = std::find(labels.begin(), labels.end(), x);
            if (it == labels.end() || std::find(labels.begin(), labels.end(), x + 1) != labels.end()) return std::nullopt;
            *it = x + 1;
            return basis.rank(OccupationSet(std::move(labels), basis.sites()));
        });
        return h;
    }

    /// All 2^s occupation patterns.
    static DenseHamiltonian full(const ChainSpec& spec, const PrimitiveProgram& program) {
        require(program.sites() == spec.sites(), "program and chain lengths differ");
        require(spec.sites() <= 30, "full space needs s <= 30");
        check_cap(register_dimension * std::ldexp(1.0, spec.sites()));
        DenseHamiltonian h(spec, std::size_t{1} << spec.sites(), -1);
        h.fill(program, [](std::size_t c, int x) -> std::optional<std::size_t> {
            const std::size_t here = std::size_t{1} << (x - 1);
            const std::size_t next = std::size_t{1} << x;
            if (!(c & here) || (c & next)) return std::nullopt;
            return (c & ~here) | next;
        });
        return h;
    }

    [[nodiscard]] const ChainSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] const Eigen::MatrixXcd& matrix() const noexcept { return h_; }
    [[nodiscard]] Eigen::Index dimension() const noexcept { return h_.rows(); }
    /// Excitation number of the sector, or -1 for the full space.
    [[nodiscard]] int sector_n() const noexcept { return n_; }
    [[nodiscard]] std::size_t configurations() const noexcept { return configurations_; }
    /// Occupation mask of configuration c (bit x-1 for site x).
    [[nodiscard]] std::uint64_t configuration_mask(std::size_t c) const {
        require(c < configurations_, "configuration index out of range");
        return sector_basis_ ? (*sector_basis_)[c].mask() : static_cast<std::uint64_t>(c);
    }
    [[nodiscard]] Eigen::Index index(std::size_t configuration, int zeta) const {
        return static_cast<Eigen::Index>(register_dimension * configuration + static_cast<std::size_t>(zeta));
    }

    /// N3 on the same basis (diagonal).
    [[nodiscard]] Eigen::MatrixXcd number_operator() const {
        Eigen::VectorXcd diag(h_.rows());
        for (std::size_t c = 0; c < configurations_; ++c) {
            const int count = sector_basis_ ? n_ : std::popcount(static_cast<std::uint64_t>(c));
            for (int z = 0; z < register_dimension; ++z) diag(index(c, z)) = static_cast<double>(count);
        }
        return diag.asDiagonal();
    }

    [[nodiscard]] double hermiticity_defect() const { return (h_ - h_.adjoint()).cwiseAbs().maxCoeff(); }

private:
    DenseHamiltonian(const ChainSpec& spec, std::size_t configurations, int n)
        : spec_(spec), configurations_(configurations), n_(n) {
        const auto dim = static_cast<Eigen::Index>(register_dimension * configurations_);
        h_ = Eigen::MatrixXcd::Zero(dim, dim);
    }

    static void check_cap(double dim) {
        if (dim > static_cast<double>(oracle_max_dimension)) {
            throw resource_error("oracle dimension " + std::to_string(static_cast<long long>(dim)) +
                                 " exceeds the dense cap " + std::to_string(oracle_max_dimension));
        }
    }

    // hop(c, x): configuration reached by moving the excitation at x to x+1, if allowed.
    template <class Hop>
    void fill(const PrimitiveProgram& program, Hop&& hop_target) {
        const double hop = -spec_.lambda() / 2.0;
        for (std::size_t c = 0; c < configurations_; ++c) {
            for (int x = 1; x < spec_.sites(); ++x) {
                const auto target = hop_target(c, x);
                if (!target) continue;
                const std::size_t c2 = *target;
                const Matrix2c& u = program.link(x);
                for (int a = 0; a < register_dimension; ++a) {
                    for (int b = 0; b < register_dimension; ++b) {
                        h_(index(c2, a), index(c, b)) += hop * u(a, b);
                        h_(index(c, b), index(c2, a)) += hop * std::conj(u(a, b));
                    }
                }
            }
        }
    }

    ChainSpec spec_;
    std::size_t configurations_;
    int n_;
    std::shared_ptr<SectorBasis> sector_basis_;
    Eigen::MatrixXcd h_;
};

/// Exact evolution exp(-iHt) through a single eigendecomposition.
class DenseEvolver {
public:
    explicit DenseEvolver(const DenseHamiltonian& h) : hnorm_(h.matrix().cwiseAbs().maxCoeff()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
        require(solver.info() == Eigen::Success, "dense eigendecomposition failed");
        values_ = solver.eigenvalues();
        vectors_ = solver.eigenvectors();
        const Eigen::MatrixXcd r = h.matrix() * vectors_ - vectors_ * values_.cast<Complex>().asDiagonal();
        residual_ = r.colwise().norm().maxCoeff();
    }

    [[nodiscard]] Eigen::VectorXcd evolve(const Eigen::VectorXcd& v0, double t) const {
        require(v0.size() == vectors_.rows(), "state dimension does not match the Hamiltonian");
        require(std::abs(v0.squaredNorm() - 1.0) <= 1e-10, "initial vector must be normalized");
        Eigen::VectorXcd c = vectors_.adjoint() * v0;
        for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= Complex(std::cos(values_(k) * t), -std::sin(values_(k) * t));
        return vectors_ * c;
    }

    [[nodiscard]] const Eigen::VectorXd& eigenvalues() const noexcept { return values_; }
    /// max_k ||H v_k - e_k v_k||.
    [[nodiscard]] double residual() const noexcept { return residual_; }
    /// Max-entry norm of H, the scale for residual().
    [[nodiscard]] double scale() const noexcept { return hnorm_; }

private:
    Eigen::VectorXd values_;
    Eigen::MatrixXcd vectors_;
    double residual_ = 0.0;
    double hnorm_ = 0.0;
};

enum class Subsystem { register_part, cursor_part };

/// Reduced density operator of a composite vector with register label fastest.
inline Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd& psi, Subsystem keep, int d = register_dimension) {
    require(d >= 1 && psi.size() % d == 0, "composite vector length must be a multiple of d");
    require(std::abs(psi.squaredNorm() - 1.0) <= 1e-10, "composite vector must be normalized");
    const Eigen::Map<const Eigen::MatrixXcd> m(psi.data(), d, psi.size() / d);
    if (keep == Subsystem::register_part) return m * m.adjoint();
    return m.transpose() * m.conjugate();
}

/// -Tr rho ln rho in nats.
inline double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double l = solver.eigenvalues()(i);
        if (l > 1e-300) s -= l * std::log(l);
    }
    return s;
}

/// Embeds an N3 = 1 machine state into the full 2^s space.
inline Eigen::VectorXcd embed_full(const MachineState& state) {
    const int s = state.spec().sites();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(register_dimension * (Eigen::Index{1} << s));
    for (int x = 1; x <= s; ++x) {
        const auto mask = std::size_t{1} << (x - 1);
        for (int z = 0; z < register_dimension; ++z) v(register_dimension * static_cast<Eigen::Index>(mask) + z) = state.amplitudes()(z, x - 1);
    }
    return v;
}

/// Embeds a sector state into the full 2^s space.
inline Eigen::VectorXcd embed_full(const SectorState& state) {
    const int s = state.spec().sites();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(register_dimension * (Eigen::Index{1} << s));
    for (std::size_t c = 0; c < state.basis().size(); ++c) {
        const auto mask = static_cast<Eigen::Index>(state.basis()[c].mask());
        for (int z = 0; z < register_dimension; ++z) v(register_dimension * mask + z) = state.amplitudes()(z, static_cast<Eigen::Index>(c));
    }
    return v;
}

}  // namespace qwclock
