#pragma once

// N3 = n sectors of the chain. Excitations are hard-core and never pass each
// other on an open nearest-neighbour chain, so the free eigenstates are plain
// determinants of single-site modes without any string sign.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "core.hpp"
#include "quadrature.hpp"
#include "register.hpp"

namespace qwclock {

inline constexpr int max_sector_sites = 24;
inline constexpr int max_sector_excitations = 4;

/// Strictly increasing 1-based labels (sites or momenta).
class OccupationSet {
public:
    OccupationSet() = default;
    OccupationSet(std::vector<int> labels, int sites) : labels_(std::move(labels)) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            require_index(labels_[i], 1, sites, "occupied label");
            require(i == 0 || labels_[i] > labels_[i - 1], "occupation labels must be strictly increasing");
        }
    }
    OccupationSet(std::initializer_list<int> labels, int sites) : OccupationSet(std::vector<int>(labels), sites) {}

    /// {1, ..., n}.
    static OccupationSet leftmost(int n, int sites) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return {std::move(v), sites};
    }

    [[nodiscard]] int size() const noexcept { return static_cast<int>(labels_.size()); }
    [[nodiscard]] int operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::vector<int>& labels() const noexcept { return labels_; }
    bool operator==(const OccupationSet&) const = default;

    /// Number of labels strictly greater than x0.
    [[nodiscard]] int count_past(int x0) const {
        return static_cast<int>(std::count_if(labels_.begin(), labels_.end(), [x0](int x) { return x > x0; }));
    }

    /// Bit x-1 set for every occupied site x.
    [[nodiscard]] std::uint64_t mask() const {
        require(labels_.empty() || labels_.back() <= 64, "occupation masks need sites <= 64");
        std::uint64_t m = 0;
        for (int x : labels_) m |= std::uint64_t{1} << (x - 1);
        return m;
    }

private:
    std::vector<int> labels_;
};

/// Lexicographically ordered subsets of size n of {1..s}.
class SectorBasis {
public:
    SectorBasis(int sites, int n) : sites_(sites), n_(n) {
        require(sites >= 2, "chain needs s >= 2");
        require(n >= 1 && n <= sites, "sector needs 1 <= n <= s");
        binom_.assign(static_cast<std::size_t>(sites + 1), std::vector<double>(static_cast<std::size_t>(n + 1), 0.0));
        for (int a = 0; a <= sites; ++a) {
            binom_[static_cast<std::size_t>(a)][0] = 1.0;
            for (int b = 1; b <= std::min(a, n); ++b) {
                binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    binom_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                    (b <= a - 1 ? binom_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] : 0.0);
            }
        }
        std::vector<int> cur(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            sets_.emplace_back(cur, sites);
            int i = n - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == sites - n + 1 + i) --i;
            if (i < 0) break;
            ++cur[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    [[nodiscard]] int sites() const noexcept { return sites_; }
    [[nodiscard]] int excitations() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
    [[nodiscard]] const OccupationSet& operator[](std::size_t i) const { return sets_[i]; }
    [[nodiscard]] const std::vector<OccupationSet>& sets() const noexcept { return sets_; }

    /// Position of M in the lexicographic order.
    [[nodiscard]] std::size_t rank(const OccupationSet& m) const {
        require(m.size() == n_, "occupation set size does not match the sector");
        double r = 0.0;
        int prev = 0;
        for (int i = 0; i < n_; ++i) {
            for (int y = prev + 1; y < m[i]; ++y) r += choose(sites_ - y, n_ - i - 1);
            prev = m[i];
        }
        return static_cast<std::size_t>(r);
    }

private:
    [[nodiscard]] double choose(int a, int b) const {
        if (b < 0 || a < b) return 0.0;
        return binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    int sites_;
    int n_;
    std::vector<std::vector<double>> binom_;
    std::vector<OccupationSet> sets_;
};

/// V(K, M) = det[v_{k_i}(x_j)].
inline double slater_amplitude(const ChainSpec& spec, const OccupationSet& k, const OccupationSet& m) {
    require(k.size() == m.size(), "momentum and site sets must have equal size");
    const int n = k.size();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = eigenfunction(spec, k[i], m[j]);
    }
    return a.partialPivLu().determinant();
}

/// Same determinant for an unordered momentum list (row order matters for the sign).
inline double slater_amplitude(const ChainSpec& spec, const std::vector<int>& k, const OccupationSet& m) {
    require(static_cast<int>(k.size()) == m.size(), "momentum and site sets must have equal size");
    const int n = m.size();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = eigenfunction(spec, k[static_cast<std::size_t>(i)], m[j]);
    }
    return a.partialPivLu().determinant();
}

/// E_K = sum_j e_{k_j}.
inline double sector_energy(const OccupationSet& k, const ChainSpec& spec) {
    double e = 0.0;
    for (int kk : k.labels()) e += eigenvalue(spec, kk);
    return e;
}

/// Amplitudes indexed by (register label zeta, occupation set); column = lexicographic rank.
class SectorState {
public:
    using Amplitudes = Eigen::Matrix<Complex, 2, Eigen::Dynamic>;

    SectorState(ChainSpec spec, int n, Amplitudes amplitudes)
        : spec_(spec), basis_(std::make_shared<SectorBasis>(spec.sites(), n)), amps_(std::move(amplitudes)) {
        check();
    }

    SectorState(ChainSpec spec, std::shared_ptr<const SectorBasis> basis, Amplitudes amplitudes)
        : spec_(spec), basis_(std::move(basis)), amps_(std::move(amplitudes)) {
        require(basis_->sites() == spec_.sites(), "sector basis belongs to another chain");
        check();
    }

    /// |R> (x) |M>.
    static SectorState product(const ChainSpec& spec, const Vector2c& r, const OccupationSet& m) {
        auto basis = std::make_shared<SectorBasis>(spec.sites(), m.size());
        Amplitudes a = Amplitudes::Zero(2, static_cast<Eigen::Index>(basis->size()));
        a.col(static_cast<Eigen::Index>(basis->rank(m))) = r;
        return {spec, std::move(basis), std::move(a)};
    }

    [[nodiscard]] const ChainSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] int excitations() const noexcept { return basis_->excitations(); }
    [[nodiscard]] const SectorBasis& basis() const noexcept { return *basis_; }
    [[nodiscard]] const std::shared_ptr<const SectorBasis>& basis_ptr() const noexcept { return basis_; }
    [[nodiscard]] const Amplitudes& amplitudes() const noexcept { return amps_; }

    [[nodiscard]] Complex amplitude(int zeta, const OccupationSet& m) const {
        require(zeta == 0 || zeta == 1, "register label must be 0 or 1");
        return amps_(zeta, static_cast<Eigen::Index>(basis_->rank(m)));
    }

    /// Flattened vector, register label fastest: index 2 * rank(M) + zeta.
    [[nodiscard]] Eigen::VectorXcd flattened() const {
        return Eigen::Map<const Eigen::VectorXcd>(amps_.data(), amps_.size());
    }

    [[nodiscard]] Matrix2c register_density() const { return amps_ * amps_.adjoint(); }

private:
    void check() const {
        if (spec_.sites() > max_sector_sites) throw resource_error("sector dynamics capped at s <= 24");
        if (basis_->excitations() > max_sector_excitations) throw resource_error("sector dynamics capped at n <= 4");
        require(amps_.cols() == static_cast<Eigen::Index>(basis_->size()), "amplitude table does not match the sector");
        require(std::abs(amps_.squaredNorm() - 1.0) <= 1e-12, "sector state is not normalized");
    }

    ChainSpec spec_;
    std::shared_ptr<const SectorBasis> basis_;
    Amplitudes amps_;
};

namespace detail {

/// G(t)(x, y) = sum_k v_k(x) v_k(y) exp(-i e_k t).
inline Eigen::MatrixXcd single_particle_propagator(const SineBasis& basis, double t) {
    const auto& v = basis.modes();
    const auto& e = basis.energies();
    Eigen::VectorXcd phase(e.size());
    for (Eigen::Index k = 0; k < e.size(); ++k) phase(k) = Complex(std::cos(e(k) * t), -std::sin(e(k) * t));
    return v.transpose().cast<Complex>() * phase.asDiagonal() * v.cast<Complex>();
}

/// Free evolution of independent register components: a(M) <- sum_{M'} det G[M, M'] a(M').
inline SectorState::Amplitudes free_sector_evolve(const SectorBasis& basis, const SineBasis& modes,
                                                  const SectorState::Amplitudes& a0, double t) {
    const Eigen::MatrixXcd g = single_particle_propagator(modes, t);
    const int n = basis.excitations();
    SectorState::Amplitudes out = SectorState::Amplitudes::Zero(2, a0.cols());
    Eigen::MatrixXcd minor(n, n);
    for (Eigen::Index src = 0; src < a0.cols(); ++src) {
        if (a0.col(src).squaredNorm() == 0.0) continue;
        const auto& ms = basis[static_cast<std::size_t>(src)];
        for (Eigen::Index dst = 0; dst < a0.cols(); ++dst) {
            const auto& md = basis[static_cast<std::size_t>(dst)];
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) minor(i, j) = g(md[i] - 1, ms[j] - 1);
            }
            out.col(dst) += minor.partialPivLu().determinant() * a0.col(src);
        }
    }
    return out;
}

inline void check_sector_drift(const SectorState::Amplitudes& a) {
    const double drift = std::abs(a.squaredNorm() - 1.0);
    if (drift > 1e-9) {
        throw normalization_error("normalization drift " + std::to_string(drift) +
                                  " after propagation exceeds 1e-9");
    }
}

}  // namespace detail

/// Evolution with every U_x = identity.
inline SectorState propagate_free_sector(const SectorState& state, double t) {
    const SineBasis modes(state.spec());
    auto a = detail::free_sector_evolve(state.basis(), modes, state.amplitudes(), t);
    detail::check_sector_drift(a);
    a /= a.norm();
    return {state.spec(), state.basis_ptr(), std::move(a)};
}

/// Integer power of a 2x2 unitary, negative powers through the adjoint.
inline Matrix2c unitary_power(const Matrix2c& g, int m) {
    Matrix2c out = Matrix2c::Identity();
    const Matrix2c base = m >= 0 ? g : Matrix2c(g.adjoint());
    for (int i = 0; i < std::abs(m); ++i) out = base * out;
    return out;
}

/// Evolution with a single active link U_{x0} = G. Each configuration M carries
/// G^{m(M)}, m(M) the number of excitations past x0.
class SingleLinkEvolver {
public:
    SingleLinkEvolver(const SectorState& initial, int x0, const Matrix2c& g)
        : spec_(initial.spec()), basis_(initial.basis_ptr()), modes_(initial.spec()), x0_(x0) {
        require(x0 >= initial.excitations(), "active link x0 must be >= n");
        require(x0 <= spec_.sites() - 1, "active link x0 must be <= s-1");
        require(unitarity_defect(g) <= 1e-12, "link operator is not unitary within 1e-12");
        const int n = initial.excitations();
        for (int m = 0; m <= n; ++m) powers_.push_back(unitary_power(g, m));
        untwisted_ = initial.amplitudes();
        for (Eigen::Index c = 0; c < untwisted_.cols(); ++c) {
            const int m = (*basis_)[static_cast<std::size_t>(c)].count_past(x0);
            untwisted_.col(c) = powers_[static_cast<std::size_t>(m)].adjoint() * initial.amplitudes().col(c);
        }
    }

    [[nodiscard]] SectorState at(double t) const {
        auto a = detail::free_sector_evolve(*basis_, modes_, untwisted_, t);
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            const int m = (*basis_)[static_cast<std::size_t>(c)].count_past(x0_);
            a.col(c) = powers_[static_cast<std::size_t>(m)] * a.col(c);
        }
        detail::check_sector_drift(a);
        a /= a.norm();
        return {spec_, basis_, std::move(a)};
    }

    [[nodiscard]] int link() const noexcept { return x0_; }

private:
    ChainSpec spec_;
    std::shared_ptr<const SectorBasis> basis_;
    SineBasis modes_;
    int x0_;
    std::vector<Matrix2c> powers_;
    SectorState::Amplitudes untwisted_;
};

inline SectorState propagate_single_link(const SectorState& state, int x0, const Matrix2c& g, double t) {
    return SingleLinkEvolver(state, x0, g).at(t);
}

/// P(exactly m excitations at sites > x0), m = 0..n.
inline std::vector<double> count_past_link_distribution(const SectorState& state, int x0) {
    require_index(x0, 0, state.spec().sites(), "link position x0");
    std::vector<double> p(static_cast<std::size_t>(state.excitations() + 1), 0.0);
    for (std::size_t c = 0; c < state.basis().size(); ++c) {
        const int m = state.basis()[c].count_past(x0);
        p[static_cast<std::size_t>(m)] += state.amplitudes().col(static_cast<Eigen::Index>(c)).squaredNorm();
    }
    return p;
}

/// Mean positions E(Q_i), i = 1..n, of the ordered excitations.
inline std::vector<double> ordered_position_means(const SectorState& state) {
    std::vector<double> q(static_cast<std::size_t>(state.excitations()), 0.0);
    for (std::size_t c = 0; c < state.basis().size(); ++c) {
        const double w = state.amplitudes().col(static_cast<Eigen::Index>(c)).squaredNorm();
        for (int i = 0; i < state.excitations(); ++i) q[static_cast<std::size_t>(i)] += w * state.basis()[c][i];
    }
    return q;
}

/// Asymptotic joint law of (V1, V2) from |{1,2}>, ordered support 0 < v1 < v2 < 1.
class JointSpeedLaw {
public:
    explicit JointSpeedLaw(int panels = 64) : panels_(std::max(panels, 8)) {}

    [[nodiscard]] double density(double v1, double v2) const {
        if (!(v1 > 0.0 && v1 < v2 && v2 < 1.0)) return 0.0;
        return 64.0 * v1 * v1 * v2 * v2 * (2.0 - v1 * v1 - v2 * v2) /
               (pi * pi * std::sqrt((1.0 - v1 * v1) * (1.0 - v2 * v2)));
    }

    /// Density in (p1, p2) = (arcsin v1, arcsin v2); bounded on the triangle.
    [[nodiscard]] static double momentum_density(double p1, double p2) {
        const double a = std::sin(p1);
        const double b = std::sin(p2);
        return 64.0 * a * a * b * b * (2.0 - a * a - b * b) / (pi * pi);
    }

    /// Integral over the ordered triangle.
    [[nodiscard]] double normalization() const {
        return integrate_gl(
            [this](double p2) { return integrate_gl([p2](double p1) { return momentum_density(p1, p2); }, 0.0, p2, inner(p2)); },
            0.0, pi / 2, panels_);
    }

    /// Integral over the full square, ignoring the ordering restriction.
    [[nodiscard]] double square_integral() const {
        return integrate_gl(
            [this](double p2) {
                return integrate_gl([p2](double p1) { return momentum_density(p1, p2); }, 0.0, pi / 2, panels_);
            },
            0.0, pi / 2, panels_);
    }

    /// E(V1 | V2 = v2).
    [[nodiscard]] double conditional_mean_v1(double v2) const {
        require(v2 > 0.0 && v2 < 1.0, "conditioning speed must lie in (0, 1)");
        const double a2 = std::asin(v2);
        const double num =
            integrate_gl([a2](double p1) { return std::sin(p1) * momentum_density(p1, a2); }, 0.0, a2, panels_);
        const double den = integrate_gl([a2](double p1) { return momentum_density(p1, a2); }, 0.0, a2, panels_);
        return num / den;
    }

    /// Marginal density of V2.
    [[nodiscard]] double marginal_v2(double v2) const {
        if (!(v2 > 0.0 && v2 < 1.0)) return 0.0;
        const double a2 = std::asin(v2);
        return integrate_gl([a2](double p1) { return momentum_density(p1, a2); }, 0.0, a2, panels_) /
               std::sqrt(1.0 - v2 * v2);
    }

    /// E(V1) and E(V2).
    [[nodiscard]] std::pair<double, double> means() const {
        const double e1 = integrate_gl(
            [this](double p2) {
                return integrate_gl([p2](double p1) { return std::sin(p1) * momentum_density(p1, p2); }, 0.0, p2,
                                    inner(p2));
            },
            0.0, pi / 2, panels_);
        const double e2 = integrate_gl(
            [this](double p2) {
                return std::sin(p2) *
                       integrate_gl([p2](double p1) { return momentum_density(p1, p2); }, 0.0, p2, inner(p2));
            },
            0.0, pi / 2, panels_);
        return {e1, e2};
    }

private:
    [[nodiscard]] int inner(double p2) const {
        return std::max(1, static_cast<int>(std::ceil(panels_ * p2 / (pi / 2))));
    }

    int panels_;
};

inline JointSpeedLaw joint_speed_law() { return JointSpeedLaw(); }

}  // namespace qwclock
