#include <gtest/gtest.h>

#include <qwclock/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <memory>

using namespace qwclock;

TEST(DenseHamiltonian, TwoSiteBlock) {
    const ChainSpec spec(2, 1.6);
    const auto h = DenseHamiltonian::sector(spec, PrimitiveProgram::identity(2), 1);
    ASSERT_EQ(h.dimension(), 4);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 2) = expected(2, 0) = expected(1, 3) = expected(3, 1) = -0.8;
    EXPECT_LE((h.matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(DenseHamiltonian, ToySpectrumIsDoubledChainSpectrum) {
    const ChainSpec spec(4);
    const DenseEvolver ev(DenseHamiltonian::sector(spec, PrimitiveProgram::toy(4, grover_params(3).alpha), 1));
    std::vector<double> expected;
    for (int k = 1; k <= 4; ++k) {
        expected.push_back(-std::cos(k * pi / 5.0));
        expected.push_back(-std::cos(k * pi / 5.0));
    }
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(ev.eigenvalues()(i), expected[static_cast<std::size_t>(i)], 1e-13);
}

TEST(DenseHamiltonian, LongChainSingleExcitationSector) {
    const ChainSpec spec(100);
    const DenseEvolver ev(DenseHamiltonian::sector(spec, PrimitiveProgram::identity(100), 1));
    for (int k = 1; k <= 100; ++k) {
        const double e = eigenvalue(spec, k);
        const auto nearest = (ev.eigenvalues().array() - e).abs().minCoeff();
        EXPECT_LE(nearest, 1e-12) << k;
    }
}

TEST(DenseHamiltonian, HermitianAndConservesExcitations) {
    const ChainSpec spec(6);
    const auto h = DenseHamiltonian::full(spec, PrimitiveProgram::alternating(6, grover_params(5)));
    EXPECT_LE(h.hermiticity_defect(), 1e-13);
    const Eigen::MatrixXcd n = h.number_operator();
    EXPECT_LE((h.matrix() * n - n * h.matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(DenseHamiltonian, FullSpaceRestrictsToSector) {
    const ChainSpec spec(6);
    const auto program = PrimitiveProgram::toy(6, 0.7);
    const auto full = DenseHamiltonian::full(spec, program);
    const auto sector = DenseHamiltonian::sector(spec, program, 2);
    for (std::size_t a = 0; a < sector.configurations(); ++a) {
        for (std::size_t b = 0; b < sector.configurations(); ++b) {
            for (int z = 0; z < 2; ++z) {
                for (int w = 0; w < 2; ++w) {
                    const Complex lhs = sector.matrix()(sector.index(a, z), sector.index(b, w));
                    const Complex rhs = full.matrix()(full.index(sector.configuration_mask(a), z),
                                                      full.index(sector.configuration_mask(b), w));
                    EXPECT_EQ(lhs, rhs);
                }
            }
        }
    }
}

TEST(DenseHamiltonian, RejectsOversizedSpaces) {
    EXPECT_THROW(DenseHamiltonian::full(ChainSpec(12), PrimitiveProgram::identity(12)), resource_error);
    EXPECT_THROW(DenseHamiltonian::sector(ChainSpec(24), PrimitiveProgram::identity(24), 4), resource_error);
    EXPECT_NO_THROW(DenseHamiltonian::full(ChainSpec(11), PrimitiveProgram::identity(11)));
}

TEST(DenseEvolver, IdentityUnitarityEnergyAndResidual) {
    const ChainSpec spec(7);
    const auto h = DenseHamiltonian::full(spec, PrimitiveProgram::alternating(7, grover_params(4)));
    const DenseEvolver ev(h);
    EXPECT_LE(ev.residual(), 1e-10 * ev.scale());

    Eigen::VectorXcd v0 = Eigen::VectorXcd::Zero(h.dimension());
    v0(h.index(0b0000101, 0)) = Complex(0.6, 0.0);
    v0(h.index(0b0000101, 1)) = Complex(0.0, 0.8);
    EXPECT_LE((ev.evolve(v0, 0.0) - v0).cwiseAbs().maxCoeff(), 1e-13);
    const double e0 = (v0.adjoint() * h.matrix() * v0)(0).real();
    for (double t : {0.3, 5.0, 50.0}) {
        const Eigen::VectorXcd v = ev.evolve(v0, t);
        EXPECT_NEAR(v.squaredNorm(), 1.0, 1e-11);
        EXPECT_NEAR((v.adjoint() * h.matrix() * v)(0).real(), e0, 1e-11);
    }
}

TEST(Oracle, ReproducesSingleExcitationMachine) {
    const int s = 8;
    const ChainSpec spec(s);
    const auto g = grover_params(4);
    auto program = std::make_shared<const PrimitiveProgram>(PrimitiveProgram::toy(s, g.alpha));
    const auto initial = MachineState::product(program, initial_register(g), launchpad_state(spec, 3, 1));
    const DenseEvolver oracle(DenseHamiltonian::full(spec, *program));
    const MachineEvolver fast(initial);
    for (double t : {1.0, 6.5, 20.0}) {
        EXPECT_LE((embed_full(fast.at(t)) - oracle.evolve(embed_full(initial), t)).cwiseAbs().maxCoeff(), 1e-10) << t;
    }
}

TEST(Oracle, RegisterMarginalMatchesClosedForm) {
    const int s = 9;
    const ChainSpec spec(s);
    const auto g = grover_params(7);
    const auto program = PrimitiveProgram::toy(s, g.alpha);
    const auto psi0 = CursorWavefunction::basis_state(spec, 1);
    const auto initial = MachineState::product(std::make_shared<const PrimitiveProgram>(program), initial_register(g), psi0);
    const DenseEvolver oracle(DenseHamiltonian::sector(spec, program, 1));
    const Eigen::VectorXcd v = oracle.evolve(initial.flattened(), 4.0);
    const Matrix2c rho = partial_trace(v, Subsystem::register_part);
    EXPECT_LE((rho - register_density(program, initial_register(g), psi0, 4.0)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(PartialTrace, ProductStateHasPureMarginals) {
    Eigen::VectorXcd cursor(3);
    cursor << Complex(0.6, 0.0), Complex(0.0, 0.48), Complex(0.64, 0.0);
    const Vector2c r(Complex(0.8, 0.0), Complex(0.0, -0.6));
    Eigen::VectorXcd psi(6);
    for (int c = 0; c < 3; ++c) {
        for (int z = 0; z < 2; ++z) psi(2 * c + z) = cursor(c) * r(z);
    }
    const Eigen::MatrixXcd reg = partial_trace(psi, Subsystem::register_part);
    const Eigen::MatrixXcd cur = partial_trace(psi, Subsystem::cursor_part);
    EXPECT_LE((reg - r * r.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((cur - cursor * cursor.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(von_neumann_entropy(reg), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(cur), 0.0, 1e-12);
}

TEST(PartialTrace, EntanglementEntropiesAgree) {
    const int s = 8;
    const ChainSpec spec(s);
    const auto g = grover_params(3);
    const auto program = PrimitiveProgram::alternating(s, g);
    const auto initial = MachineState::product(std::make_shared<const PrimitiveProgram>(program), initial_register(g),
                                               CursorWavefunction::basis_state(spec, 1));
    const DenseEvolver oracle(DenseHamiltonian::sector(spec, program, 1));
    for (double t : {2.0, 7.0}) {
        const Eigen::VectorXcd v = oracle.evolve(initial.flattened(), t);
        const double sr = von_neumann_entropy(partial_trace(v, Subsystem::register_part));
        EXPECT_GT(sr, 1e-3);
        EXPECT_NEAR(sr, von_neumann_entropy(partial_trace(v, Subsystem::cursor_part)), 1e-10);
    }
}

TEST(VonNeumann, MaximallyMixedQubit) {
    EXPECT_NEAR(von_neumann_entropy(Eigen::MatrixXcd::Identity(2, 2) / 2.0), std::log(2.0), 1e-15);
}
