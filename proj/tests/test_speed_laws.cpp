#include <gtest/gtest.h>

#include <qwclock/series_tools.hpp>
#include <qwclock/speed_laws.hpp>

#include <cmath>
#include <vector>

using namespace qwclock;

namespace {

void expect_valid_law(const SpeedLaw& law, double tol = 1e-8) {
    EXPECT_NEAR(law.normalization(), 1.0, tol);
    EXPECT_EQ(law.cdf(0.0), 0.0);
    EXPECT_EQ(law.cdf(-0.5), 0.0);
    EXPECT_EQ(law.cdf(1.0), 1.0);
    EXPECT_EQ(law.cdf(3.0), 1.0);
    EXPECT_EQ(law.density(-0.1), 0.0);
    EXPECT_EQ(law.density(1.2), 0.0);
    double prev = 0.0;
    for (int i = 1; i < 50; ++i) {
        const double v = i / 50.0;
        EXPECT_GE(law.density(v), 0.0);
        const double c = law.cdf(v);
        EXPECT_GE(c, prev - 1e-12);
        prev = c;
    }
}

}  // namespace

TEST(LocalizedLaw, MomentsAndNormalization) {
    const auto law = law_localized();
    EXPECT_NEAR(law.mean(), 0.84882636315677518, 1e-12);
    EXPECT_NEAR(law.variance(), 0.75 - std::pow(8.0 / (3.0 * pi), 2), 1e-12);
    EXPECT_NEAR(law.variance(), 0.0294939, 1e-7);
    EXPECT_NEAR(law.normalization(), 1.0, 1e-10);
    EXPECT_NEAR(law.second_moment(), localized_second_moment(), 1e-12);
    expect_valid_law(law);
    EXPECT_NEAR(law.density(0.5), 4 * 0.25 / (pi * std::sqrt(0.75)), 1e-14);
}

TEST(LocalizedLaw, ClosedCdfMatchesQuadrature) {
    const auto law = law_localized();
    for (double v : {0.1, 0.4, 0.77, 0.999}) {
        const double a = std::asin(v);
        const double q = integrate_gl([](double p) { return 4.0 / pi * std::sin(p) * std::sin(p); }, 0.0, a, 64);
        EXPECT_NEAR(law.cdf(v), q, 1e-13);
    }
}

TEST(ShiftedLaw, MeansAndLimits) {
    EXPECT_NEAR(law_shifted(1).mean(), 8.0 / (3.0 * pi), 1e-12);
    EXPECT_NEAR(shifted_mean(1), 8.0 / (3.0 * pi), 1e-15);
    EXPECT_NEAR(law_shifted(2).mean(), 0.6790610905254202, 1e-12);
    EXPECT_NEAR(shifted_mean(2), 0.6790610905254202, 1e-15);
    for (int x0 : {3, 10, 50}) {
        const auto law = law_shifted(x0);
        EXPECT_NEAR(law.mean(), shifted_mean(x0), 1e-10) << x0;
        expect_valid_law(law);
    }
    EXPECT_NEAR(shifted_mean(100000) / localized_mean(), 0.75, 1e-9);
    EXPECT_THROW(law_shifted(0), std::domain_error);
}

TEST(ShiftedLaw, CdfDerivativeMatchesGeneralDensity) {
    const ChainSpec spec(60);
    for (int x0 : {1, 2, 7}) {
        const auto shifted = law_shifted(x0);
        const auto general = law_general(CursorWavefunction::basis_state(spec, x0));
        for (double v = 0.05; v < 0.96; v += 0.05) {
            const double h = 1e-6;
            const double deriv = (shifted.cdf(v + h) - shifted.cdf(v - h)) / (2 * h);
            EXPECT_NEAR(deriv, general.density(v), 1e-6) << "x0=" << x0 << " v=" << v;
            EXPECT_NEAR(shifted.density(v), general.density(v), 1e-12);
        }
    }
}

TEST(GeneralLaw, LocalizedStateReducesToLocalizedLaw) {
    const auto general = law_general(CursorWavefunction::basis_state(ChainSpec(10), 1));
    const auto localized = law_localized();
    for (double v = 0.01; v < 1.0; v += 0.0137) EXPECT_NEAR(general.density(v), localized.density(v), 1e-12);
    EXPECT_NEAR(general.mean(), localized.mean(), 1e-12);
}

TEST(GeneralLaw, PadEigenstateMatchesClosedForm) {
    const ChainSpec spec(30);
    for (int eps : {4, 9}) {
        for (int k = 1; k <= eps; ++k) {
            const auto general = law_general(launchpad_state(spec, eps, k));
            const auto pad = law_pad_ck(eps, k);
            for (int i = 1; i <= 100; ++i) {
                const double v = (i - 0.5) / 100.0;
                EXPECT_NEAR(general.density(v), pad.density(v), 1e-10 * std::max(1.0, pad.density(v)))
                    << "eps=" << eps << " k=" << k << " v=" << v;
            }
        }
    }
}

TEST(GeneralLaw, GammaStateNormalizes) {
    const auto law = law_general(gamma_state(ChainSpec(20), 5));
    EXPECT_NEAR(law.normalization(), 1.0, 1e-8);
    expect_valid_law(law);
}

TEST(GeneralLaw, RejectsStateOutsideThePad) {
    const ChainSpec spec(12);
    EXPECT_THROW(law_general(launchpad_state(spec, 9, 2), 5), std::domain_error);
    EXPECT_THROW(law_general(launchpad_state(spec, 9, 2), 13), std::domain_error);
    EXPECT_NO_THROW(law_general(launchpad_state(spec, 9, 2), 9));
    std::vector<Eigen::VectorXcd> half{Eigen::VectorXcd::Constant(2, std::sqrt(0.25))};
    EXPECT_THROW(law_general_components(half), std::domain_error);
}

TEST(MomentumProfile, ParsevalHolds) {
    const ChainSpec spec(40);
    for (const auto& psi : {CursorWavefunction::basis_state(spec, 1), gamma_state(spec, 5), launchpad_state(spec, 17, 6)}) {
        EXPECT_NEAR(momentum_profile(psi).parseval_norm(), 1.0, 1e-8);
    }
}

TEST(PadLaw, OrderedMeansAndNormalization) {
    // Pad eigenstates of length 9; the ticks of the speed distribution plot.
    const double reference[] = {0.27847, 0.55631, 0.77734, 0.91932, 0.96825};
    double prev = 0.0;
    for (int k = 1; k <= 9; ++k) {
        const auto law = law_pad_ck(9, k);
        EXPECT_NEAR(law.normalization(), 1.0, 1e-8) << k;
        expect_valid_law(law);
        if (k <= 5) {
            EXPECT_GT(law.mean(), prev);
            EXPECT_NEAR(law.mean(), reference[k - 1], 1e-5);
            prev = law.mean();
        } else {
            EXPECT_NEAR(law.mean(), law_pad_ck(9, 10 - k).mean(), 1e-10);
        }
    }
}

TEST(PadLaw, FlatModeEqualsFlatLaw) {
    const auto ck = law_pad_ck(9, 5);
    const auto cn = law_pad_cn(5);
    for (double v = 0.001; v < 1.0; v += 0.00731) EXPECT_NEAR(ck.density(v), cn.density(v), 1e-9 * std::max(1.0, cn.density(v)));
}

TEST(PadLaw, SingularPointsAreContinuous) {
    for (int k : {1, 3, 4, 7}) {
        const auto law = law_pad_ck(9, k);
        const double vstar = std::sin(k * pi / 10.0);
        const double at = law.density(vstar);
        EXPECT_TRUE(std::isfinite(at));
        EXPECT_NEAR(at, law.density(vstar - 1e-7), 1e-4 * std::max(1.0, at));
        EXPECT_NEAR(at, law.density(vstar + 1e-7), 1e-4 * std::max(1.0, at));
    }
}

TEST(FlatLaw, MomentsForFivePeriods) {
    const auto law = law_pad_cn(5);
    EXPECT_NEAR(law.second_moment(), 0.95, 1e-10);
    EXPECT_NEAR(pad_cn_second_moment(5), 0.95, 1e-15);
    EXPECT_NEAR(pad_cn_mean(5), 0.96824762289076321, 1e-15);
    EXPECT_NEAR(law.mean(), pad_cn_mean(5), 1e-8);
    EXPECT_NEAR(pad_cn_mean_approx(5), 1.0 - 1.0 / (10.0 * pi), 1e-15);
    EXPECT_NEAR(pad_cn_mean_approx(5), 0.96817, 1e-5);
    expect_valid_law(law);
}

TEST(FlatLaw, SingleSitePadIsLocalized) {
    const auto cn = law_pad_cn(1);
    const auto loc = law_localized();
    for (double v = 0.01; v < 1.0; v += 0.0173) EXPECT_NEAR(cn.density(v), loc.density(v), 1e-12 * std::max(1.0, loc.density(v)));
}

TEST(FlatLaw, ExactMomentsForManyN) {
    for (int n : {2, 3, 10, 25}) {
        const auto law = law_pad_cn(n);
        EXPECT_NEAR(law.mean(), pad_cn_mean(n), 1e-8) << n;
        EXPECT_NEAR(law.second_moment(), pad_cn_second_moment(n), 1e-10) << n;
        EXPECT_NEAR(law.normalization(), 1.0, 1e-10) << n;
    }
    EXPECT_NEAR(law_pad_cn(100).variance() / pad_cn_asymptotic_variance(100), 1.0, 0.01);
}

TEST(UncertaintyProduct, PositionTimesVelocityVariance) {
    // var(Q_n) = (n^2 - 1)/3 at t = 0.
    for (int n : {5, 8, 12, 20}) {
        const double var_q = (n * n - 1.0) / 3.0;
        const double target = n * (4.0 - pi) / (12.0 * pi);
        EXPECT_NEAR(var_q * pad_cn_asymptotic_variance(n) / target, 1.0, 0.05) << n;
        if (n >= 10) EXPECT_NEAR(var_q * law_pad_cn(n).variance() / target, 1.0, 0.05) << n;
    }
}

TEST(EmpiricalSpeed, MeanAtSixtyNearLocalized) {
    const ChainSpec spec(129);
    const auto emp = empirical_speed(spec, CursorWavefunction::basis_state(spec, 1), 60.0);
    EXPECT_NEAR(emp.mean() / localized_mean(), 1.0, 0.03);
    double total = 0.0;
    for (double p : emp.masses()) total += p;
    EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(EmpiricalSpeed, FlatStateVarianceGrowth) {
    const ChainSpec spec(50);
    const auto psi0 = flat_state(spec, 5);
    CursorPropagator prop(psi0);
    std::vector<double> ts, var;
    for (double t = 9.0; t <= 41.0 + 1e-9; t += 0.1) {
        ts.push_back(t);
        var.push_back(position_statistics(prop.at(t)).variance);
    }
    const auto fit = fit_const_plus_quadratic(ts, var);
    EXPECT_NEAR(fit.slope / pad_cn_asymptotic_variance(5), 1.0, 0.10);
}

TEST(EmpiricalSpeed, SmallTimePutsMassOnInitialSupport) {
    const ChainSpec spec(10);
    const auto emp = empirical_speed(spec, CursorWavefunction::basis_state(spec, 3), 1e-6);
    EXPECT_NEAR(emp.masses()[2], 1.0, 1e-10);
    EXPECT_NEAR(emp.mean(), 3.0 / 1e-6, 1e-2);
    EXPECT_THROW(empirical_speed(spec, CursorWavefunction::basis_state(spec, 3), 0.0), std::domain_error);
}

TEST(EmpiricalSpeed, CharacteristicFunctionApproachesLimit) {
    const ChainSpec spec(600);
    const auto emp = empirical_speed(spec, CursorWavefunction::basis_state(spec, 1), 300.0);
    const auto law = law_localized();
    for (double z : {0.5, 2.0, 5.0}) EXPECT_LT(std::abs(emp.characteristic(z) - law.characteristic(z)), 0.02) << z;
}

TEST(EmpiricalSpeed, ConvergesInLaw) {
    // The sup distance shrinks roughly like t^{-1/3}, driven by the Airy edge at v = 1.
    const ChainSpec spec(3000);
    const auto psi0 = CursorWavefunction::basis_state(spec, 1);
    CursorPropagator prop(psi0);
    const auto law = law_localized();
    double prev = 1.0;
    for (double t : {80.0, 160.0, 400.0, 1200.0}) {
        const EmpiricalSpeed emp(t, site_probabilities(prop.amplitudes_at(t)));
        const double d = emp.sup_cdf_distance(law);
        EXPECT_LT(d, prev) << t;
        prev = d;
    }
    EXPECT_LT(prev, 0.05);
}
