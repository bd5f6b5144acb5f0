#include <gtest/gtest.h>

#include <qwclock/special_functions.hpp>

#include <cmath>

using namespace qwclock::special;

namespace {

struct Reference {
    double x;
    double j1, j2, h0, h1;
};

// mpmath at 30 digits.
constexpr Reference table[] = {
    {0.3, 0.148318816273104, 0.011165861949063963, 0.18908293527227688, 0.018984295855444054},
    {2.5, 0.49709410246427404, 0.44605905843961723, 0.72995773773737152, 0.86315420665653532},
    {7.0, -0.0046828234823458327, -0.30141722008594012, 0.063382961188815947, 0.34630573167866373},
    {17.3, -0.14142333549201399, 0.11735112852177414, -0.10082590736501327, 0.76851186155196146},
    {29.5, -0.064304378099192397, 0.12878823944421568, -0.040483602516701392, 0.76946456409921497},
    {35.0, 0.04399094217962564, 0.12935945088086261, 0.06397238222066918, 0.76465093797418636},
    {48.2, -0.033799791126495722, 0.10878286159465169, -0.019452940893697788, 0.74674600013119287},
};

}  // namespace

TEST(Bessel, MatchesHighPrecisionTable) {
    for (const auto& r : table) {
        EXPECT_NEAR(bessel_j(1, r.x), r.j1, 1e-12) << r.x;
        EXPECT_NEAR(bessel_j(2, r.x), r.j2, 1e-12) << r.x;
    }
}

TEST(Struve, MatchesHighPrecisionTable) {
    for (const auto& r : table) {
        EXPECT_NEAR(struve_h(0, r.x), r.h0, 1e-11) << r.x;
        EXPECT_NEAR(struve_h(1, r.x), r.h1, 1e-11) << r.x;
    }
}

TEST(Bessel, ParityAndLibraryAgreement) {
    for (double x = 0.1; x < 45.0; x += 1.37) {
        EXPECT_NEAR(bessel_j(1, -x), -bessel_j(1, x), 1e-15);
        EXPECT_NEAR(bessel_j(2, -x), bessel_j(2, x), 1e-15);
        EXPECT_NEAR(bessel_j(1, x), std::cyl_bessel_j(1.0, x), 1e-12);
        EXPECT_NEAR(bessel_j(2, x), std::cyl_bessel_j(2.0, x), 1e-12);
    }
}

TEST(Struve, ParityAndSmallArgument) {
    for (double x : {0.01, 1.0, 12.0, 40.0}) {
        EXPECT_DOUBLE_EQ(struve_h(0, -x), -struve_h(0, x));
        EXPECT_DOUBLE_EQ(struve_h(1, -x), struve_h(1, x));
    }
    EXPECT_EQ(struve_h(0, 0.0), 0.0);
    const double x = 1e-4;
    EXPECT_NEAR(struve_h(0, x) / (2.0 * x / qwclock::pi), 1.0, 1e-8);
    EXPECT_NEAR(struve_h(1, x) / (2.0 * x * x / (3.0 * qwclock::pi)), 1.0, 1e-8);
}

TEST(Struve, ContinuousAcrossSeriesLimit) {
    const double below = series_limit - 1e-12;
    const double above = series_limit + 1e-12;
    EXPECT_NEAR(struve_h(0, below), struve_h(0, above), 1e-10);
    EXPECT_NEAR(struve_h(1, below), struve_h(1, above), 1e-10);
}

TEST(SpecialFunctions, RejectUnsupportedOrders) {
    EXPECT_THROW(bessel_j(-1, 1.0), std::domain_error);
    EXPECT_THROW(struve_h(2, 1.0), std::domain_error);
}
