#include "tfbs/exp_bspline.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tfbs/errors.hpp"

namespace tfbs {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(BasisConstants, ReferenceValuesAtUnitTension) {
    // 40-digit closed forms: 0.24987506544297295, -7.4987506544297295, 150.09997144126374.
    const auto b = basis_constants(1.0, 0.1);
    EXPECT_NEAR(b.gamma1, 0.24987506544297295, 1e-15);
    EXPECT_NEAR(b.gamma2, -7.4987506544297295, 1e-13);
    EXPECT_NEAR(b.gamma3, 150.09997144126374, 1e-11);
    // Close to the cubic values -7.5 and 150.
    EXPECT_NEAR(b.gamma2, -7.5, 2e-3);
    EXPECT_NEAR(b.gamma3, 150.0, 0.2);
}

TEST(BasisConstants, CubicLimit) {
    for (double x : {1e-3, 1e-4, 1e-6, 1e-8}) {
        const double dy = 0.02;
        const auto b = basis_constants(x / dy, dy);
        EXPECT_LE(rel(b.gamma1, 0.25), 1e-6) << x;
        EXPECT_LE(rel(b.gamma2 * dy, -0.75), 1e-6) << x;
        EXPECT_LE(rel(b.gamma3 * dy * dy, 1.5), 1e-6) << x;
    }
}

TEST(BasisConstants, StableBranchMatchesExtendedPrecision) {
    // Log-spaced sweep over p*dy in [1e-8, 10].
    for (int k = 0; k <= 90; ++k) {
        const double x = std::pow(10.0, -8.0 + k * 0.1);
        for (double dy : {1.0, 0.01}) {
            const double p = x / dy;
            const auto b = basis_constants(p, dy);
            const auto ref = testing::extended_constants(p, dy);
            EXPECT_LE(rel(b.gamma1, ref.gamma1), 1e-10) << "x=" << x;
            EXPECT_LE(rel(b.gamma2, ref.gamma2), 1e-10) << "x=" << x;
            EXPECT_LE(rel(b.gamma3, ref.gamma3), 1e-10) << "x=" << x;
        }
    }
}

TEST(BasisConstants, SignInvariants) {
    for (double p : {1e-3, 0.01, 0.1, 1.0, 5.0, 40.0}) {
        for (double dy : {1.0 / 200, 0.1, 0.5}) {
            for (auto mode : {ConstantsEvaluation::stable, ConstantsEvaluation::closed_form}) {
                const auto b = basis_constants(p, dy, mode);
                EXPECT_GT(b.gamma1, 0.0);
                EXPECT_LT(b.gamma1, 0.5);
                EXPECT_LT(b.gamma2, 0.0);
                EXPECT_GT(b.gamma3, 0.0);
            }
        }
    }
}

TEST(BasisConstants, FineGridLowTensionIsFinite) {
    const auto b = basis_constants(0.01, 1.0 / 200);
    EXPECT_TRUE(std::isfinite(b.gamma1) && std::isfinite(b.gamma2) && std::isfinite(b.gamma3));
    EXPECT_GT(b.gamma1, 0.0);
    EXPECT_LT(b.gamma2, 0.0);
    EXPECT_GT(b.gamma3, 0.0);
}

TEST(BasisConstants, ClosedFormLosesDigitsAtSmallArgument) {
    // The literal closed forms cancel catastrophically; the stable branch does not.
    const double p = 0.01, dy = 1.0 / 200;
    const auto ref = testing::extended_constants(p, dy);
    const auto literal = basis_constants(p, dy, ConstantsEvaluation::closed_form);
    const auto stable = basis_constants(p, dy, ConstantsEvaluation::stable);
    EXPECT_GT(rel(literal.gamma1, ref.gamma1), 1e-9);
    EXPECT_LT(rel(stable.gamma1, ref.gamma1), 1e-14);
}

TEST(BasisConstants, RejectsNonPositiveArguments) {
    EXPECT_THROW(basis_constants(0.0, 0.1), ValidationError);
    EXPECT_THROW(basis_constants(-1.0, 0.1), ValidationError);
    EXPECT_THROW(basis_constants(1.0, 0.0), ValidationError);
    EXPECT_THROW(basis_constants(1.0, -0.1), ValidationError);
}

TEST(NodalValues, ConstantReproduction) {
    for (double p : {0.01, 1.0, 10.0}) {
        const auto b = basis_constants(p, 0.1);
        const double c = 3.7;
        const double d = c / (1 + 2 * b.gamma1);
        const auto jet = nodal_values(b, d, d, d);
        EXPECT_NEAR(jet.value, c, 1e-15 * c);
        EXPECT_EQ(jet.first, 0.0);
        EXPECT_NEAR(jet.second, 0.0, 1e-12 * b.gamma3);
    }
}

TEST(NodalValues, UnitCoefficient) {
    const auto b = basis_constants(1.0, 0.1);
    const auto jet = nodal_values(b, 0.0, 1.0, 0.0);
    EXPECT_EQ(jet.value, 1.0);
    EXPECT_EQ(jet.first, 0.0);
    EXPECT_EQ(jet.second, -2.0 * b.gamma3);
}

TEST(NodalValues, IncreasingCoefficientsGivePositiveSlope) {
    const auto b = basis_constants(1.0, 0.1);
    const auto jet = nodal_values(b, 1.0, 2.0, 3.0);
    EXPECT_NEAR(jet.first, -2.0 * b.gamma2, 1e-14);
    EXPECT_NEAR(jet.first, 14.997501308859459, 1e-12);
    EXPECT_GT(jet.first, 0.0);
}

}  // namespace
}  // namespace tfbs
