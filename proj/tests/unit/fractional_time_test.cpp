#include "tfbs/fractional_time.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "tfbs/errors.hpp"
#include "tfbs/verification.hpp"

namespace tfbs {
namespace {

// Closed forms evaluated to 40 digits (mpmath) for mu = 0.5, dtau = 0.25.
constexpr double kVarpi = 1.5957691216057307;
constexpr double kNu1 = 1.1681840741649531;
constexpr double kNu2 = 0.8042950365348584;

TEST(FractionalWeights, MatchesHighPrecisionClosedForm) {
    const auto w = FractionalWeights::make(0.5, 0.25, 4);
    EXPECT_NEAR(w.varpi(), kVarpi, 1e-14);
    EXPECT_NEAR(w.nu(1), kNu1, 1e-14);
    EXPECT_NEAR(w.nu(2), kNu2, 1e-14);
    EXPECT_EQ(w.steps(), 4u);
}

TEST(FractionalWeights, FirstWeightClosedForm) {
    for (double mu : {0.1, 0.37, 0.5, 0.9}) {
        for (double dt : {1e-3, 0.01, 0.25}) {
            const auto w = FractionalWeights::make(mu, dt, 3);
            const double expected = (std::pow(1.5, 1 - mu) - std::pow(0.5, 1 - mu)) /
                                    (std::pow(dt, mu) * std::tgamma(2 - mu));
            EXPECT_NEAR(w.nu(1), expected, 1e-13 * expected);
        }
    }
}

TEST(FractionalWeights, NuPositiveAndStrictlyDecreasing) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mu_dist(0.01, 0.99);
    std::uniform_real_distribution<double> dt_dist(1e-4, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto w = FractionalWeights::make(mu_dist(rng), dt_dist(rng), 200);
        EXPECT_GT(w.varpi(), 0.0);
        for (std::size_t i = 1; i <= w.steps(); ++i) {
            EXPECT_GT(w.nu(i), 0.0);
            if (i > 1) EXPECT_LT(w.nu(i), w.nu(i - 1));
        }
    }
}

TEST(FractionalWeights, RejectsInvalidArguments) {
    EXPECT_THROW(FractionalWeights::make(0.0, 0.1, 4), ValidationError);
    EXPECT_THROW(FractionalWeights::make(1.0, 0.1, 4), ValidationError);
    EXPECT_THROW(FractionalWeights::make(-0.2, 0.1, 4), ValidationError);
    EXPECT_THROW(FractionalWeights::make(0.5, 0.0, 4), ValidationError);
    EXPECT_THROW(FractionalWeights::make(0.5, -1.0, 4), ValidationError);
    EXPECT_THROW(FractionalWeights::make(0.5, 0.1, 0), ValidationError);
    const auto w = FractionalWeights::make(0.5, 0.1, 4);
    EXPECT_THROW((void)w.nu(0), std::out_of_range);
    EXPECT_THROW((void)w.nu(5), std::out_of_range);
}

Surface history_of(const std::vector<std::vector<double>>& rows) {
    Surface s(rows.size(), rows.front().size());
    for (std::size_t n = 0; n < rows.size(); ++n) {
        for (std::size_t j = 0; j < rows[n].size(); ++j) s(n, j) = rows[n][j];
    }
    return s;
}

TEST(HistoryTerm, ZeroAtFirstStep) {
    const auto w = FractionalWeights::make(0.4, 0.1, 5);
    const Surface h = history_of({{1.0, -2.0, 3.5}});
    for (double v : history_term(w, h, 0)) EXPECT_EQ(v, 0.0);
}

TEST(HistoryTerm, SecondStepIsTwoNuOneTimesDifference) {
    const auto w = FractionalWeights::make(0.4, 0.1, 5);
    const Surface h = history_of({{1.0, -2.0, 3.5}, {0.5, 1.0, 3.0}});
    const auto out = history_term(w, h, 1);
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_NEAR(out[j], 2.0 * w.nu(1) * (h(0, j) - h(1, j)), 1e-14);
    }
}

TEST(HistoryTerm, ConstantHistoryTelescopesToZero) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> mu_dist(0.05, 0.95);
    std::uniform_real_distribution<double> c_dist(-10.0, 10.0);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t steps = 40;
        const auto w = FractionalWeights::make(mu_dist(rng), 1.0 / steps, steps);
        const double c = c_dist(rng);
        const Surface h(steps, 6, c);
        for (std::size_t n = 1; n < steps; ++n) {
            for (double v : history_term(w, h, n)) EXPECT_NEAR(v, 0.0, 1e-12 * (1 + std::abs(c)) * w.nu(1));
        }
    }
}

TEST(HistoryTerm, RejectsBadShapes) {
    const auto w = FractionalWeights::make(0.5, 0.1, 3);
    const Surface h(2, 4);
    EXPECT_THROW(history_term(w, h, 2), ValidationError);  // needs 3 rows
    EXPECT_THROW(history_term(w, h, 3), ValidationError);  // outside [0, N-1]
    std::vector<double> small(3);
    EXPECT_THROW(history_term(w, h, 1, small), ValidationError);
}

TEST(DiscreteCaputo, ExactForLinearAtFirstHalfNode) {
    for (double mu : {0.2, 0.5, 0.8}) {
        const double dt = 0.05;
        const auto w = FractionalWeights::make(mu, dt, 2);
        // D^mu tau at tau = dt/2 is (dt/2)^{1-mu} / Gamma(2-mu).
        const double exact = std::pow(dt / 2, 1 - mu) / std::tgamma(2 - mu);
        EXPECT_NEAR(w.varpi() * dt, exact, 1e-14);
        const std::vector<double> samples{0.0, dt};
        EXPECT_NEAR(discrete_caputo(w, samples, 0), exact, 1e-14);
    }
}

TEST(DiscreteCaputo, ExactForLinearAtEveryHalfNode) {
    // Piecewise-linear interpolation is exact for linear functions.
    const double mu = 0.6, dt = 0.1;
    const std::size_t steps = 10;
    const auto w = FractionalWeights::make(mu, dt, steps);
    std::vector<double> samples(steps + 1);
    for (std::size_t n = 0; n <= steps; ++n) samples[n] = 3.0 * n * dt - 1.0;
    for (std::size_t n = 0; n < steps; ++n) {
        const double t = (n + 0.5) * dt;
        EXPECT_NEAR(discrete_caputo(w, samples, n), 3.0 * std::pow(t, 1 - mu) / std::tgamma(2 - mu),
                    1e-12);
    }
}

TEST(DiscreteCaputo, AgreesWithHistoryTermRecombination) {
    // D_h u = varpi (u^{n+1} - u^n) - history/2 with the history combination
    // as used on the right-hand side.
    const double mu = 0.35;
    const std::size_t steps = 12;
    const auto w = FractionalWeights::make(mu, 1.0 / steps, steps);
    Surface h(steps + 1, 1);
    std::vector<double> samples(steps + 1);
    for (std::size_t n = 0; n <= steps; ++n) samples[n] = h(n, 0) = std::exp(0.7 * n / double(steps));
    for (std::size_t n = 0; n < steps; ++n) {
        const double hist = history_term(w, h, n)[0];
        EXPECT_NEAR(discrete_caputo(w, samples, n),
                    w.varpi() * (samples[n + 1] - samples[n]) - 0.5 * hist, 1e-12);
    }
}

}  // namespace
}  // namespace tfbs
