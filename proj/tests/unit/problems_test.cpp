#include "tfbs/problems.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "tfbs/errors.hpp"
#include "tfbs/verification.hpp"

namespace tfbs {
namespace {

TEST(Manufactured, CompatibleData) {
    for (double mu : {0.1, 0.5, 0.9}) {
        const auto spec = manufactured_problem(mu);
        EXPECT_NO_THROW(spec.validate());
        for (double y : {0.0, 0.2, 0.5, 0.77, 1.0}) {
            EXPECT_EQ((*spec.exact)(y, 0.0), spec.initial(y));
        }
        for (double tau : {0.0, 0.3, 1.0}) {
            EXPECT_EQ(spec.left_boundary(tau), 0.0);
            EXPECT_EQ(spec.right_boundary(tau), 0.0);
            EXPECT_EQ((*spec.exact)(0.0, tau), 0.0);
            EXPECT_EQ((*spec.exact)(1.0, tau), 0.0);
        }
        EXPECT_DOUBLE_EQ((*spec.initial_slope)(0.5), 1.0 - 0.75);
    }
}

TEST(Manufactured, ReferenceCoefficients) {
    const auto spec = manufactured_problem(0.5);
    EXPECT_DOUBLE_EQ(spec.kappa.diffusion, 0.03125);
    EXPECT_DOUBLE_EQ(spec.kappa.drift, 0.01875);
    EXPECT_DOUBLE_EQ(spec.kappa.reaction, 0.05);
}

TEST(Manufactured, ExactSolutionSatisfiesPde) {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double mu = 0.05 + 0.9 * unit(rng);
        const double y = unit(rng);
        const double tau = 0.05 + 0.95 * unit(rng);
        const auto spec = manufactured_problem(mu);
        const double shape = y * y * (1 - y);
        const double caputo =
            caputo_oracle([&](double s) { return 2.0 * (s + 1.0) * shape; }, mu, tau);
        const double w = (tau + 1) * (tau + 1);
        const double u = w * shape;
        const double uy = w * (2 * y - 3 * y * y);
        const double uyy = w * (2 - 6 * y);
        const double rhs = spec.kappa.diffusion * uyy + spec.kappa.drift * uy -
                           spec.kappa.reaction * u + spec.source(y, tau);
        EXPECT_LE(std::abs(caputo - rhs), 1e-8) << "mu=" << mu << " y=" << y << " tau=" << tau;
    }
}

TEST(Manufactured, RejectsMuOutsideUnitInterval) {
    EXPECT_THROW(manufactured_problem(0.0), ValidationError);
    EXPECT_THROW(manufactured_problem(1.0), ValidationError);
}

TEST(ConstantProblem, Data) {
    const auto spec = constant_problem(3.0, {0.1, 0.2, 0.05});
    EXPECT_DOUBLE_EQ(spec.source(0.3, 0.4), 0.15);
    EXPECT_EQ(spec.initial(0.9), 3.0);
    EXPECT_EQ(spec.left_boundary(0.5), 3.0);
}

TEST(BlackScholes, CoefficientMap) {
    MarketParams m;
    const auto k = market_coefficients(m);
    EXPECT_DOUBLE_EQ(k.diffusion, 0.03125);
    EXPECT_DOUBLE_EQ(k.drift, 0.01875);
    EXPECT_DOUBLE_EQ(k.reaction, 0.05);
    m.dividend = 0.02;
    EXPECT_DOUBLE_EQ(market_coefficients(m).drift, 0.05 - 0.02 - 0.03125);
}

TEST(BlackScholes, DefaultTruncationAndPayoff) {
    MarketParams m;
    m.strike = 1.3;
    const auto call = black_scholes_problem(m, OptionKind::call);
    const double lk = std::log(1.3);
    EXPECT_NEAR(call.y_a, lk - 1.0, 1e-15);
    EXPECT_NEAR(call.y_b, lk + 1.0, 1e-15);
    EXPECT_EQ(call.initial(lk), 0.0);
    EXPECT_TRUE(std::isnan((*call.initial_slope)(lk)));
    EXPECT_EQ(call.left_boundary(0.7), 0.0);
    EXPECT_NEAR(call.right_boundary(0.0), std::exp(call.y_b) - 1.3, 1e-14);

    const auto put = black_scholes_problem(m, OptionKind::put);
    EXPECT_EQ(put.right_boundary(0.4), 0.0);
    EXPECT_NEAR(put.left_boundary(0.0), 1.3 - std::exp(put.y_a), 1e-14);
    for (double y : {lk - 0.8, lk - 0.1, lk + 0.1, lk + 0.9}) {
        EXPECT_NEAR(call.initial(y) - put.initial(y), std::exp(y) - 1.3, 1e-14);
    }
}

TEST(BlackScholes, BoundaryParity) {
    MarketParams m;
    m.dividend = 0.01;
    m.zeta_min = 0.2;
    m.zeta_max = 4.0;
    const auto call = black_scholes_problem(m, OptionKind::call);
    const auto put = black_scholes_problem(m, OptionKind::put);
    EXPECT_NEAR(call.y_a, std::log(0.2), 1e-15);
    for (double tau : {0.0, 0.5, 1.0}) {
        // Far-field call minus put values equal the forward at each end.
        EXPECT_NEAR(call.right_boundary(tau) - put.right_boundary(tau),
                    4.0 * std::exp(-0.01 * tau) - std::exp(-0.05 * tau), 1e-14);
        EXPECT_NEAR(call.left_boundary(tau) - put.left_boundary(tau),
                    0.2 * std::exp(-0.01 * tau) - std::exp(-0.05 * tau), 1e-14);
    }
}

TEST(BlackScholes, MarketValidationListsEveryIssue) {
    MarketParams m;
    m.rate = 0.0;
    m.volatility = -1.0;
    m.strike = 1.0;
    m.zeta_min = 2.0;
    try {
        m.validate();
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("rate"), std::string::npos);
        EXPECT_NE(what.find("volatility"), std::string::npos);
        EXPECT_NE(what.find("zeta_min"), std::string::npos);
    }
}

TEST(ToFinancial, TimeReversalAndRoundTrip) {
    MarketParams m;
    const auto spec = black_scholes_problem(m, OptionKind::call);
    const auto grid = Grid::make(spec.y_a, spec.y_b, 4, spec.horizon, 5);
    Surface s(6, 5);
    for (std::size_t n = 0; n < 6; ++n)
        for (std::size_t j = 0; j < 5; ++j) s(n, j) = 10.0 * n + j;
    const auto pts = to_financial(s, grid, m);
    ASSERT_EQ(pts.size(), 30u);
    EXPECT_DOUBLE_EQ(pts.front().t, 1.0);
    EXPECT_EQ(pts.back().t, 0.0);
    for (std::size_t n = 0; n < 6; ++n) {
        for (std::size_t j = 0; j < 5; ++j) {
            const auto& p = pts[n * 5 + j];
            EXPECT_EQ(p.price, s(n, j));
            EXPECT_NEAR(std::log(p.zeta), grid.node(j), 1e-14);
            EXPECT_NEAR(m.expiry - p.t, grid.time(n), 1e-15);
        }
    }
    EXPECT_THROW(to_financial(Surface(5, 5), grid, m), ValidationError);
}

TEST(ProblemSpec, ValidationListsEveryIssue) {
    ProblemSpec p;
    p.name = "broken";
    p.y_a = 1.0;
    p.y_b = 0.0;
    try {
        p.validate();
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        for (const char* needle : {"k1", "k3", "domain", "source", "initial", "boundary"}) {
            EXPECT_NE(what.find(needle), std::string::npos) << needle;
        }
    }
}

}  // namespace
}  // namespace tfbs
