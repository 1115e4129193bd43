#include "tfbs/time_marcher.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tfbs/errors.hpp"

namespace tfbs {
namespace {

ProblemSpec zero_problem() {
    auto spec = manufactured_problem(0.5);
    spec.name = "zero";
    spec.source = [](double, double) { return 0.0; };
    spec.initial = [](double) { return 0.0; };
    spec.initial_slope = [](double) { return 0.0; };
    spec.exact = [](double, double) { return 0.0; };
    return spec;
}

TEST(Run, ZeroProblemStaysZero) {
    const auto spec = zero_problem();
    for (double mu : {0.2, 0.8}) {
        const auto r = run(spec, make_grid(spec, 20, 40), {mu, 1.0});
        for (double v : r.nodal.data()) EXPECT_LE(std::abs(v), 1e-13);
    }
}

TEST(Run, ConstantStateIsPreserved) {
    const double c = 1.75;
    const auto spec = constant_problem(c, {0.03125, 0.01875, 0.05});
    for (auto constants : {ConstantsEvaluation::stable, ConstantsEvaluation::closed_form}) {
        for (auto sampling : {SourceSampling::trapezoid, SourceSampling::midpoint}) {
            const auto r = run(spec, make_grid(spec, 16, 100), {0.6, 2.0, constants, sampling});
            for (double v : r.nodal.data()) EXPECT_LE(std::abs(v - c), 1e-11 * c);
        }
    }
}

TEST(Run, MatchesDenseFullSystem) {
    for (double mu : {0.3, 0.7}) {
        const auto spec = manufactured_problem(mu);
        const std::size_t J = 4, N = 4;
        testing::DenseSchemeInput in{mu, 1.0, spec.kappa.diffusion, spec.kappa.drift,
                                     spec.kappa.reaction, 0.0, 1.0, 1.0, J, N, spec.source,
                                     spec.initial, 0.0, -1.0, spec.left_boundary,
                                     spec.right_boundary};
        const auto ref = testing::dense_scheme(in);
        const auto r = run(spec, make_grid(spec, J, N), {mu, 1.0});
        for (std::size_t n = 0; n <= N; ++n) {
            for (std::size_t j = 0; j <= J; ++j) {
                EXPECT_NEAR(r.nodal(n, j), ref[n][j], 1e-12) << "n=" << n << " j=" << j;
            }
        }
    }
}

TEST(Run, BitwiseDeterministic) {
    const auto spec = manufactured_problem(0.4);
    const auto a = run(spec, make_grid(spec, 32, 64), {0.4, 1.0});
    const auto b = run(spec, make_grid(spec, 32, 64), {0.4, 1.0});
    EXPECT_TRUE(a.nodal == b.nodal);
    EXPECT_EQ(a.final_delta, b.final_delta);
}

TEST(Run, HonoursBoundaryAndInitialData) {
    MarketParams m;
    const auto spec = black_scholes_problem(m, OptionKind::call);
    const auto grid = make_grid(spec, 40, 30);
    const auto r = run(spec, grid, {0.5, 1.0});
    for (std::size_t n = 0; n <= grid.steps(); ++n) {
        const double tau = grid.time(n);
        if (n > 0) {
            EXPECT_NEAR(r.nodal(n, 0), spec.left_boundary(tau), 1e-12);
            EXPECT_NEAR(r.nodal(n, grid.intervals()), spec.right_boundary(tau), 1e-12);
        }
    }
    for (std::size_t j = 0; j <= grid.intervals(); ++j) {
        EXPECT_NEAR(r.nodal(0, j), spec.initial(grid.node(j)), 1e-12);
    }
    EXPECT_EQ(r.final_delta.size(), grid.intervals() + 3);
    EXPECT_EQ(r.meta.steps, 30u);
}

TEST(Run, ConvergesOnManufacturedProblem) {
    const auto spec = manufactured_problem(0.5);
    const auto r = run(spec, make_grid(spec, 40, 80), {0.5, 1.0});
    double err = 0.0;
    for (std::size_t j = 0; j <= 40; ++j) {
        err = std::max(err, std::abs(r.nodal(80, j) - (*spec.exact)(j / 40.0, 1.0)));
    }
    EXPECT_LT(err, 1e-3);
}

TEST(Run, RejectsMismatchedGrid) {
    const auto spec = manufactured_problem(0.5);
    EXPECT_THROW(run(spec, Grid::make(0.0, 2.0, 10, 1.0, 10), {0.5, 1.0}), ValidationError);
    EXPECT_THROW(run(spec, Grid::make(0.0, 1.0, 10, 0.5, 10), {0.5, 1.0}), ValidationError);
}

TEST(Run, RejectsInvalidOptions) {
    const auto spec = manufactured_problem(0.5);
    const auto grid = make_grid(spec, 10, 10);
    EXPECT_THROW(run(spec, grid, {1.0, 1.0}), ValidationError);
    EXPECT_THROW(run(spec, grid, {0.5, 0.0}), ValidationError);
    EXPECT_THROW(Grid::make(0.0, 1.0, 1, 1.0, 10), ValidationError);
    EXPECT_THROW(Grid::make(0.0, 1.0, 4, 1.0, 0), ValidationError);
}

TEST(NodalRow, Bounds) {
    const auto spec = manufactured_problem(0.5);
    const auto r = run(spec, make_grid(spec, 8, 5), {0.5, 1.0});
    EXPECT_EQ(nodal_row(r, 5).size(), 9u);
    EXPECT_THROW(nodal_row(r, 6), std::out_of_range);
}

}  // namespace
}  // namespace tfbs
