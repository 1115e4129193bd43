#include "tfbs/time_marcher.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "tfbs/collocation.hpp"
#include "tfbs/errors.hpp"
#include "tfbs/fractional_time.hpp"
#include "tfbs/tridiagonal.hpp"

namespace tfbs {
namespace {

bool same_value(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

EndSlopes resolve_slopes(const ProblemSpec& spec, const Grid& grid,
                         std::span<const double> u0) {
    const EndSlopes fallback = one_sided_slopes(u0, grid.dy());
    if (!spec.initial_slope) return fallback;
    EndSlopes slopes{(*spec.initial_slope)(grid.y_a()), (*spec.initial_slope)(grid.y_b())};
    if (!std::isfinite(slopes.left)) slopes.left = fallback.left;
    if (!std::isfinite(slopes.right)) slopes.right = fallback.right;
    return slopes;
}

}  // namespace

void SchemeOptions::validate() const {
    std::string issues;
    if (!(mu > 0.0 && mu < 1.0)) issues += " fractional order mu must lie in (0, 1);";
    if (!(tension > 0.0) || !std::isfinite(tension)) issues += " tension p must be positive;";
    if (issues.empty()) return;
    issues.pop_back();
    throw ValidationError("invalid scheme options:" + issues);
}

Grid make_grid(const ProblemSpec& spec, std::size_t intervals, std::size_t steps) {
    return Grid::make(spec.y_a, spec.y_b, intervals, spec.horizon, steps);
}

SolveResult run(const ProblemSpec& spec, const Grid& grid, const SchemeOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    spec.validate();
    options.validate();
    if (!same_value(spec.y_a, grid.y_a()) || !same_value(spec.y_b, grid.y_b()) ||
        !same_value(spec.horizon, grid.horizon())) {
        throw ValidationError("grid domain/horizon does not match problem '" + spec.name + "'");
    }

    const std::size_t nodes = grid.nodes();
    const std::size_t steps = grid.steps();
    const double dtau = grid.dtau();
    const std::vector<double> y = grid.nodes_vector();

    const SplineBasis basis = basis_constants(options.tension, grid.dy(), options.constants);
    const FractionalWeights weights = FractionalWeights::make(options.mu, dtau, steps);
    const CoefficientStencil stencil = build_stencil(basis, weights, spec.kappa);

    SolveResult result;
    result.nodal = Surface(steps + 1, nodes);

    std::vector<double> u0(nodes);
    for (std::size_t j = 0; j < nodes; ++j) u0[j] = spec.initial(y[j]);
    std::vector<double> delta = initial_coefficients(basis, u0, resolve_slopes(spec, grid, u0));
    nodal_from_coefficients(basis.gamma1, delta, result.nodal.row(0));

    // The reduced matrix does not change between steps.
    const std::vector<double> zeros(nodes, 0.0);
    const TridiagonalSystem shape = reduce_boundaries(stencil, basis.gamma1, zeros, 0.0, 0.0);
    TriFactorization factor;
    try {
        factor = TriFactorization::factorize(shape.sub, shape.diag, shape.super);
    } catch (const SingularSystemError& e) {
        throw SolverError(std::string("step 1: ") + e.what());
    }

    const double ell_first = stencil.lhs[0];
    const double ell_last = stencil.lhs[2];
    std::vector<double> source_now(nodes), source_next(nodes), half_source(nodes), phi(nodes);
    for (std::size_t j = 0; j < nodes; ++j) source_now[j] = spec.source(y[j], 0.0);

    for (std::size_t n = 0; n < steps; ++n) {
        const double tau_next = grid.time(n + 1);
        if (options.source == SourceSampling::trapezoid) {
            for (std::size_t j = 0; j < nodes; ++j) {
                source_next[j] = spec.source(y[j], tau_next);
                half_source[j] = 0.5 * (source_now[j] + source_next[j]);
            }
            source_now.swap(source_next);
        } else {
            const double tau_half = (static_cast<double>(n) + 0.5) * dtau;
            for (std::size_t j = 0; j < nodes; ++j) half_source[j] = spec.source(y[j], tau_half);
        }

        build_rhs(stencil, weights, delta, result.nodal, half_source, n, phi);

        const double h1 = spec.left_boundary(tau_next);
        const double h2 = spec.right_boundary(tau_next);
        phi.front() -= ell_first * h1 / basis.gamma1;
        phi.back() -= ell_last * h2 / basis.gamma1;
        factor.solve_in_place(phi);

        for (double v : phi) {
            if (!std::isfinite(v)) {
                throw SolverError("non-finite coefficient at step " + std::to_string(n + 1));
            }
        }
        delta = recover_ghosts(basis.gamma1, phi, h1, h2);
        nodal_from_coefficients(basis.gamma1, delta, result.nodal.row(n + 1));
    }

    result.final_delta = std::move(delta);
    result.meta = RunMeta{options, grid.intervals(), steps, grid.y_a(), grid.y_b(), grid.horizon(),
                          0.0};
    result.meta.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

std::span<const double> nodal_row(const SolveResult& result, std::size_t n) {
    if (n >= result.nodal.rows()) {
        throw std::out_of_range("nodal_row: level " + std::to_string(n) + " outside [0, " +
                                std::to_string(result.nodal.rows() - 1) + "]");
    }
    return result.nodal.row(n);
}

}  // namespace tfbs
