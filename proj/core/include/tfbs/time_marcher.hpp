#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tfbs/exp_bspline.hpp"
#include "tfbs/grid.hpp"
#include "tfbs/problems.hpp"

namespace tfbs {

/// How the source enters the half step n -> n+1.
enum class SourceSampling {
    /// (g^n + g^{n+1}) / 2, the trapezoidal Crank-Nicolson average.
    trapezoid,
    /// g(tau_{n+1/2}).
    midpoint,
};

struct SchemeOptions {
    double mu = 0.5;
    double tension = 1.0;
    ConstantsEvaluation constants = ConstantsEvaluation::stable;
    SourceSampling source = SourceSampling::trapezoid;

    void validate() const;
};

struct RunMeta {
    SchemeOptions scheme;
    std::size_t intervals = 0;
    std::size_t steps = 0;
    double y_a = 0.0;
    double y_b = 0.0;
    double horizon = 0.0;
    double wall_seconds = 0.0;
};

struct SolveResult {
    /// (N+1) x (J+1) nodal values U(y_j, tau_n).
    Surface nodal;
    /// d^N including both ghosts (J+3 entries).
    std::vector<double> final_delta;
    RunMeta meta;
};

/// Marches the collocated Crank-Nicolson scheme from tau = 0 to the grid
/// horizon. The left-hand matrix is factorized once; each step costs O(J)
/// plus the O(nJ) history sum. Throws SolverError (with the step index) on
/// a singular pivot and ValidationError if grid and problem disagree.
SolveResult run(const ProblemSpec& spec, const Grid& grid, const SchemeOptions& options);

/// Grid spanning the problem's domain and horizon.
Grid make_grid(const ProblemSpec& spec, std::size_t intervals, std::size_t steps);

std::span<const double> nodal_row(const SolveResult& result, std::size_t n);

}  // namespace tfbs
