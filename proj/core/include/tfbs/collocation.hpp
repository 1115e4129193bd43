#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tfbs/exp_bspline.hpp"
#include "tfbs/fractional_time.hpp"
#include "tfbs/grid.hpp"

namespace tfbs {

/// Coefficients of D^mu u = k1 u_yy + k2 u_y - k3 u + g.
struct PdeCoefficients {
    double diffusion = 0.0;  // k1 > 0
    double drift = 0.0;      // k2
    double reaction = 0.0;   // k3 > 0
};

/// Row coefficients of the collocated Crank-Nicolson step
///
///   lhs[0] d_{j-1}^{n+1} + lhs[1] d_j^{n+1} + lhs[2] d_{j+1}^{n+1} = phi_j^n
///
/// with rhs[0..2] multiplying d^n in phi. Row sums satisfy
///   sum(lhs) = (1 + 2 gamma1)(2 varpi + k3),  sum(rhs) = (1 + 2 gamma1)(2 varpi - k3).
struct CoefficientStencil {
    std::array<double, 3> lhs{};
    std::array<double, 3> rhs{};
    PdeCoefficients kappa;
};

CoefficientStencil build_stencil(const SplineBasis& basis, const FractionalWeights& w,
                                 const PdeCoefficients& kappa);

/// (J+1) x (J+1) tridiagonal system after ghost elimination. sub[0] and
/// super[J] are zero.
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;
    std::vector<double> rhs;
};

/// phi_j^n for j = 0..J.
///
/// `delta` holds d^n including both ghosts (length J+3). `nodal_history`
/// rows 0..n hold the nodal values G^m = gamma1 d_{j-1}^m + d_j^m + gamma1 d_{j+1}^m.
/// `half_source` is the source sampled for the half step; it enters as
/// 2 * half_source.
void build_rhs(const CoefficientStencil& stencil, const FractionalWeights& w,
               std::span<const double> delta, const Surface& nodal_history,
               std::span<const double> half_source, std::size_t n, std::span<double> phi);

std::vector<double> build_rhs(const CoefficientStencil& stencil, const FractionalWeights& w,
                              std::span<const double> delta, const Surface& nodal_history,
                              std::span<const double> half_source, std::size_t n);

/// Eliminates the ghosts through gamma1 d_{-1} + d_0 + gamma1 d_1 = h1 and
/// gamma1 d_{J-1} + d_J + gamma1 d_{J+1} = h2, giving J+1 equations in
/// d_0..d_J. `phi` is the unreduced right-hand side.
TridiagonalSystem reduce_boundaries(const CoefficientStencil& stencil, double gamma1,
                                    std::span<const double> phi, double h1, double h2);

/// Completes d_0..d_J with the ghosts implied by the boundary equations.
std::vector<double> recover_ghosts(double gamma1, std::span<const double> interior, double h1,
                                   double h2);

/// G_j = gamma1 d_{j-1} + d_j + gamma1 d_{j+1} for j = 0..J.
void nodal_from_coefficients(double gamma1, std::span<const double> delta, std::span<double> out);

/// Slopes u0'(y_a), u0'(y_b) used to close the interpolation problem.
struct EndSlopes {
    double left = 0.0;
    double right = 0.0;
};

/// Second-order one-sided difference slopes from nodal values.
EndSlopes one_sided_slopes(std::span<const double> nodal, double dy);

/// d^0 (length J+3) interpolating u0 at every node with the end slopes
/// imposed through the nodal first-derivative identity.
std::vector<double> initial_coefficients(const SplineBasis& basis, std::span<const double> u0,
                                         const EndSlopes& slopes);

}  // namespace tfbs
