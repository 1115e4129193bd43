#include "tfbs/collocation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tfbs/errors.hpp"
#include "tfbs/tridiagonal.hpp"

namespace tfbs {

CoefficientStencil build_stencil(const SplineBasis& basis, const FractionalWeights& w,
                                 const PdeCoefficients& kappa) {
    if (!(kappa.diffusion > 0.0)) {
        throw ValidationError("diffusion coefficient k1 must be positive, got " +
                              std::to_string(kappa.diffusion));
    }
    if (!(kappa.reaction > 0.0)) {
        throw ValidationError("reaction coefficient k3 must be positive, got " +
                              std::to_string(kappa.reaction));
    }
    if (!std::isfinite(kappa.drift)) throw ValidationError("drift coefficient k2 must be finite");

    const double g1 = basis.gamma1;
    const double g2 = basis.gamma2;
    const double g3 = basis.gamma3;
    const double k1 = kappa.diffusion;
    const double k2 = kappa.drift;
    const double k3 = kappa.reaction;
    const double plus = 2.0 * w.varpi() + k3;
    const double minus = 2.0 * w.varpi() - k3;

    CoefficientStencil s;
    s.kappa = kappa;
    s.lhs = {g1 * plus - g2 * k2 - g3 * k1, plus + 2.0 * g3 * k1, g1 * plus + g2 * k2 - g3 * k1};
    s.rhs = {g1 * minus + g2 * k2 + g3 * k1, minus - 2.0 * g3 * k1,
             g1 * minus - g2 * k2 + g3 * k1};
    return s;
}

void build_rhs(const CoefficientStencil& stencil, const FractionalWeights& w,
               std::span<const double> delta, const Surface& nodal_history,
               std::span<const double> half_source, std::size_t n, std::span<double> phi) {
    const std::size_t nodes = phi.size();
    if (delta.size() != nodes + 2) {
        throw ValidationError("build_rhs: coefficient array must have J+3 entries, got " +
                              std::to_string(delta.size()));
    }
    if (half_source.size() != nodes || nodal_history.cols() != nodes) {
        throw ValidationError("build_rhs: source/history width does not match node count");
    }
    if (nodal_history.rows() < n + 1) {
        throw ValidationError("build_rhs: history has " + std::to_string(nodal_history.rows()) +
                              " levels, step " + std::to_string(n) + " needs " +
                              std::to_string(n + 1));
    }

    history_term(w, nodal_history, n, phi);

    const auto [r0, r1, r2] = stencil.rhs;
    for (std::size_t j = 0; j < nodes; ++j) {
        phi[j] += r0 * delta[j] + r1 * delta[j + 1] + r2 * delta[j + 2] + 2.0 * half_source[j];
    }
}

std::vector<double> build_rhs(const CoefficientStencil& stencil, const FractionalWeights& w,
                              std::span<const double> delta, const Surface& nodal_history,
                              std::span<const double> half_source, std::size_t n) {
    std::vector<double> phi(half_source.size());
    build_rhs(stencil, w, delta, nodal_history, half_source, n, phi);
    return phi;
}

TridiagonalSystem reduce_boundaries(const CoefficientStencil& stencil, double gamma1,
                                    std::span<const double> phi, double h1, double h2) {
    if (gamma1 == 0.0 || !std::isfinite(gamma1)) {
        throw ValidationError("reduce_boundaries: gamma1 must be nonzero");
    }
    const std::size_t m = phi.size();
    if (m < 2) throw ValidationError("reduce_boundaries: need at least two nodes");
    const std::size_t last = m - 1;
    const auto [a, b, c] = stencil.lhs;

    TridiagonalSystem sys{std::vector<double>(m, a), std::vector<double>(m, b),
                          std::vector<double>(m, c), std::vector<double>(phi.begin(), phi.end())};
    sys.sub[0] = 0.0;
    sys.super[last] = 0.0;

    // d_{-1} = (h1 - d_0 - gamma1 d_1) / gamma1
    sys.diag[0] -= a / gamma1;
    sys.super[0] -= a;
    sys.rhs[0] -= a * h1 / gamma1;

    // d_{J+1} = (h2 - d_J - gamma1 d_{J-1}) / gamma1
    sys.diag[last] -= c / gamma1;
    sys.sub[last] -= c;
    sys.rhs[last] -= c * h2 / gamma1;
    return sys;
}

std::vector<double> recover_ghosts(double gamma1, std::span<const double> interior, double h1,
                                   double h2) {
    const std::size_t m = interior.size();
    if (m < 2) throw ValidationError("recover_ghosts: need at least two nodes");
    std::vector<double> delta(m + 2);
    std::copy(interior.begin(), interior.end(), delta.begin() + 1);
    delta[0] = (h1 - interior[0] - gamma1 * interior[1]) / gamma1;
    delta[m + 1] = (h2 - interior[m - 1] - gamma1 * interior[m - 2]) / gamma1;
    return delta;
}

void nodal_from_coefficients(double gamma1, std::span<const double> delta, std::span<double> out) {
    if (delta.size() != out.size() + 2) {
        throw ValidationError("nodal_from_coefficients: need J+3 coefficients for J+1 nodes");
    }
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = gamma1 * delta[j] + delta[j + 1] + gamma1 * delta[j + 2];
    }
}

EndSlopes one_sided_slopes(std::span<const double> nodal, double dy) {
    const std::size_t m = nodal.size();
    if (m < 3) throw ValidationError("one_sided_slopes: need at least three nodes");
    return {(-3.0 * nodal[0] + 4.0 * nodal[1] - nodal[2]) / (2.0 * dy),
            (3.0 * nodal[m - 1] - 4.0 * nodal[m - 2] + nodal[m - 3]) / (2.0 * dy)};
}

std::vector<double> initial_coefficients(const SplineBasis& basis, std::span<const double> u0,
                                         const EndSlopes& slopes) {
    const std::size_t m = u0.size();
    if (m < 3) throw ValidationError("initial_coefficients: need at least three nodes");
    const double g1 = basis.gamma1;
    const double g2 = basis.gamma2;

    // Slope rows give d_{-1} = d_1 + s_a / g2 and d_{J+1} = d_{J-1} - s_b / g2;
    // substituting into the end interpolation rows leaves a tridiagonal system.
    std::vector<double> sub(m, g1), diag(m, 1.0), super(m, g1);
    std::vector<double> rhs(u0.begin(), u0.end());
    sub[0] = 0.0;
    super[0] = 2.0 * g1;
    rhs[0] -= g1 * slopes.left / g2;
    sub[m - 1] = 2.0 * g1;
    super[m - 1] = 0.0;
    rhs[m - 1] += g1 * slopes.right / g2;

    const auto f = TriFactorization::factorize(sub, diag, super);
    f.solve_in_place(rhs);

    std::vector<double> delta(m + 2);
    std::copy(rhs.begin(), rhs.end(), delta.begin() + 1);
    delta[0] = rhs[1] + slopes.left / g2;
    delta[m + 1] = rhs[m - 2] - slopes.right / g2;
    return delta;
}

}  // namespace tfbs
