#pragma once

namespace tfbs {

/// How the nodal constants are evaluated from sinh/cosh.
enum class ConstantsEvaluation {
    /// Closed forms for p*dy >= 0.5, convergent series below. Accurate to
    /// round-off for every p*dy > 0.
    stable,
    /// The closed forms evaluated literally in double precision. Loses digits
    /// to cancellation for small p*dy; kept to reproduce published tables
    /// computed that way.
    closed_form,
};

/// Nodal constants of the exponential B-spline with tension p on a uniform
/// mesh of step dy. Basis B_j is normalised so B_j(y_j) = 1:
///
///   B_j(y_{j+-1}) = gamma1,  B_j''(y_{j+-1}) = gamma3,  B_j''(y_j) = -2 gamma3
///
/// With s = sinh(p dy), c = cosh(p dy):
///   gamma1 = (s - p dy) / (2 (p dy c - s))
///   gamma2 = p (1 - c)  / (2 (p dy c - s))
///   gamma3 = p^2 s      / (2 (p dy c - s))
///
/// As p dy -> 0 these tend to the cubic B-spline values (1/4, -3/(4 dy), 3/(2 dy^2)).
struct SplineBasis {
    double tension = 0.0;
    double dy = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
};

SplineBasis basis_constants(double tension, double dy,
                            ConstantsEvaluation mode = ConstantsEvaluation::stable);

/// Value and first two derivatives of U = sum_k delta_k B_k at node y_j.
struct NodalJet {
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
};

/// U(y_j)   = gamma1 d_{j-1} + d_j + gamma1 d_{j+1}
/// U'(y_j)  = gamma2 (d_{j-1} - d_{j+1})
/// U''(y_j) = gamma3 (d_{j-1} - 2 d_j + d_{j+1})
///
/// gamma2 < 0, so the first-derivative identity reduces to the central
/// difference 3/(4 dy) (d_{j+1} - d_{j-1}) in the cubic limit.
constexpr NodalJet nodal_values(const SplineBasis& b, double left, double centre,
                                double right) noexcept {
    return {b.gamma1 * left + centre + b.gamma1 * right, b.gamma2 * (left - right),
            b.gamma3 * (left - 2.0 * centre + right)};
}

}  // namespace tfbs
