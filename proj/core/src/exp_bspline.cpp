#include "tfbs/exp_bspline.hpp"

#include <cmath>
#include <string>

#include "tfbs/errors.hpp"

namespace tfbs {
namespace {

// Below this p*dy the closed forms lose more than ~2 digits to cancellation.
constexpr double kSeriesSwitch = 0.5;

// Series in x^2 for the cancelling combinations, each divided by its leading
// power of x so all four are O(1):
//   (sinh x - x) / x^3        = sum x^{2k} / (2k+3)!
//   (x cosh x - sinh x) / x^3 = sum (2k+2) x^{2k} / (2k+3)!
//   (cosh x - 1) / x^2        = sum x^{2k} / (2k+2)!
//   sinh x / x                = sum x^{2k} / (2k+1)!
struct Reduced {
    double sinh_minus_x;
    double xcosh_minus_sinh;
    double cosh_minus_one;
    double sinh_over_x;
};

Reduced reduced_series(double x) {
    const double x2 = x * x;
    Reduced r{0.0, 0.0, 0.0, 0.0};
    // term_m = x^{2k} / m! for m = 2k+1, built incrementally.
    double power = 1.0;      // x^{2k}
    double fact_odd = 1.0;   // (2k+1)!
    for (int k = 0; k < 12; ++k) {
        const double m = 2.0 * k + 1.0;
        const double fact_even = fact_odd * (m + 1.0);  // (2k+2)!
        const double fact_next = fact_even * (m + 2.0); // (2k+3)!
        r.sinh_over_x += power / fact_odd;
        r.cosh_minus_one += power / fact_even;
        r.sinh_minus_x += power / fact_next;
        r.xcosh_minus_sinh += (m + 1.0) * power / fact_next;
        power *= x2;
        fact_odd = fact_next;
        if (power / fact_odd < 1e-18 * r.sinh_minus_x) break;
    }
    return r;
}

}  // namespace

SplineBasis basis_constants(double tension, double dy, ConstantsEvaluation mode) {
    if (!(tension > 0.0) || !std::isfinite(tension)) {
        throw ValidationError("spline tension must be positive, got " + std::to_string(tension));
    }
    if (!(dy > 0.0) || !std::isfinite(dy)) {
        throw ValidationError("space step must be positive, got " + std::to_string(dy));
    }

    const double x = tension * dy;
    SplineBasis b{tension, dy, 0.0, 0.0, 0.0};

    if (mode == ConstantsEvaluation::closed_form || x >= kSeriesSwitch) {
        const double s = std::sinh(x);
        const double c = std::cosh(x);
        const double denom = 2.0 * (x * c - s);
        b.gamma1 = (s - x) / denom;
        b.gamma2 = tension * (1.0 - c) / denom;
        b.gamma3 = tension * tension * s / denom;
    } else {
        const Reduced r = reduced_series(x);
        const double denom = 2.0 * r.xcosh_minus_sinh;
        b.gamma1 = r.sinh_minus_x / denom;
        b.gamma2 = -r.cosh_minus_one / denom / dy;
        b.gamma3 = r.sinh_over_x / denom / (dy * dy);
    }

    if (!std::isfinite(b.gamma1) || !std::isfinite(b.gamma2) || !std::isfinite(b.gamma3) ||
        b.gamma1 == 0.0) {
        throw SolverError("spline constants not finite for p*dy = " + std::to_string(x));
    }
    return b;
}

}  // namespace tfbs
