#include "tfbs/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tfbs/errors.hpp"

namespace tfbs {
namespace {

void check_bands(std::span<const double> sub, std::span<const double> diag,
                 std::span<const double> super) {
    if (diag.empty()) throw ValidationError("tridiagonal: empty system");
    if (sub.size() != diag.size() || super.size() != diag.size()) {
        throw ValidationError("tridiagonal: band lengths differ (sub " +
                              std::to_string(sub.size()) + ", diag " +
                              std::to_string(diag.size()) + ", super " +
                              std::to_string(super.size()) + ")");
    }
}

}  // namespace

TriFactorization TriFactorization::factorize(std::span<const double> sub,
                                             std::span<const double> diag,
                                             std::span<const double> super) {
    check_bands(sub, diag, super);
    const std::size_t n = diag.size();

    double scale = 0.0;
    for (double d : diag) scale = std::max(scale, std::abs(d));
    const double tiny = 1e-14 * scale;

    TriFactorization f;
    f.sub_.assign(sub.begin(), sub.end());
    f.sub_[0] = 0.0;
    f.pivots_.resize(n);
    f.upper_.resize(n);

    double prev_upper = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pivot = diag[i] - (i > 0 ? sub[i] * prev_upper : 0.0);
        if (!(std::abs(pivot) > tiny)) throw SingularSystemError(i, pivot);
        f.pivots_[i] = pivot;
        prev_upper = (i + 1 < n) ? super[i] / pivot : 0.0;
        f.upper_[i] = prev_upper;
    }
    return f;
}

void TriFactorization::solve_in_place(std::span<double> x) const {
    const std::size_t n = pivots_.size();
    if (x.size() != n) {
        throw ValidationError("tridiagonal: rhs length " + std::to_string(x.size()) +
                              " does not match system size " + std::to_string(n));
    }
    x[0] /= pivots_[0];
    for (std::size_t i = 1; i < n; ++i) {
        x[i] = (x[i] - sub_[i] * x[i - 1]) / pivots_[i];
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] -= upper_[i] * x[i + 1];
    }
}

std::vector<double> TriFactorization::solve(std::span<const double> rhs) const {
    std::vector<double> x(rhs.begin(), rhs.end());
    solve_in_place(x);
    return x;
}

std::vector<double> dominance_report(std::span<const double> sub, std::span<const double> diag,
                                     std::span<const double> super) {
    check_bands(sub, diag, super);
    const std::size_t n = diag.size();
    std::vector<double> margin(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double off = (i > 0 ? std::abs(sub[i]) : 0.0) + (i + 1 < n ? std::abs(super[i]) : 0.0);
        margin[i] = std::abs(diag[i]) - off;
    }
    return margin;
}

}  // namespace tfbs
