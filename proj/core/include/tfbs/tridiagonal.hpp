#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tfbs {

/// Thomas-algorithm factorization of a tridiagonal matrix, reusable across
/// right-hand sides. Bands all have length n; sub[0] and super[n-1] are
/// ignored. No pivoting: a pivot below 1e-14 * max|diag| raises
/// SingularSystemError naming the row.
class TriFactorization {
public:
    static TriFactorization factorize(std::span<const double> sub, std::span<const double> diag,
                                      std::span<const double> super);

    std::size_t size() const noexcept { return pivots_.size(); }
    std::span<const double> pivots() const noexcept { return pivots_; }

    std::vector<double> solve(std::span<const double> rhs) const;
    /// Overwrites `x` (initially the right-hand side) with the solution.
    void solve_in_place(std::span<double> x) const;

private:
    std::vector<double> sub_;
    std::vector<double> pivots_;
    std::vector<double> upper_;  // super[i] / pivot[i]
};

/// Per-row diagonal-dominance margin |diag| - (|sub| + |super|). Diagnostic
/// only; negative margins are reported, not rejected.
std::vector<double> dominance_report(std::span<const double> sub, std::span<const double> diag,
                                     std::span<const double> super);

}  // namespace tfbs
