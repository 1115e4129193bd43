#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tfbs/grid.hpp"

namespace tfbs {

/// Weights of the half-node (tau_{n+1/2}) discretization of the Caputo
/// derivative of order mu in (0, 1):
///
///   D u(tau_{n+1/2}) ~ varpi (u^{n+1} - u^n) + nu_1 u^n - nu_n u^0
///                      + sum_{q=1}^{n-1} (nu_{n-q+1} - nu_{n-q}) u^q
///
///   varpi = 2^{mu-1} dtau^{-mu} / Gamma(2-mu)
///   nu_i  = ((i+1/2)^{1-mu} - (i-1/2)^{1-mu}) / (dtau^mu Gamma(2-mu))
///
/// At n = 0 every nu-term is absent, leaving varpi (u^1 - u^0).
/// Immutable once built; share freely across threads.
class FractionalWeights {
public:
    static FractionalWeights make(double mu, double dtau, std::size_t n_steps);

    double mu() const noexcept { return mu_; }
    double dtau() const noexcept { return dtau_; }
    double varpi() const noexcept { return varpi_; }
    std::size_t steps() const noexcept { return nu_.size() - 1; }

    /// nu_i for 1 <= i <= steps().
    double nu(std::size_t i) const;
    /// nu_k - nu_{k+1}, the coefficient of u^{n-k} in the history sum
    /// (1 <= k <= steps() - 1).
    double nu_drop(std::size_t k) const noexcept { return nu_[k] - nu_[k + 1]; }

private:
    FractionalWeights(double mu, double dtau, double varpi, std::vector<double> nu)
        : mu_(mu), dtau_(dtau), varpi_(varpi), nu_(std::move(nu)) {}

    double mu_;
    double dtau_;
    double varpi_;
    std::vector<double> nu_;  // nu_[0] unused
};

/// Writes 2 (nu_n U^0 - nu_1 U^n + sum_{q=1}^{n-1} (nu_{n-q} - nu_{n-q+1}) U^q)
/// into `out`. Rows 0..n of `history` are read. For n = 0 the result is zero.
void history_term(const FractionalWeights& w, const Surface& history, std::size_t n,
                  std::span<double> out);

std::vector<double> history_term(const FractionalWeights& w, const Surface& history,
                                 std::size_t n);

/// Full discrete operator applied to a scalar time series u^0..u^{n+1},
/// approximating the Caputo derivative at tau_{n+1/2}.
double discrete_caputo(const FractionalWeights& w, std::span<const double> samples,
                       std::size_t n);

}  // namespace tfbs
