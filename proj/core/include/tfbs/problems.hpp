#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tfbs/collocation.hpp"
#include "tfbs/grid.hpp"

namespace tfbs {

using SpaceFunction = std::function<double(double y)>;
using TimeFunction = std::function<double(double tau)>;
using SpaceTimeFunction = std::function<double(double y, double tau)>;

/// D^mu u = k1 u_yy + k2 u_y - k3 u + g on (y_a, y_b) x (0, horizon],
/// u(y_a, tau) = h1(tau), u(y_b, tau) = h2(tau), u(y, 0) = u0(y).
struct ProblemSpec {
    std::string name;
    PdeCoefficients kappa;
    double y_a = 0.0;
    double y_b = 1.0;
    double horizon = 1.0;
    SpaceTimeFunction source;
    SpaceFunction initial;
    /// Analytic u0'. A non-finite return (e.g. at a payoff kink) makes the
    /// solver fall back to one-sided differences.
    std::optional<SpaceFunction> initial_slope;
    TimeFunction left_boundary;
    TimeFunction right_boundary;
    std::optional<SpaceTimeFunction> exact;

    /// Throws ValidationError listing every violated constraint.
    void validate() const;
};

/// Parameters of the transformed Black-Scholes model.
inline constexpr double kReferenceRate = 0.05;
inline constexpr double kReferenceVolatility = 0.25;
inline constexpr double kReferenceDividend = 0.0;

/// Test problem with exact solution u = (tau+1)^2 y^2 (1-y) on [0,1] x [0,1],
/// zero boundaries, reference market coefficients (r=0.05, sigma=0.25, D=0).
/// The source depends on mu.
ProblemSpec manufactured_problem(double mu);

/// Constant state u = C with g = k3 C and h1 = h2 = C. An exact fixed point
/// of the discrete step map.
ProblemSpec constant_problem(double value, const PdeCoefficients& kappa);

struct MarketParams {
    double rate = kReferenceRate;
    double volatility = kReferenceVolatility;
    double dividend = kReferenceDividend;
    double expiry = 1.0;
    double strike = 1.0;
    /// Truncation of the price axis. Defaults to K exp(-+4 sigma sqrt(T)).
    std::optional<double> zeta_min;
    std::optional<double> zeta_max;

    void validate() const;
};

enum class OptionKind { call, put };

/// k1 = sigma^2/2, k2 = r - D - k1, k3 = r.
PdeCoefficients market_coefficients(const MarketParams& m);

/// Log-price problem u(y, tau) = W(e^y, T - tau) with payoff initial data
/// and far-field boundary values h(tau) from the classical asymptotics.
ProblemSpec black_scholes_problem(const MarketParams& m, OptionKind kind);

double payoff(OptionKind kind, double zeta, double strike);

struct PricePoint {
    double zeta = 0.0;
    double t = 0.0;
    double price = 0.0;
};

/// Maps nodal u(y_j, tau_n) to W(e^{y_j}, T - tau_n). Rows are emitted in
/// time-level order, nodes ascending within a row.
std::vector<PricePoint> to_financial(const Surface& nodal, const Grid& grid, const MarketParams& m);

}  // namespace tfbs
