#include "tfbs/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tfbs/errors.hpp"

namespace tfbs {

void ProblemSpec::validate() const {
    std::vector<std::string> issues;
    if (!(kappa.diffusion > 0.0)) issues.push_back("k1 must be positive");
    if (!(kappa.reaction > 0.0)) issues.push_back("k3 must be positive");
    if (!std::isfinite(kappa.drift)) issues.push_back("k2 must be finite");
    if (!(y_a < y_b)) issues.push_back("domain needs y_a < y_b");
    if (!(horizon > 0.0)) issues.push_back("horizon must be positive");
    if (!source) issues.push_back("source term missing");
    if (!initial) issues.push_back("initial data missing");
    if (!left_boundary || !right_boundary) issues.push_back("boundary data missing");
    if (issues.empty()) return;

    std::string message = "invalid problem '" + name + "':";
    for (const auto& issue : issues) message += " " + issue + ";";
    message.pop_back();
    throw ValidationError(message);
}

ProblemSpec manufactured_problem(double mu) {
    if (!(mu > 0.0 && mu < 1.0)) {
        throw ValidationError("manufactured problem: mu must lie in (0, 1), got " +
                              std::to_string(mu));
    }
    MarketParams market;
    const PdeCoefficients kappa = market_coefficients(market);
    const double k1 = kappa.diffusion;
    const double k2 = kappa.drift;
    const double k3 = kappa.reaction;
    const double gamma_2mu = std::tgamma(2.0 - mu);
    const double gamma_3mu = std::tgamma(3.0 - mu);

    ProblemSpec spec;
    spec.name = "manufactured";
    spec.kappa = kappa;
    spec.y_a = 0.0;
    spec.y_b = 1.0;
    spec.horizon = 1.0;
    spec.source = [=](double y, double tau) {
        const double shape = y * y * (1.0 - y);
        const double time_part = 2.0 * std::pow(tau, 2.0 - mu) / gamma_3mu +
                                 2.0 * std::pow(tau, 1.0 - mu) / gamma_2mu;
        const double spatial = k1 * (2.0 - 6.0 * y) + k2 * (2.0 * y - 3.0 * y * y) - k3 * shape;
        return time_part * shape - (tau + 1.0) * (tau + 1.0) * spatial;
    };
    spec.initial = [](double y) { return y * y * (1.0 - y); };
    spec.initial_slope = [](double y) { return 2.0 * y - 3.0 * y * y; };
    spec.left_boundary = [](double) { return 0.0; };
    spec.right_boundary = [](double) { return 0.0; };
    spec.exact = [](double y, double tau) { return (tau + 1.0) * (tau + 1.0) * y * y * (1.0 - y); };
    return spec;
}

ProblemSpec constant_problem(double value, const PdeCoefficients& kappa) {
    ProblemSpec spec;
    spec.name = "constant";
    spec.kappa = kappa;
    spec.source = [g = kappa.reaction * value](double, double) { return g; };
    spec.initial = [value](double) { return value; };
    spec.initial_slope = [](double) { return 0.0; };
    spec.left_boundary = [value](double) { return value; };
    spec.right_boundary = [value](double) { return value; };
    spec.exact = [value](double, double) { return value; };
    return spec;
}

void MarketParams::validate() const {
    std::vector<std::string> issues;
    if (!(rate > 0.0)) issues.push_back("rate r must be positive");
    if (!(volatility > 0.0)) issues.push_back("volatility sigma must be positive");
    if (!(dividend >= 0.0)) issues.push_back("dividend D must be nonnegative");
    if (!(expiry > 0.0)) issues.push_back("expiry T must be positive");
    if (!(strike > 0.0)) issues.push_back("strike K must be positive");
    if (zeta_min && !(*zeta_min > 0.0)) issues.push_back("zeta_min must be positive");
    if (strike > 0.0) {
        if (zeta_min && !(*zeta_min < strike)) issues.push_back("zeta_min must lie below the strike");
        if (zeta_max && !(*zeta_max > strike)) issues.push_back("zeta_max must lie above the strike");
    }
    if (issues.empty()) return;

    std::string message = "invalid market parameters:";
    for (const auto& issue : issues) message += " " + issue + ";";
    message.pop_back();
    throw ValidationError(message);
}

PdeCoefficients market_coefficients(const MarketParams& m) {
    const double k1 = 0.5 * m.volatility * m.volatility;
    return {k1, m.rate - m.dividend - k1, m.rate};
}

double payoff(OptionKind kind, double zeta, double strike) {
    return kind == OptionKind::call ? std::max(zeta - strike, 0.0) : std::max(strike - zeta, 0.0);
}

ProblemSpec black_scholes_problem(const MarketParams& m, OptionKind kind) {
    m.validate();
    const double log_strike = std::log(m.strike);
    const double width = 4.0 * m.volatility * std::sqrt(m.expiry);

    ProblemSpec spec;
    spec.name = kind == OptionKind::call ? "black-scholes-call" : "black-scholes-put";
    spec.kappa = market_coefficients(m);
    spec.y_a = m.zeta_min ? std::log(*m.zeta_min) : log_strike - width;
    spec.y_b = m.zeta_max ? std::log(*m.zeta_max) : log_strike + width;
    spec.horizon = m.expiry;
    spec.source = [](double, double) { return 0.0; };

    const double strike = m.strike;
    const double r = m.rate;
    const double d = m.dividend;
    spec.initial = [kind, strike](double y) { return payoff(kind, std::exp(y), strike); };
    spec.initial_slope = [kind, log_strike](double y) {
        if (y == log_strike) return std::numeric_limits<double>::quiet_NaN();
        const bool in_the_money = kind == OptionKind::call ? y > log_strike : y < log_strike;
        if (!in_the_money) return 0.0;
        return kind == OptionKind::call ? std::exp(y) : -std::exp(y);
    };

    const double y_a = spec.y_a;
    const double y_b = spec.y_b;
    if (kind == OptionKind::call) {
        spec.left_boundary = [](double) { return 0.0; };
        spec.right_boundary = [=](double tau) {
            return std::exp(y_b - d * tau) - strike * std::exp(-r * tau);
        };
    } else {
        spec.left_boundary = [=](double tau) {
            return strike * std::exp(-r * tau) - std::exp(y_a - d * tau);
        };
        spec.right_boundary = [](double) { return 0.0; };
    }
    return spec;
}

std::vector<PricePoint> to_financial(const Surface& nodal, const Grid& grid,
                                     const MarketParams& m) {
    if (nodal.rows() != grid.steps() + 1 || nodal.cols() != grid.nodes()) {
        throw ValidationError("to_financial: surface shape does not match grid");
    }
    std::vector<PricePoint> out;
    out.reserve(nodal.rows() * nodal.cols());
    for (std::size_t n = 0; n < nodal.rows(); ++n) {
        const double t = m.expiry - grid.time(n);
        for (std::size_t j = 0; j < nodal.cols(); ++j) {
            out.push_back({std::exp(grid.node(j)), t, nodal(n, j)});
        }
    }
    return out;
}

}  // namespace tfbs
