#include "tfbs/fractional_time.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tfbs/errors.hpp"

namespace tfbs {

FractionalWeights FractionalWeights::make(double mu, double dtau, std::size_t n_steps) {
    if (!(mu > 0.0 && mu < 1.0)) {
        throw ValidationError("fractional order must lie in (0, 1), got " + std::to_string(mu));
    }
    if (!(dtau > 0.0) || !std::isfinite(dtau)) {
        throw ValidationError("time step must be positive, got " + std::to_string(dtau));
    }
    if (n_steps < 1) {
        throw ValidationError("need at least one time step");
    }

    const double gamma_2mu = std::tgamma(2.0 - mu);
    const double alpha = 1.0 - mu;
    const double scale = 1.0 / (std::pow(dtau, mu) * gamma_2mu);
    const double varpi = std::pow(2.0, mu - 1.0) * std::pow(dtau, -mu) / gamma_2mu;

    std::vector<double> nu(n_steps + 1, 0.0);
    for (std::size_t i = 1; i <= n_steps; ++i) {
        const double fi = static_cast<double>(i);
        nu[i] = scale * (std::pow(fi + 0.5, alpha) - std::pow(fi - 0.5, alpha));
    }
    return FractionalWeights(mu, dtau, varpi, std::move(nu));
}

double FractionalWeights::nu(std::size_t i) const {
    if (i < 1 || i >= nu_.size()) {
        throw std::out_of_range("nu index " + std::to_string(i) + " outside [1, " +
                                std::to_string(steps()) + "]");
    }
    return nu_[i];
}

void history_term(const FractionalWeights& w, const Surface& history, std::size_t n,
                  std::span<double> out) {
    if (n >= w.steps()) {
        throw ValidationError("history_term: step " + std::to_string(n) + " outside [0, " +
                              std::to_string(w.steps() - 1) + "]");
    }
    if (history.rows() < n + 1) {
        throw ValidationError("history_term: need " + std::to_string(n + 1) +
                              " history levels, have " + std::to_string(history.rows()));
    }
    if (out.size() != history.cols()) {
        throw ValidationError("history_term: output length " + std::to_string(out.size()) +
                              " does not match history width " + std::to_string(history.cols()));
    }

    std::fill(out.begin(), out.end(), 0.0);
    if (n == 0) return;

    const std::size_t m = out.size();
    double* acc = out.data();

    // Inner loops run over nodes so they vectorize; this sum dominates run time.
    for (std::size_t q = 1; q + 1 <= n; ++q) {
        const double c = w.nu_drop(n - q);
        const double* u = history.row(q).data();
        for (std::size_t j = 0; j < m; ++j) acc[j] += c * u[j];
    }
    const double nu_n = w.nu(n);
    const double nu_1 = w.nu(1);
    const double* u0 = history.row(0).data();
    const double* un = history.row(n).data();
    for (std::size_t j = 0; j < m; ++j) {
        acc[j] = 2.0 * (nu_n * u0[j] - nu_1 * un[j] + acc[j]);
    }
}

std::vector<double> history_term(const FractionalWeights& w, const Surface& history,
                                 std::size_t n) {
    std::vector<double> out(history.cols());
    history_term(w, history, n, out);
    return out;
}

double discrete_caputo(const FractionalWeights& w, std::span<const double> samples,
                       std::size_t n) {
    if (samples.size() < n + 2) {
        throw ValidationError("discrete_caputo: need samples u^0..u^{n+1}");
    }
    if (n >= w.steps()) {
        throw ValidationError("discrete_caputo: step outside weight table");
    }
    double value = w.varpi() * (samples[n + 1] - samples[n]);
    if (n == 0) return value;
    value += w.nu(1) * samples[n] - w.nu(n) * samples[0];
    for (std::size_t q = 1; q + 1 <= n; ++q) {
        value -= w.nu_drop(n - q) * samples[q];
    }
    return value;
}

}  // namespace tfbs
