#include "tfbs/grid.hpp"

#include <cmath>
#include <string>

#include "tfbs/errors.hpp"

namespace tfbs {

Grid Grid::make(double y_a, double y_b, std::size_t intervals, double horizon,
                std::size_t steps) {
    if (!std::isfinite(y_a) || !std::isfinite(y_b) || !(y_a < y_b)) {
        throw ValidationError("grid: need finite y_a < y_b, got [" + std::to_string(y_a) + ", " +
                              std::to_string(y_b) + "]");
    }
    if (intervals < 2) {
        throw ValidationError("grid: need at least 2 space intervals, got " +
                              std::to_string(intervals));
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw ValidationError("grid: horizon must be positive, got " + std::to_string(horizon));
    }
    if (steps < 1) {
        throw ValidationError("grid: need at least 1 time step");
    }
    return Grid(y_a, y_b, intervals, horizon, steps);
}

double Grid::node(std::size_t j) const noexcept {
    if (j == intervals_) return y_b_;
    return y_a_ + static_cast<double>(j) * dy();
}

double Grid::time(std::size_t n) const noexcept {
    if (n == steps_) return horizon_;
    return static_cast<double>(n) * dtau();
}

std::vector<double> Grid::nodes_vector() const {
    std::vector<double> y(nodes());
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = node(j);
    return y;
}

}  // namespace tfbs
