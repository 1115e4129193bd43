#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tfbs {

/// Uniform space-time mesh on [y_a, y_b] x [0, horizon] with J space
/// intervals and N time steps.
class Grid {
public:
    static Grid make(double y_a, double y_b, std::size_t intervals, double horizon,
                     std::size_t steps);

    double y_a() const noexcept { return y_a_; }
    double y_b() const noexcept { return y_b_; }
    double horizon() const noexcept { return horizon_; }
    std::size_t intervals() const noexcept { return intervals_; }
    std::size_t steps() const noexcept { return steps_; }
    std::size_t nodes() const noexcept { return intervals_ + 1; }

    double dy() const noexcept { return (y_b_ - y_a_) / static_cast<double>(intervals_); }
    double dtau() const noexcept { return horizon_ / static_cast<double>(steps_); }

    // Nodes are computed as y_a + j*dy, with the last node pinned to y_b.
    double node(std::size_t j) const noexcept;
    double time(std::size_t n) const noexcept;
    std::vector<double> nodes_vector() const;

private:
    Grid(double y_a, double y_b, std::size_t intervals, double horizon, std::size_t steps)
        : y_a_(y_a), y_b_(y_b), horizon_(horizon), intervals_(intervals), steps_(steps) {}

    double y_a_;
    double y_b_;
    double horizon_;
    std::size_t intervals_;
    std::size_t steps_;
};

/// Dense row-major (time level) x (node) array of nodal values.
class Surface {
public:
    Surface() = default;
    Surface(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::span<double> row(std::size_t n) noexcept { return {data_.data() + n * cols_, cols_}; }
    std::span<const double> row(std::size_t n) const noexcept {
        return {data_.data() + n * cols_, cols_};
    }

    double& operator()(std::size_t n, std::size_t j) noexcept { return data_[n * cols_ + j]; }
    double operator()(std::size_t n, std::size_t j) const noexcept { return data_[n * cols_ + j]; }

    std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const Surface&, const Surface&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace tfbs
