#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfbs {

/// Thrown when caller-supplied parameters violate a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure during a solve (zero pivot, non-convergent quadrature).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A tridiagonal factorization hit a (near-)zero pivot.
class SingularSystemError : public SolverError {
public:
    SingularSystemError(std::size_t row, double pivot)
        : SolverError("singular tridiagonal system: pivot " + std::to_string(pivot) +
                      " at row " + std::to_string(row)),
          row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

}  // namespace tfbs
