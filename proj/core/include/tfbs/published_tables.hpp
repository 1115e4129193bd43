#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tfbs {

enum class ErrorMetric { l2, linf };

/// A column printed for another method, kept for side-by-side display.
struct ComparisonValue {
    std::string_view method;
    double error = 0.0;
    std::optional<double> rate;
};

struct PublishedRow {
    double mu = 0.0;
    std::size_t intervals = 0;  // J
    std::size_t steps = 0;      // N
    double error = 0.0;
    std::optional<double> rate;
    std::vector<ComparisonValue> comparisons;
};

/// Reference convergence data for the manufactured problem. Rows of equal mu
/// form one refinement series, in refinement order.
struct PublishedTable {
    int id = 0;
    std::string_view caption;
    double tension = 0.0;
    ErrorMetric metric = ErrorMetric::l2;
    /// Whether consecutive rows of a series are a factor-2 refinement with a
    /// printed rate.
    bool has_rates = false;
    double error_tolerance = 0.10;  // relative
    double rate_tolerance = 0.03;   // absolute
    std::vector<PublishedRow> rows;
};

std::span<const int> published_table_ids();

/// Throws ValidationError for an unknown id.
const PublishedTable& published_table(int id);

}  // namespace tfbs
