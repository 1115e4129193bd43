#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tfbs::cli {

enum class OutputFormat { csv, json };

/// Empty cells (monostate) are written as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

/// A flat result table plus the resolved configuration it came from.
struct Report {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Scientific notation, 16 significant digits.
std::string format_number(double value);

/// `# key = value` header lines, one header row, one line per row, LF endings.
void write_csv(std::ostream& out, const Report& report);
/// {"metadata": {...}, "columns": [...], "rows": [{column: value}, ...]}
void write_json(std::ostream& out, const Report& report);
void write_report(std::ostream& out, const Report& report, OutputFormat format);

}  // namespace tfbs::cli
