#include "cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace tfbs::cli {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.15e", value);
    return buffer;
}

namespace {

std::string csv_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const {
            if (v.find_first_of(",\"\n") == std::string::npos) return v;
            std::string quoted = "\"";
            for (char c : v) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            return quoted + '"';
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double v) const {
            if (!std::isfinite(v)) return format_number(v);
            return v;
        }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

void write_csv(std::ostream& out, const Report& report) {
    for (const auto& [key, value] : report.metadata) out << "# " << key << " = " << value << '\n';
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
        out << (c ? "," : "") << report.columns[c];
    }
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const Report& report) {
    nlohmann::ordered_json doc;
    doc["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.metadata) doc["metadata"][key] = value;
    doc["columns"] = report.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json item = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size() && c < report.columns.size(); ++c) {
            item[report.columns[c]] = json_cell(row[c]);
        }
        doc["rows"].push_back(std::move(item));
    }
    out << doc.dump(2) << '\n';
}

void write_report(std::ostream& out, const Report& report, OutputFormat format) {
    if (format == OutputFormat::json) {
        write_json(out, report);
    } else {
        write_csv(out, report);
    }
}

}  // namespace tfbs::cli
