#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cli/output.hpp"
#include "tfbs/problems.hpp"
#include "tfbs/time_marcher.hpp"

namespace tfbs::cli {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ProblemKind { manufactured, black_scholes, zero };
enum class SweepKind { time, space };

/// Fully resolved parameters for one CLI invocation.
struct RunConfig {
    ProblemKind problem = ProblemKind::manufactured;
    OptionKind option = OptionKind::call;
    double mu = 0.5;
    double tension = 1.0;
    std::size_t intervals = 50;  // J
    std::size_t steps = 50;      // N
    ConstantsEvaluation constants = ConstantsEvaluation::stable;
    SourceSampling source = SourceSampling::trapezoid;
    MarketParams market;

    // converge
    SweepKind sweep = SweepKind::time;
    std::size_t levels = 0;

    // tables
    std::vector<int> tables;

    // price
    bool present_only = false;

    std::string out;  // empty: stdout
    OutputFormat format = OutputFormat::csv;

    /// Resolved configuration as ordered key/value pairs for output headers.
    std::vector<std::pair<std::string, std::string>> describe() const;
};

/// Every optional is a flag the user may pass; set fields override the
/// config file, which overrides the defaults.
struct Overrides {
    std::optional<std::string> problem;
    std::optional<std::string> option;
    std::optional<double> mu;
    std::optional<double> tension;
    std::optional<std::size_t> intervals;
    std::optional<std::size_t> steps;
    std::optional<std::string> constants;
    std::optional<std::string> source;
    std::optional<double> rate;
    std::optional<double> volatility;
    std::optional<double> dividend;
    std::optional<double> expiry;
    std::optional<double> strike;
    std::optional<double> zeta_min;
    std::optional<double> zeta_max;
    std::optional<std::string> sweep;
    std::optional<std::size_t> levels;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::vector<int> tables;
    bool present_only = false;
};

/// Reads an INI-style file of `key = value` lines with an optional
/// [market] section into an Overrides value. Unknown keys are errors.
Overrides load_config_file(const std::string& path);

/// Layers defaults <- file <- flags and checks every constraint for
/// `command`, throwing ValidationError that lists all violations.
RunConfig resolve_config(const std::string& command, const Overrides& file, const Overrides& flags);

std::string_view to_string(ProblemKind k) noexcept;
std::string_view to_string(ConstantsEvaluation c) noexcept;
std::string_view to_string(SourceSampling s) noexcept;

}  // namespace tfbs::cli
