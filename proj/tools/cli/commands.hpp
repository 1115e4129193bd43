#pragma once

#include "cli/output.hpp"
#include "cli/run_config.hpp"
#include "tfbs/verification.hpp"

namespace tfbs::cli {

/// Problem instance selected by the configuration.
ProblemSpec make_problem(const RunConfig& config);

/// Nodal surface: columns (y, tau, u), or (zeta, t, W) for black-scholes.
Report cmd_solve(const RunConfig& config);

/// Black-scholes surface in price coordinates; with present_only, just t = 0.
Report cmd_price(const RunConfig& config);

/// Refinement study on the manufactured problem. A time sweep doubles N from
/// steps_n at fixed J; a space sweep doubles J from grid_j with dtau = dy^2.
Report cmd_converge(const RunConfig& config);

/// Computed-versus-printed comparison for each requested table.
Report cmd_tables(const RunConfig& config);

/// Metadata lines shared by every command: the resolved configuration plus
/// the calibrated L2 convention.
std::vector<std::pair<std::string, std::string>> report_metadata(const std::string& command,
                                                                  const RunConfig& config,
                                                                  const Calibration& calibration);

}  // namespace tfbs::cli
