// tfbs: command-line front end for the time-fractional Black-Scholes solver.
//
// Exit codes: 0 success, 1 validation error, 2 runtime/solver error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "tfbs/errors.hpp"

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kRuntime = 2, kIo = 3 };

void add_shared_flags(CLI::App* cmd, tfbs::cli::Overrides& o, std::string& config_path) {
    cmd->add_option("--config", config_path, "key = value configuration file");
    cmd->add_option("--mu", o.mu, "fractional order in (0, 1)");
    cmd->add_option("--p", o.tension, "exponential spline tension (> 0)");
    cmd->add_option("--grid-j", o.intervals, "number of space intervals J");
    cmd->add_option("--steps-n", o.steps, "number of time steps N");
    cmd->add_option("--out", o.out, "output file (default: stdout)");
    cmd->add_option("--format", o.format, "csv | json");
    cmd->add_option("--constants", o.constants, "stable | closed-form spline constants");
    cmd->add_option("--source", o.source, "trapezoid | midpoint source sampling");
}

void add_market_flags(CLI::App* cmd, tfbs::cli::Overrides& o) {
    cmd->add_option("--option", o.option, "call | put");
    cmd->add_option("--rate", o.rate, "risk-free rate r");
    cmd->add_option("--sigma", o.volatility, "volatility");
    cmd->add_option("--dividend", o.dividend, "dividend rate D");
    cmd->add_option("--expiry", o.expiry, "expiry T");
    cmd->add_option("--strike", o.strike, "strike K");
    cmd->add_option("--zeta-min", o.zeta_min, "lower truncation of the price axis");
    cmd->add_option("--zeta-max", o.zeta_max, "upper truncation of the price axis");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-fractional Black-Scholes solver (Crank-Nicolson / exponential B-spline)"};
    app.require_subcommand(1);

    tfbs::cli::Overrides flags;
    std::string config_path;

    auto* solve = app.add_subcommand("solve", "solve one problem and write the nodal surface");
    add_shared_flags(solve, flags, config_path);
    add_market_flags(solve, flags);
    solve->add_option("--problem", flags.problem, "manufactured | black-scholes | zero");

    auto* price = app.add_subcommand("price", "price an option on the log-price grid");
    add_shared_flags(price, flags, config_path);
    add_market_flags(price, flags);
    price->add_flag("--present-only", flags.present_only, "emit only the t = 0 row");

    auto* converge = app.add_subcommand("converge", "refinement study on the manufactured problem");
    add_shared_flags(converge, flags, config_path);
    converge->add_option("--sweep", flags.sweep, "time | space");
    converge->add_option("--levels", flags.levels, "number of refinement levels (>= 2)");

    auto* tables = app.add_subcommand("tables", "reproduce the reference convergence tables");
    add_shared_flags(tables, flags, config_path);
    tables->add_option("ids", flags.tables, "table ids (2..6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        tfbs::cli::Overrides file;
        if (!config_path.empty()) file = tfbs::cli::load_config_file(config_path);
        const tfbs::cli::RunConfig config = tfbs::cli::resolve_config(command, file, flags);

        tfbs::cli::Report report;
        if (command == "solve") report = tfbs::cli::cmd_solve(config);
        else if (command == "price") report = tfbs::cli::cmd_price(config);
        else if (command == "converge") report = tfbs::cli::cmd_converge(config);
        else report = tfbs::cli::cmd_tables(config);

        if (config.out.empty()) {
            tfbs::cli::write_report(std::cout, report, config.format);
            std::cout.flush();
            if (!std::cout) throw tfbs::cli::IoError("failed writing to stdout");
        } else {
            std::ofstream out(config.out, std::ios::binary);
            if (!out) throw tfbs::cli::IoError("cannot open output file '" + config.out + "'");
            tfbs::cli::write_report(out, report, config.format);
            out.close();
            if (!out) throw tfbs::cli::IoError("failed writing '" + config.out + "'");
        }
    } catch (const tfbs::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const tfbs::cli::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kOk;
}
