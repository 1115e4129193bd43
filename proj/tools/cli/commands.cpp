#include "cli/commands.hpp"

#include <cmath>
#include <string>

#include "tfbs/errors.hpp"

namespace tfbs::cli {
namespace {

SchemeOptions scheme_of(const RunConfig& c) {
    return SchemeOptions{c.mu, c.tension, c.constants, c.source};
}

Cell optional_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

const Calibration& calibration() {
    static const Calibration c = calibrate_l2_convention();
    return c;
}

ProblemSpec zero_problem() {
    ProblemSpec spec = manufactured_problem(0.5);
    spec.name = "zero";
    spec.source = [](double, double) { return 0.0; };
    spec.initial = [](double) { return 0.0; };
    spec.initial_slope = [](double) { return 0.0; };
    spec.exact = [](double, double) { return 0.0; };
    return spec;
}

}  // namespace

ProblemSpec make_problem(const RunConfig& config) {
    switch (config.problem) {
        case ProblemKind::manufactured: return manufactured_problem(config.mu);
        case ProblemKind::black_scholes: return black_scholes_problem(config.market, config.option);
        case ProblemKind::zero: return zero_problem();
    }
    throw ValidationError("unknown problem kind");
}

std::vector<std::pair<std::string, std::string>> report_metadata(const std::string& command,
                                                                  const RunConfig& config,
                                                                  const Calibration& cal) {
    std::vector<std::pair<std::string, std::string>> meta;
    meta.emplace_back("command", command);
    for (auto& kv : config.describe()) meta.push_back(std::move(kv));
    meta.emplace_back("l2_convention", std::string(to_string(cal.chosen)));
    meta.emplace_back("l2_calibration",
                      "printed " + format_number(cal.printed) + ", weighted " +
                          format_number(cal.weighted) + ", unweighted " +
                          format_number(cal.unweighted) +
                          (cal.matched ? ", matched" : ", unmatched"));
    meta.emplace_back("error_sampling", "final time, grid nodes");
    return meta;
}

Report cmd_solve(const RunConfig& config) {
    const ProblemSpec spec = make_problem(config);
    const Grid grid = make_grid(spec, config.intervals, config.steps);
    const SolveResult result = run(spec, grid, scheme_of(config));

    Report report;
    report.metadata = report_metadata("solve", config, calibration());
    report.metadata.emplace_back("y_a", format_number(grid.y_a()));
    report.metadata.emplace_back("y_b", format_number(grid.y_b()));
    report.metadata.emplace_back("horizon", format_number(grid.horizon()));

    if (config.problem == ProblemKind::black_scholes) {
        report.columns = {"zeta", "t", "W"};
        for (const auto& p : to_financial(result.nodal, grid, config.market)) {
            if (config.present_only && p.t != 0.0) continue;
            report.rows.push_back({p.zeta, p.t, p.price});
        }
        return report;
    }

    report.columns = {"y", "tau", "u"};
    report.rows.reserve(result.nodal.rows() * result.nodal.cols());
    for (std::size_t n = 0; n < result.nodal.rows(); ++n) {
        for (std::size_t j = 0; j < result.nodal.cols(); ++j) {
            report.rows.push_back({grid.node(j), grid.time(n), result.nodal(n, j)});
        }
    }
    return report;
}

Report cmd_price(const RunConfig& config) {
    RunConfig c = config;
    c.problem = ProblemKind::black_scholes;
    Report report = cmd_solve(c);
    report.metadata.front().second = "price";
    return report;
}

Report cmd_converge(const RunConfig& config) {
    const Calibration& cal = calibration();
    std::vector<std::pair<std::size_t, std::size_t>> levels;
    for (std::size_t k = 0; k < config.levels; ++k) {
        if (config.sweep == SweepKind::time) {
            levels.emplace_back(config.intervals, config.steps << k);
        } else {
            const std::size_t j = config.intervals << k;
            levels.emplace_back(j, j * j);
        }
    }

    const SchemeOptions scheme = scheme_of(config);
    std::function<ErrorReport(std::size_t)> task = [&](std::size_t i) {
        return measure_manufactured(levels[i].first, levels[i].second, scheme);
    };
    std::vector<ErrorReport> reports = parallel_indexed<ErrorReport>(levels.size(), 0, task);
    attach_rates(reports, cal.chosen);

    Report report;
    report.metadata = report_metadata("converge", config, cal);
    report.metadata.emplace_back("sweep", config.sweep == SweepKind::time ? "time" : "space");
    report.metadata.emplace_back("levels", std::to_string(config.levels));
    report.columns = {"mu", "p", "J", "N", "l2", "linf", "rate_l2", "rate_linf"};
    for (const auto& r : reports) {
        report.rows.push_back({r.mu, r.tension, static_cast<std::int64_t>(r.intervals),
                               static_cast<std::int64_t>(r.steps), r.norms.l2_as(cal.chosen),
                               r.norms.linf, optional_cell(r.rate_l2),
                               optional_cell(r.rate_linf)});
    }
    return report;
}

Report cmd_tables(const RunConfig& config) {
    const Calibration& cal = calibration();
    Report report;
    report.metadata = report_metadata("tables", config, cal);
    report.columns = {"table",         "mu",          "p",          "J",
                      "N",             "metric",      "computed",   "printed",
                      "deviation",     "computed_rate", "printed_rate", "rate_deviation",
                      "pass",          "comparisons"};

    ReproductionOptions options;
    options.convention = cal.chosen;
    options.constants = config.constants;
    options.source = config.source;

    for (int id : config.tables) {
        const TableReproduction t = reproduce_table(id, options);
        const bool l2 = t.table->metric == ErrorMetric::l2;
        for (const auto& row : t.rows) {
            std::string comparisons;
            for (const auto& cmp : row.printed.comparisons) {
                if (!comparisons.empty()) comparisons += ";";
                comparisons += std::string(cmp.method) + "=" + format_number(cmp.error);
                if (cmp.rate) comparisons += "@" + format_number(*cmp.rate);
            }
            report.rows.push_back({static_cast<std::int64_t>(id), row.printed.mu,
                                   t.table->tension,
                                   static_cast<std::int64_t>(row.printed.intervals),
                                   static_cast<std::int64_t>(row.printed.steps),
                                   std::string(l2 ? "l2" : "linf"), row.computed_error,
                                   row.printed.error, row.error_deviation,
                                   optional_cell(row.computed_rate),
                                   optional_cell(row.printed.rate),
                                   optional_cell(row.rate_deviation), row.passed(), comparisons});
        }
    }
    return report;
}

}  // namespace tfbs::cli
