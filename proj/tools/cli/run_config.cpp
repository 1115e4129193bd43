#include "cli/run_config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cmath>
#include <set>

#include "tfbs/errors.hpp"

namespace tfbs::cli {
namespace {

template <typename T>
void layer(T& target, const std::optional<T>& file, const std::optional<T>& flag) {
    if (file) target = *file;
    if (flag) target = *flag;
}

template <typename T>
std::optional<T> pick(const std::optional<T>& file, const std::optional<T>& flag) {
    return flag ? flag : file;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (!token.empty()) out.push_back(std::stoi(token));
            token.clear();
        } else {
            token += c;
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(ProblemKind k) noexcept {
    switch (k) {
        case ProblemKind::manufactured: return "manufactured";
        case ProblemKind::black_scholes: return "black-scholes";
        case ProblemKind::zero: return "zero";
    }
    return "?";
}

std::string_view to_string(ConstantsEvaluation c) noexcept {
    return c == ConstantsEvaluation::stable ? "stable" : "closed-form";
}

std::string_view to_string(SourceSampling s) noexcept {
    return s == SourceSampling::trapezoid ? "trapezoid" : "midpoint";
}

Overrides load_config_file(const std::string& path) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(path, tree);
    } catch (const pt::ini_parser_error& e) {
        // Missing/unreadable files and syntax errors both arrive here.
        if (e.line() == 0) throw IoError("cannot read config file '" + path + "'");
        throw ValidationError("config file " + path + ": " + e.message() + " (line " +
                              std::to_string(e.line()) + ")");
    }

    Overrides o;
    std::vector<std::string> issues;
    auto as_double = [&](const std::string& key, const std::string& text) -> std::optional<double> {
        try {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used == text.size()) return v;
        } catch (const std::exception&) {
        }
        issues.push_back(key + ": not a number ('" + text + "')");
        return std::nullopt;
    };
    auto as_count = [&](const std::string& key,
                        const std::string& text) -> std::optional<std::size_t> {
        const auto v = as_double(key, text);
        if (!v) return std::nullopt;
        if (*v < 0 || std::floor(*v) != *v) {
            issues.push_back(key + ": expected a nonnegative integer");
            return std::nullopt;
        }
        return static_cast<std::size_t>(*v);
    };

    for (const auto& [key, node] : tree) {
        if (!node.empty()) {
            if (key != "market") {
                issues.push_back("unknown section [" + key + "]");
                continue;
            }
            for (const auto& [mkey, mnode] : node) {
                const std::string v = mnode.data();
                const std::string full = "market." + mkey;
                if (mkey == "rate") o.rate = as_double(full, v);
                else if (mkey == "sigma") o.volatility = as_double(full, v);
                else if (mkey == "dividend") o.dividend = as_double(full, v);
                else if (mkey == "expiry") o.expiry = as_double(full, v);
                else if (mkey == "strike") o.strike = as_double(full, v);
                else if (mkey == "zeta_min") o.zeta_min = as_double(full, v);
                else if (mkey == "zeta_max") o.zeta_max = as_double(full, v);
                else issues.push_back("unknown key " + full);
            }
            continue;
        }
        const std::string v = node.data();
        if (key == "problem") o.problem = v;
        else if (key == "option") o.option = v;
        else if (key == "mu") o.mu = as_double(key, v);
        else if (key == "p") o.tension = as_double(key, v);
        else if (key == "grid_j") o.intervals = as_count(key, v);
        else if (key == "steps_n") o.steps = as_count(key, v);
        else if (key == "constants") o.constants = v;
        else if (key == "source") o.source = v;
        else if (key == "sweep") o.sweep = v;
        else if (key == "levels") o.levels = as_count(key, v);
        else if (key == "out") o.out = v;
        else if (key == "format") o.format = v;
        else if (key == "present_only") o.present_only = (v == "true" || v == "1");
        else if (key == "tables") {
            try {
                o.tables = parse_int_list(v);
            } catch (const std::exception&) {
                issues.push_back("tables: expected a list of integers");
            }
        } else {
            issues.push_back("unknown key " + key);
        }
    }
    if (!issues.empty()) {
        std::string message = "config file " + path + ":";
        for (const auto& i : issues) message += "\n  - " + i;
        throw ValidationError(message);
    }
    return o;
}

RunConfig resolve_config(const std::string& command, const Overrides& file, const Overrides& flags) {
    RunConfig c;
    std::vector<std::string> issues;

    if (command == "price") c.problem = ProblemKind::black_scholes;
    if (command == "tables") c.constants = ConstantsEvaluation::closed_form;

    if (auto v = pick(file.problem, flags.problem)) {
        if (*v == "manufactured") c.problem = ProblemKind::manufactured;
        else if (*v == "black-scholes") c.problem = ProblemKind::black_scholes;
        else if (*v == "zero") c.problem = ProblemKind::zero;
        else issues.push_back("problem must be manufactured, black-scholes or zero (got '" + *v + "')");
    }
    if (auto v = pick(file.option, flags.option)) {
        if (*v == "call") c.option = OptionKind::call;
        else if (*v == "put") c.option = OptionKind::put;
        else issues.push_back("option must be call or put (got '" + *v + "')");
    }
    if (auto v = pick(file.constants, flags.constants)) {
        if (*v == "stable") c.constants = ConstantsEvaluation::stable;
        else if (*v == "closed-form") c.constants = ConstantsEvaluation::closed_form;
        else issues.push_back("constants must be stable or closed-form (got '" + *v + "')");
    }
    if (auto v = pick(file.source, flags.source)) {
        if (*v == "trapezoid") c.source = SourceSampling::trapezoid;
        else if (*v == "midpoint") c.source = SourceSampling::midpoint;
        else issues.push_back("source must be trapezoid or midpoint (got '" + *v + "')");
    }
    if (auto v = pick(file.sweep, flags.sweep)) {
        if (*v == "time") c.sweep = SweepKind::time;
        else if (*v == "space") c.sweep = SweepKind::space;
        else issues.push_back("sweep must be time or space (got '" + *v + "')");
    }
    if (auto v = pick(file.format, flags.format)) {
        if (*v == "csv") c.format = OutputFormat::csv;
        else if (*v == "json") c.format = OutputFormat::json;
        else issues.push_back("format must be csv or json (got '" + *v + "')");
    }

    layer(c.mu, file.mu, flags.mu);
    layer(c.tension, file.tension, flags.tension);
    layer(c.intervals, file.intervals, flags.intervals);
    layer(c.steps, file.steps, flags.steps);
    layer(c.levels, file.levels, flags.levels);
    layer(c.out, file.out, flags.out);
    layer(c.market.rate, file.rate, flags.rate);
    layer(c.market.volatility, file.volatility, flags.volatility);
    layer(c.market.dividend, file.dividend, flags.dividend);
    layer(c.market.expiry, file.expiry, flags.expiry);
    layer(c.market.strike, file.strike, flags.strike);
    if (auto v = pick(file.zeta_min, flags.zeta_min)) c.market.zeta_min = *v;
    if (auto v = pick(file.zeta_max, flags.zeta_max)) c.market.zeta_max = *v;
    c.tables = flags.tables.empty() ? file.tables : flags.tables;
    c.present_only = file.present_only || flags.present_only;

    if (command != "tables") {
        if (!(c.mu > 0.0 && c.mu < 1.0)) issues.push_back("mu must lie in (0, 1)");
        if (!(c.tension > 0.0)) issues.push_back("p (spline tension) must be positive");
        if (c.intervals < 2) issues.push_back("grid-j must be at least 2");
        if (c.steps < 1) issues.push_back("steps-n must be at least 1");
    }
    if (c.problem == ProblemKind::black_scholes && command != "tables") {
        try {
            c.market.validate();
        } catch (const ValidationError& e) {
            issues.push_back(e.what());
        }
    }
    if (command == "converge") {
        if (c.levels < 2) issues.push_back("converge needs at least 2 refinement levels");
        if (c.problem != ProblemKind::manufactured) {
            issues.push_back("converge requires the manufactured problem (exact solution)");
        }
    }
    if (command == "tables") {
        if (c.tables.empty()) issues.push_back("tables: no table ids given");
        const std::set<int> known{2, 3, 4, 5, 6};
        for (int id : c.tables) {
            if (!known.contains(id)) {
                issues.push_back("unknown table id " + std::to_string(id) + " (expected 2..6)");
            }
        }
    }

    if (!issues.empty()) {
        std::string message = "invalid configuration:";
        for (const auto& i : issues) message += "\n  - " + i;
        throw ValidationError(message);
    }
    return c;
}

std::vector<std::pair<std::string, std::string>> RunConfig::describe() const {
    std::vector<std::pair<std::string, std::string>> d;
    d.emplace_back("problem", std::string(to_string(problem)));
    if (problem == ProblemKind::black_scholes) {
        d.emplace_back("option", option == OptionKind::call ? "call" : "put");
    }
    d.emplace_back("mu", format_number(mu));
    d.emplace_back("p", format_number(tension));
    d.emplace_back("grid_j", std::to_string(intervals));
    d.emplace_back("steps_n", std::to_string(steps));
    d.emplace_back("constants", std::string(to_string(constants)));
    d.emplace_back("source", std::string(to_string(source)));
    if (problem == ProblemKind::black_scholes) {
        d.emplace_back("market.rate", format_number(market.rate));
        d.emplace_back("market.sigma", format_number(market.volatility));
        d.emplace_back("market.dividend", format_number(market.dividend));
        d.emplace_back("market.expiry", format_number(market.expiry));
        d.emplace_back("market.strike", format_number(market.strike));
        if (market.zeta_min) d.emplace_back("market.zeta_min", format_number(*market.zeta_min));
        if (market.zeta_max) d.emplace_back("market.zeta_max", format_number(*market.zeta_max));
    }
    d.emplace_back("format", format == OutputFormat::csv ? "csv" : "json");
    return d;
}

}  // namespace tfbs::cli
