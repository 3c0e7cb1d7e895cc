#include "mcbvp/runner.hpp"

#include "mcbvp/examples.hpp"
#include "mcbvp/problem_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <utility>

namespace mcbvp {

namespace {

std::string to_chars_string(double v, std::chars_format fmt, int precision) {
    char buffer[64];
    const auto result = precision >= 0
                            ? std::to_chars(buffer, buffer + sizeof buffer, v, fmt, precision)
                            : std::to_chars(buffer, buffer + sizeof buffer, v, fmt);
    return std::string(buffer, result.ptr);
}

std::string pad_left(const std::string& text, std::size_t width) {
    if (text.size() >= width) return text;
    return std::string(width - text.size(), ' ') + text;
}

struct LoadedProblem {
    std::variant<LinearBvp, NonlinearBvp> problem;
    std::optional<ScalarFn> exact;
    std::string label;
};

LoadedProblem load_source(const RunSpec& spec) {
    LoadedProblem loaded;
    if (std::holds_alternative<int>(spec.source)) {
        const int id = std::get<int>(spec.source);
        BuiltinExample example = [id] {
            try {
                return builtin(id);
            } catch (const std::invalid_argument& err) {
                throw InputError(err.what());
            }
        }();
        loaded.problem = std::move(example.problem);
        loaded.exact = example.exact;
        loaded.label = "example " + std::to_string(id);
    } else {
        const std::string& path = std::get<std::string>(spec.source);
        ProblemSpec parsed = [&path] {
            try {
                return load_problem_file(path);
            } catch (const ProblemFormatError& err) {
                throw InputError(err.what());
            }
        }();
        loaded.problem = std::move(parsed.problem);
        if (parsed.exact) {
            const Expression exact = *parsed.exact;
            loaded.exact = [exact](double x) { return exact(x); };
        }
        loaded.label = path;
    }
    return loaded;
}

}  // namespace

std::string format_error(double v) {
    return to_chars_string(v, std::chars_format::scientific, 5);
}

std::string format_value(double v) { return to_chars_string(v, std::chars_format::fixed, 10); }

std::string format_compact(double v) { return to_chars_string(v, std::chars_format::general, -1); }

RunResult run(const RunSpec& spec) {
    const LoadedProblem loaded = load_source(spec);

    RunResult result;
    result.source_label = loaded.label;
    result.order = std::visit([](const auto& p) { return p.order; }, loaded.problem);
    result.a = std::visit([](const auto& p) { return p.interval_a; }, loaded.problem);
    result.b = std::visit([](const auto& p) { return p.interval_b; }, loaded.problem);
    result.nonlinear = std::holds_alternative<NonlinearBvp>(loaded.problem);
    result.has_exact = loaded.exact.has_value();

    if (spec.n_values.empty()) throw InputError("at least one truncation N is required");
    std::vector<int> n_values = spec.n_values;
    std::sort(n_values.begin(), n_values.end());
    for (int n : n_values)
        if (n < result.order)
            throw InputError("N = " + std::to_string(n) +
                             " is too small: an order-" + std::to_string(result.order) +
                             " problem with " + std::to_string(result.order) +
                             " boundary conditions needs N >= " + std::to_string(result.order));
    if (spec.table_points < 2) throw InputError("the output grid needs at least 2 points");

    NewtonConfig config;
    if (spec.newton_tolerance) {
        if (!(*spec.newton_tolerance > 0.0))
            throw InputError("newton tolerance must be positive");
        config.residual_tolerance = *spec.newton_tolerance;
    }
    if (spec.newton_max_iterations) {
        if (*spec.newton_max_iterations < 1)
            throw InputError("newton iteration limit must be at least 1");
        config.max_iterations = *spec.newton_max_iterations;
    }

    const std::vector<double> grid_points = uniform_grid(result.a, result.b, spec.table_points);
    for (int n : n_values) {
        RunRow row;
        row.n = n;
        try {
            const SpectralSolution solution =
                result.nonlinear
                    ? solve_nonlinear(std::get<NonlinearBvp>(loaded.problem), n, config)
                    : solve_linear(std::get<LinearBvp>(loaded.problem), n);
            row.converged = solution.report().converged;
            row.iterations = solution.report().iterations;
            row.residual_inf = solution.report().final_residual_norm;
            row.table.reserve(grid_points.size());
            for (double x : grid_points) {
                PointRow point;
                point.coord = x;
                point.approximate = solution.evaluate(x);
                if (loaded.exact) {
                    point.exact = (*loaded.exact)(x);
                    point.ae = std::abs(*point.exact - point.approximate);
                }
                row.table.push_back(point);
            }
            if (loaded.exact) row.mae = error_report_uniform(solution, *loaded.exact).mae;
        } catch (const std::exception& err) {
            row.converged = false;
            row.failure = err.what();
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

int exit_code(const RunResult& result) {
    for (const RunRow& row : result.rows)
        if (!row.converged || row.failure) return 2;
    return 0;
}

namespace {

std::string problem_line(const RunResult& result) {
    return "problem: " + result.source_label + " (" +
           (result.nonlinear ? "nonlinear" : "linear") + ", order " +
           std::to_string(result.order) + ", interval [" + format_compact(result.a) + ", " +
           format_compact(result.b) + "])";
}

std::string summary_text(const RunResult& result) {
    std::string out;
    out += "   N   newton_iters     residual_inf";
    if (result.has_exact) out += "              mae";
    out += "\n";
    for (const RunRow& row : result.rows) {
        out += pad_left(std::to_string(row.n), 4);
        if (row.failure) {
            out += "   failed: " + *row.failure + "\n";
            continue;
        }
        out += pad_left(std::to_string(row.iterations), 15);
        out += pad_left(format_error(row.residual_inf), 17);
        if (row.mae) out += pad_left(format_error(*row.mae), 17);
        if (!row.converged) out += "   (not converged)";
        out += "\n";
    }
    return out;
}

nlohmann::json problem_json_header(const RunResult& result) {
    nlohmann::json header;
    header["source"] = result.source_label;
    header["kind"] = result.nonlinear ? "nonlinear" : "linear";
    header["order"] = result.order;
    header["interval"] = {result.a, result.b};
    header["has_exact"] = result.has_exact;
    return header;
}

nlohmann::json row_json(const RunRow& row, bool with_points) {
    nlohmann::json entry;
    entry["n"] = row.n;
    entry["converged"] = row.converged;
    if (row.failure) {
        entry["failure"] = *row.failure;
        return entry;
    }
    entry["newton_iters"] = row.iterations;
    entry["residual_inf"] = row.residual_inf;
    if (row.mae) entry["mae"] = *row.mae;
    if (with_points) {
        nlohmann::json points = nlohmann::json::array();
        for (const PointRow& point : row.table) {
            nlohmann::json p;
            p["z"] = point.coord;
            p["approximate"] = point.approximate;
            if (point.exact) p["exact"] = *point.exact;
            if (point.ae) p["ae"] = *point.ae;
            points.push_back(std::move(p));
        }
        entry["points"] = std::move(points);
    }
    return entry;
}

std::string render_json(const RunResult& result, bool with_points) {
    nlohmann::json doc;
    doc["problem"] = problem_json_header(result);
    nlohmann::json runs = nlohmann::json::array();
    for (const RunRow& row : result.rows) runs.push_back(row_json(row, with_points));
    doc["runs"] = std::move(runs);
    return doc.dump(2) + "\n";
}

}  // namespace

std::string format_solve(const RunResult& result, OutputFormat format) {
    if (format == OutputFormat::json) return render_json(result, true);

    if (format == OutputFormat::csv) {
        std::string out = "N,z,exact,approximate,ae\n";
        for (const RunRow& row : result.rows) {
            if (row.failure) continue;
            for (const PointRow& point : row.table) {
                out += std::to_string(row.n);
                out += ",";
                out += format_value(point.coord);
                out += ",";
                if (point.exact) out += format_value(*point.exact);
                out += ",";
                out += format_value(point.approximate);
                out += ",";
                if (point.ae) out += format_error(*point.ae);
                out += "\n";
            }
        }
        return out;
    }

    std::string out = problem_line(result) + "\n";
    for (const RunRow& row : result.rows) {
        out += "\n";
        if (row.failure) {
            out += "N = " + std::to_string(row.n) + "  failed: " + *row.failure + "\n";
            continue;
        }
        out += "N = " + std::to_string(row.n) +
               "  converged: " + (row.converged ? "yes" : "no") +
               "  iterations: " + std::to_string(row.iterations) +
               "  residual_inf: " + format_error(row.residual_inf) + "\n";
        out += pad_left("z", 16);
        if (result.has_exact) out += pad_left("exact", 17);
        out += pad_left("approximate", 17);
        if (result.has_exact) out += pad_left("ae", 16);
        out += "\n";
        for (const PointRow& point : row.table) {
            out += pad_left(format_value(point.coord), 16);
            if (point.exact) out += pad_left(format_value(*point.exact), 17);
            out += pad_left(format_value(point.approximate), 17);
            if (point.ae) out += pad_left(format_error(*point.ae), 16);
            out += "\n";
        }
        if (row.mae)
            out += "MAE (201-point uniform grid): " + format_error(*row.mae) + "\n";
    }
    out += "\nsummary:\n" + summary_text(result);
    return out;
}

std::string format_sweep(const RunResult& result, OutputFormat format) {
    if (format == OutputFormat::json) return render_json(result, false);

    if (format == OutputFormat::csv) {
        std::string out = "N,mae,newton_iters,residual_inf\n";
        for (const RunRow& row : result.rows) {
            out += std::to_string(row.n);
            out += ",";
            if (row.mae) out += format_error(*row.mae);
            out += ",";
            out += std::to_string(row.iterations);
            out += ",";
            if (!row.failure) out += format_error(row.residual_inf);
            out += "\n";
        }
        return out;
    }

    return problem_line(result) + "\n\n" + summary_text(result);
}

std::string list_examples() {
    std::string out = "builtin examples:\n";
    for (int id = 1; id <= builtin_count; ++id) {
        const BuiltinExample example = builtin(id);
        const double a = std::visit([](const auto& p) { return p.interval_a; }, example.problem);
        const double b = std::visit([](const auto& p) { return p.interval_b; }, example.problem);
        out += "  example " + std::to_string(id) + ": order " + std::to_string(example.order()) +
               ", " + (example.is_nonlinear() ? "nonlinear" : "linear") + ", interval [" +
               format_compact(a) + ", " + format_compact(b) + "], exact y(z) = " +
               example.exact_text + "\n";
    }
    return out;
}

}  // namespace mcbvp
