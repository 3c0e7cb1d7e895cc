// Command-line driver: solve, sweep, and list subcommands over the builtin
// examples or JSON problem files. Exit codes: 0 full convergence, 1 input
// error, 2 at least one truncation failed to converge.

#include "mcbvp/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct CommonOptions {
    int example = 0;
    std::string file;
    std::vector<int> n_values;
    std::string grid = "paper11";
    std::string format = "text";
    std::string out;
    double newton_tol = 0.0;
    int newton_max_iters = 0;
    bool has_newton_tol = false;
    bool has_newton_max_iters = false;
};

void add_common_options(CLI::App& cmd, CommonOptions& options) {
    cmd.add_option("--example", options.example, "Builtin example id (1..5)")
        ->check(CLI::Range(1, 5));
    cmd.add_option("--file", options.file, "JSON problem file");
    cmd.add_option("--n", options.n_values, "Truncation degrees, comma separated")
        ->required()
        ->delimiter(',');
    cmd.add_option("--grid", options.grid,
                   "Output grid: paper11 (11 uniform points) or uniform:<k>");
    cmd.add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd.add_option("--out", options.out, "Write output to a file instead of stdout");
    cmd.add_option("--newton-tol", options.newton_tol, "Newton residual tolerance")
        ->each([&options](const std::string&) { options.has_newton_tol = true; });
    cmd.add_option("--newton-max-iters", options.newton_max_iters, "Newton iteration limit")
        ->each([&options](const std::string&) { options.has_newton_max_iters = true; });
}

int parse_table_points(const std::string& grid) {
    if (grid == "paper11") return 11;
    const std::string prefix = "uniform:";
    if (grid.rfind(prefix, 0) == 0) {
        try {
            const int points = std::stoi(grid.substr(prefix.size()));
            if (points >= 2) return points;
        } catch (const std::exception&) {
        }
    }
    throw mcbvp::InputError("--grid must be paper11 or uniform:<k> with k >= 2, got \"" + grid +
                            "\"");
}

mcbvp::RunSpec build_spec(const CommonOptions& options) {
    mcbvp::RunSpec spec;
    const bool has_example = options.example != 0;
    const bool has_file = !options.file.empty();
    if (has_example == has_file)
        throw mcbvp::InputError("exactly one of --example and --file is required");
    if (has_example)
        spec.source = options.example;
    else
        spec.source = options.file;
    spec.n_values = options.n_values;
    spec.table_points = parse_table_points(options.grid);
    if (options.format == "csv")
        spec.format = mcbvp::OutputFormat::csv;
    else if (options.format == "json")
        spec.format = mcbvp::OutputFormat::json;
    else
        spec.format = mcbvp::OutputFormat::text;
    if (options.has_newton_tol) spec.newton_tolerance = options.newton_tol;
    if (options.has_newton_max_iters) spec.newton_max_iterations = options.newton_max_iters;
    return spec;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream stream(out_path);
    if (!stream) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    stream << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral collocation solver for high-order two-point boundary value problems"};
    app.require_subcommand(1);

    CommonOptions solve_options;
    CLI::App* solve_cmd =
        app.add_subcommand("solve", "Solve and tabulate the solution on an output grid");
    add_common_options(*solve_cmd, solve_options);

    CommonOptions sweep_options;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Accuracy sweep over truncation degrees");
    add_common_options(*sweep_cmd, sweep_options);

    CLI::App* list_cmd = app.add_subcommand("list", "List the builtin examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 1;
    }

    try {
        if (list_cmd->parsed()) {
            std::cout << mcbvp::list_examples();
            return 0;
        }
        const bool is_solve = solve_cmd->parsed();
        const CommonOptions& options = is_solve ? solve_options : sweep_options;
        const mcbvp::RunSpec spec = build_spec(options);
        const mcbvp::RunResult result = mcbvp::run(spec);
        const std::string text = is_solve ? mcbvp::format_solve(result, spec.format)
                                          : mcbvp::format_sweep(result, spec.format);
        const int emit_status = emit(text, options.out);
        if (emit_status != 0) return emit_status;
        return mcbvp::exit_code(result);
    } catch (const mcbvp::InputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
