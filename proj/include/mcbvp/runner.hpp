#pragma once

#include "mcbvp/solve.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mcbvp {

/// Bad user input (unknown example id, malformed file, N below the problem
/// order, invalid overrides). The command-line driver maps this to exit 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { text, csv, json };

struct RunSpec {
    std::variant<int, std::string> source;  // builtin example id, or problem-file path
    std::vector<int> n_values;
    OutputFormat format = OutputFormat::text;
    int table_points = 11;  // output grid: 11 matches the published tables
    std::optional<double> newton_tolerance;
    std::optional<int> newton_max_iterations;
};

struct PointRow {
    double coord = 0.0;
    double approximate = 0.0;
    std::optional<double> exact;
    std::optional<double> ae;
};

struct RunRow {
    int n = 0;
    bool converged = false;
    int iterations = 0;
    double residual_inf = 0.0;
    std::optional<double> mae;  // needs an exact solution; 201-point uniform grid
    std::vector<PointRow> table;
    std::optional<std::string> failure;  // solver error message for this N
};

struct RunResult {
    std::string source_label;
    int order = 0;
    double a = -1.0;
    double b = 1.0;
    bool nonlinear = false;
    bool has_exact = false;
    std::vector<RunRow> rows;  // ascending N
};

/// Solve the requested problem at every requested N. Per-N solver failures
/// are recorded in the row; input problems throw InputError.
RunResult run(const RunSpec& spec);

/// 0 when every row converged, 2 otherwise.
int exit_code(const RunResult& result);

std::string format_solve(const RunResult& result, OutputFormat format);
std::string format_sweep(const RunResult& result, OutputFormat format);
std::string list_examples();

/// Locale-free formatting used for all numeric output. format_error renders
/// scientific notation with 6 significant digits, format_value fixed-point
/// with 10 decimal places, format_compact the shortest round-trip form.
std::string format_error(double v);
std::string format_value(double v);
std::string format_compact(double v);

}  // namespace mcbvp
