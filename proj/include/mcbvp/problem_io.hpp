#pragma once

#include "mcbvp/expression.hpp"
#include "mcbvp/problem.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace mcbvp {

class ProblemFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A problem document: the BVP plus the optional exact solution it declares.
struct ProblemSpec {
    std::variant<LinearBvp, NonlinearBvp> problem;
    std::optional<Expression> exact;

    int order() const;
    double interval_a() const;
    double interval_b() const;
    bool is_nonlinear() const;
};

/// Parse a JSON problem document:
///
///   {
///     "order": m,
///     "interval": [a, b],
///     "kind": "linear" | "nonlinear",
///     "coefficients": [f_m, ..., f_0],   // linear: leading coefficient first
///     "residual": "...",                 // nonlinear: F over z/x and y0..ym
///     "rhs": "...",
///     "conditions": [{"endpoint": "left"|"right", "q": 0, "value": ...}, ...],
///     "exact": "..."                     // optional
///   }
///
/// Coefficient, rhs, and exact entries are expression strings (or plain
/// numbers) over the coordinate only; condition values must be constants.
/// Violations throw ProblemFormatError with the offending field named and,
/// for expression syntax errors, the line/column inside that string.
ProblemSpec load_problem_json(const std::string& text);

ProblemSpec load_problem_file(const std::string& path);

}  // namespace mcbvp
