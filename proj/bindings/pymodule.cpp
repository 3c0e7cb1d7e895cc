#include "mcbvp/examples.hpp"
#include "mcbvp/grid.hpp"
#include "mcbvp/mcp_basis.hpp"
#include "mcbvp/problem_io.hpp"
#include "mcbvp/runner.hpp"
#include "mcbvp/solve.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <variant>

namespace py = pybind11;

namespace {

/// A problem plus the metadata the bindings expose; wraps both builtin
/// examples and documents loaded from JSON text.
struct PyProblem {
    std::variant<mcbvp::LinearBvp, mcbvp::NonlinearBvp> problem;
    std::optional<mcbvp::ScalarFn> exact;
    std::string label;
    std::string document;

    int order() const {
        return std::visit([](const auto& p) { return p.order; }, problem);
    }
    bool nonlinear() const { return std::holds_alternative<mcbvp::NonlinearBvp>(problem); }
    std::pair<double, double> interval() const {
        return std::visit([](const auto& p) { return std::make_pair(p.interval_a, p.interval_b); },
                          problem);
    }
};

struct PySolution {
    mcbvp::SpectralSolution solution;
    std::optional<mcbvp::ScalarFn> exact;
};

PyProblem make_builtin(int id) {
    mcbvp::BuiltinExample example = mcbvp::builtin(id);
    PyProblem wrapped{std::move(example.problem), example.exact,
                      "example " + std::to_string(id), std::move(example.document)};
    return wrapped;
}

PyProblem make_loaded(const std::string& text) {
    mcbvp::ProblemSpec spec = mcbvp::load_problem_json(text);
    PyProblem wrapped;
    wrapped.problem = std::move(spec.problem);
    if (spec.exact) {
        const mcbvp::Expression exact = *spec.exact;
        wrapped.exact = [exact](double x) { return exact(x); };
    }
    wrapped.label = "loaded problem";
    wrapped.document = text;
    return wrapped;
}

PySolution solve_problem(const PyProblem& problem, int n, std::optional<double> newton_tol,
                         std::optional<int> newton_max_iters) {
    mcbvp::NewtonConfig config;
    if (newton_tol) config.residual_tolerance = *newton_tol;
    if (newton_max_iters) config.max_iterations = *newton_max_iters;
    mcbvp::SpectralSolution solution =
        problem.nonlinear()
            ? mcbvp::solve_nonlinear(std::get<mcbvp::NonlinearBvp>(problem.problem), n, config)
            : mcbvp::solve_linear(std::get<mcbvp::LinearBvp>(problem.problem), n);
    return PySolution{std::move(solution), problem.exact};
}

}  // namespace

PYBIND11_MODULE(_mcbvp, m) {
    m.doc() = "Spectral collocation for high-order two-point boundary value problems "
              "in a monic Chebyshev basis";
    m.attr("__version__") = "0.1.0";

    py::register_exception<mcbvp::ParseError>(m, "ExpressionParseError", PyExc_ValueError);
    py::register_exception<mcbvp::ProblemFormatError>(m, "ProblemFormatError", PyExc_ValueError);

    m.def(
        "mcp_coefficients",
        [](int n) {
            std::vector<std::pair<int, double>> pairs;
            for (const mcbvp::PolyTerm& term : mcbvp::mcp_coefficients(n))
                pairs.emplace_back(term.exponent, term.coefficient);
            return pairs;
        },
        py::arg("n"), "Power-series (exponent, coefficient) pairs of the degree-n polynomial");
    m.def("mcp_eval", &mcbvp::eval_recurrence, py::arg("n"), py::arg("z"),
          "Evaluate the degree-n monic Chebyshev polynomial");
    m.def("mcp_derivative", &mcbvp::eval_derivative_recurrence, py::arg("n"), py::arg("m"),
          py::arg("z"), "m-th derivative via the differentiated recurrence");
    m.def("mcp_derivative_series", &mcbvp::eval_derivative_series, py::arg("n"), py::arg("m"),
          py::arg("z"), "m-th derivative via the explicit power series");
    m.def("chebyshev_t", &mcbvp::chebyshev_t, py::arg("n"), py::arg("z"),
          "Classical first-kind Chebyshev value (the oracle for the monic family)");
    m.def("inner_product", &mcbvp::inner_product, py::arg("i"), py::arg("j"),
          py::arg("quad_points") = 64,
          "Weighted inner product by Gauss-Chebyshev quadrature");
    m.def(
        "cgl_nodes", [](int n) { return mcbvp::CglGrid(n).nodes(); }, py::arg("n"),
        "Chebyshev-Gauss-Lobatto nodes cos(pi j / N), j = 0..N");

    py::class_<PyProblem>(m, "Problem", "A boundary value problem ready to solve")
        .def_property_readonly("order", &PyProblem::order)
        .def_property_readonly("nonlinear", &PyProblem::nonlinear)
        .def_property_readonly("interval", &PyProblem::interval)
        .def_property_readonly("label", [](const PyProblem& p) { return p.label; })
        .def_property_readonly("has_exact", [](const PyProblem& p) { return p.exact.has_value(); })
        .def("to_json", [](const PyProblem& p) { return p.document; },
             "The JSON problem document this problem was built from")
        .def("__repr__", [](const PyProblem& p) {
            return "<Problem " + p.label + ", order " + std::to_string(p.order()) + ", " +
                   (p.nonlinear() ? "nonlinear" : "linear") + ">";
        });

    m.def("builtin_example", &make_builtin, py::arg("id"),
          "One of the five builtin benchmark problems");
    m.def("load_problem", &make_loaded, py::arg("text"),
          "Parse a JSON problem document");

    py::class_<PySolution>(m, "Solution", "A solved spectral expansion")
        .def_property_readonly(
            "coefficients",
            [](const PySolution& s) { return s.solution.coefficients(); })
        .def_property_readonly(
            "n", [](const PySolution& s) { return s.solution.truncation(); })
        .def_property_readonly(
            "converged", [](const PySolution& s) { return s.solution.report().converged; })
        .def_property_readonly(
            "iterations", [](const PySolution& s) { return s.solution.report().iterations; })
        .def_property_readonly(
            "residual_inf",
            [](const PySolution& s) { return s.solution.report().final_residual_norm; })
        .def(
            "evaluate",
            [](const PySolution& s, double x, int m) { return s.solution.evaluate(x, m); },
            py::arg("x"), py::arg("m") = 0, "Evaluate the solution or its m-th derivative")
        .def(
            "evaluate_many",
            [](const PySolution& s, const std::vector<double>& points, int m) {
                return mcbvp::evaluate_solution(s.solution, points, m);
            },
            py::arg("points"), py::arg("m") = 0)
        .def(
            "mae",
            [](const PySolution& s, int points) {
                if (!s.exact)
                    throw std::invalid_argument("mae: the problem declares no exact solution");
                return mcbvp::error_report_uniform(s.solution, *s.exact, points).mae;
            },
            py::arg("points") = 201,
            "Maximum absolute error against the declared exact solution")
        .def(
            "error_report",
            [](const PySolution& s, const std::vector<double>& points) {
                if (!s.exact)
                    throw std::invalid_argument(
                        "error_report: the problem declares no exact solution");
                const mcbvp::ErrorReport report =
                    mcbvp::error_report(s.solution, *s.exact, points);
                return std::make_pair(report.absolute_errors, report.mae);
            },
            py::arg("points"), "Absolute errors at the given points and their maximum")
        .def("__repr__", [](const PySolution& s) {
            return "<Solution N=" + std::to_string(s.solution.truncation()) +
                   (s.solution.report().converged ? ", converged>" : ", NOT converged>");
        });

    m.def("solve", &solve_problem, py::arg("problem"), py::arg("n"),
          py::arg("newton_tol") = py::none(), py::arg("newton_max_iters") = py::none(),
          "Solve at truncation N; Newton options apply to nonlinear problems");

    m.def(
        "sweep",
        [](const PyProblem& problem, const std::vector<int>& n_values) {
            py::list rows;
            for (int n : n_values) {
                const PySolution solved = solve_problem(problem, n, std::nullopt, std::nullopt);
                py::dict row;
                row["n"] = n;
                row["converged"] = solved.solution.report().converged;
                row["newton_iters"] = solved.solution.report().iterations;
                row["residual_inf"] = solved.solution.report().final_residual_norm;
                if (solved.exact)
                    row["mae"] =
                        mcbvp::error_report_uniform(solved.solution, *solved.exact).mae;
                rows.append(std::move(row));
            }
            return rows;
        },
        py::arg("problem"), py::arg("n_values"),
        "Accuracy sweep over truncation degrees; rows are dicts");
}
