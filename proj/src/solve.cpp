#include "mcbvp/solve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcbvp {

SpectralSolution::SpectralSolution(Vector coefficients, McpBasis basis, AffineMap map,
                                   SolveReport report)
    : coefficients_(std::move(coefficients)),
      basis_(std::move(basis)),
      map_(map),
      report_(report) {
    if (coefficients_.empty())
        throw std::invalid_argument("SpectralSolution: coefficient vector is empty");
    if (static_cast<int>(coefficients_.size()) != basis_.max_degree() + 1)
        throw std::invalid_argument(
            "SpectralSolution: coefficient count must match the basis degree range");
}

double SpectralSolution::evaluate(double x, int derivative_order) const {
    if (derivative_order < 0)
        throw std::invalid_argument("SpectralSolution: derivative order must be non-negative");
    const int n = truncation();
    const double z = map_.to_reference(x);
    const DerivativeTable table(n, derivative_order, z);
    double acc = 0.0;
    for (int i = 0; i <= n; ++i)
        acc += coefficients_[static_cast<std::size_t>(i)] * table(i, derivative_order);
    double scale = 1.0;
    for (int k = 0; k < derivative_order; ++k) scale *= map_.scale();
    return acc * scale;
}

std::vector<double> evaluate_solution(const SpectralSolution& solution,
                                      std::span<const double> points, int derivative_order) {
    std::vector<double> values;
    values.reserve(points.size());
    for (double x : points) values.push_back(solution.evaluate(x, derivative_order));
    return values;
}

namespace {

void validate_truncation(int order, int n, const char* caller) {
    if (order < 1)
        throw std::invalid_argument(std::string(caller) +
                                    ": problem order must be at least 1");
    if (n < order)
        throw std::invalid_argument(std::string(caller) + ": truncation N = " +
                                    std::to_string(n) + " must be at least the problem order " +
                                    std::to_string(order));
}

}  // namespace

SpectralSolution solve_linear(const LinearBvp& problem, int n) {
    validate_truncation(problem.order, n, "solve_linear");
    const CglGrid grid(n);
    McpBasis basis(n);
    const AssembledSystem system = assemble_linear_system(problem, grid, basis);
    const Vector coefficients = lu_solve(system.matrix, system.rhs);

    // Certify the algebraic solve; the report mirrors the Newton one with
    // zero iterations.
    const Vector reproduced = multiply(system.matrix, coefficients);
    double residual_norm = 0.0;
    for (std::size_t i = 0; i < reproduced.size(); ++i)
        residual_norm = std::max(residual_norm, std::abs(reproduced[i] - system.rhs[i]));

    SolveReport report;
    report.iterations = 0;
    report.final_residual_norm = residual_norm;
    report.converged = true;
    return SpectralSolution(coefficients, std::move(basis),
                            AffineMap(problem.interval_a, problem.interval_b), report);
}

SpectralSolution solve_nonlinear(const NonlinearBvp& problem, int n, const NewtonConfig& config) {
    validate_truncation(problem.order, n, "solve_nonlinear");
    const CglGrid grid(n);
    McpBasis basis(n);

    const ResidualFn residual = [&problem, &grid, &basis](const Vector& coeffs) {
        return assemble_residual(problem, grid, basis, coeffs);
    };

    const bool analytic =
        problem.partials.size() == static_cast<std::size_t>(problem.order) + 1 &&
        std::all_of(problem.partials.begin(), problem.partials.end(),
                    [](const SlotFn& p) { return static_cast<bool>(p); });
    JacobianFn jacobian;
    if (analytic)
        jacobian = [&problem, &grid, &basis](const Vector& coeffs) {
            return assemble_jacobian(problem, grid, basis, coeffs);
        };

    // Linearized start: one full Newton step from the zero expansion. If that
    // step cannot be taken the zero vector itself seeds the iteration.
    Vector initial(static_cast<std::size_t>(n) + 1, 0.0);
    try {
        Vector r0 = residual(initial);
        Matrix j0 = analytic ? assemble_jacobian(problem, grid, basis, initial)
                             : finite_difference_jacobian(residual, initial, config.fd_step_scale);
        for (double& v : r0) v = -v;
        initial = lu_solve(std::move(j0), std::move(r0));
    } catch (const std::exception&) {
        initial.assign(static_cast<std::size_t>(n) + 1, 0.0);
    }

    auto [coefficients, report] = newton_solve(residual, jacobian, std::move(initial), config);
    return SpectralSolution(std::move(coefficients), std::move(basis),
                            AffineMap(problem.interval_a, problem.interval_b), report);
}

ErrorReport error_report(const SpectralSolution& solution, const ScalarFn& exact,
                         std::span<const double> points) {
    if (!exact) throw std::invalid_argument("error_report: exact solution must be callable");
    if (points.empty())
        throw std::invalid_argument("error_report: at least one sample point is required");
    ErrorReport report;
    report.sample_points.assign(points.begin(), points.end());
    report.absolute_errors.reserve(points.size());
    for (double x : points) {
        const double err = std::abs(exact(x) - solution.evaluate(x));
        report.absolute_errors.push_back(err);
        if (err > report.mae) report.mae = err;
    }
    return report;
}

std::vector<double> uniform_grid(double a, double b, int count) {
    validate_interval(a, b);
    if (count < 2) throw std::invalid_argument("uniform_grid: at least two points are required");
    std::vector<double> points(static_cast<std::size_t>(count));
    const double step = (b - a) / (count - 1);
    for (int i = 0; i < count; ++i) points[static_cast<std::size_t>(i)] = a + step * i;
    points.front() = a;
    points.back() = b;
    return points;
}

ErrorReport error_report_uniform(const SpectralSolution& solution, const ScalarFn& exact,
                                 int count) {
    const std::vector<double> points =
        uniform_grid(solution.map().a(), solution.map().b(), count);
    return error_report(solution, exact, points);
}

}  // namespace mcbvp
