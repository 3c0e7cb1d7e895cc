#include <doctest.h>

#include <mcbvp/examples.hpp>
#include <mcbvp/solve.hpp>

#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

using mcbvp::BoundaryCondition;
using mcbvp::Endpoint;
using mcbvp::LinearBvp;
using mcbvp::NonlinearBvp;
using mcbvp::SpectralSolution;
using mcbvp::Vector;

namespace {

mcbvp::ScalarFn constant_fn(double v) {
    return [v](double) { return v; };
}

LinearBvp parabola_on_02() {
    // y'' = 2 on [0,2] with y(0) = 0, y(2) = 4; exact y = x^2.
    LinearBvp p;
    p.order = 2;
    p.interval_a = 0.0;
    p.interval_b = 2.0;
    p.coefficients = {constant_fn(0.0), constant_fn(0.0), constant_fn(1.0)};
    p.rhs = constant_fn(2.0);
    p.conditions = {{Endpoint::left, 0, 0.0}, {Endpoint::right, 0, 4.0}};
    return p;
}

}  // namespace

TEST_CASE("linear solves report a residual certificate and no iterations") {
    const auto example = mcbvp::builtin(2);
    const LinearBvp& problem = std::get<LinearBvp>(example.problem);
    const SpectralSolution solution = mcbvp::solve_linear(problem, 12);
    CHECK(solution.report().converged);
    CHECK(solution.report().iterations == 0);
    CHECK(solution.report().final_residual_norm <= 1e-9);
    CHECK(solution.truncation() == 12);
    CHECK(solution.coefficients().size() == 13);
}

TEST_CASE("native-interval problems are solved in their own coordinates") {
    const LinearBvp problem = parabola_on_02();
    const SpectralSolution solution = mcbvp::solve_linear(problem, 6);
    CHECK(solution.map().a() == 0.0);
    CHECK(solution.map().b() == 2.0);
    for (double x : {0.0, 0.35, 1.0, 1.7, 2.0}) {
        CHECK(std::abs(solution.evaluate(x) - x * x) <= 1e-11);
        CHECK(std::abs(solution.evaluate(x, 1) - 2.0 * x) <= 1e-10);
        CHECK(std::abs(solution.evaluate(x, 2) - 2.0) <= 1e-9);
    }
}

TEST_CASE("derivative evaluation applies the chain-rule scale") {
    const auto example = mcbvp::builtin(2);
    const LinearBvp& problem = std::get<LinearBvp>(example.problem);
    const SpectralSolution solution = mcbvp::solve_linear(problem, 14);
    for (double z : {-0.9, -0.3, 0.2, 0.8}) {
        const double expected = example.exact_derivative(1, z);
        CHECK(std::abs(solution.evaluate(z, 1) - expected) <= 1e-9);
    }
}

TEST_CASE("nonlinear solves converge from the linearized start") {
    const auto example = mcbvp::builtin(1);
    const NonlinearBvp& problem = std::get<NonlinearBvp>(example.problem);
    const SpectralSolution solution = mcbvp::solve_nonlinear(problem, 12);
    CHECK(solution.report().converged);
    CHECK(solution.report().iterations >= 1);
    CHECK(solution.report().iterations <= 10);
    for (double z : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        CHECK(std::abs(solution.evaluate(z) - example.exact(z)) <= 1e-8);
    }
}

TEST_CASE("newton non-convergence is reported in the solution") {
    const auto example = mcbvp::builtin(1);
    const NonlinearBvp& problem = std::get<NonlinearBvp>(example.problem);
    mcbvp::NewtonConfig config;
    config.residual_tolerance = 1e-30;
    config.max_iterations = 2;
    const SpectralSolution solution = mcbvp::solve_nonlinear(problem, 10, config);
    CHECK_FALSE(solution.report().converged);
    CHECK(solution.report().iterations == 2);
}

TEST_CASE("repeat solves are bitwise identical") {
    const auto example = mcbvp::builtin(3);
    const LinearBvp& problem = std::get<LinearBvp>(example.problem);
    const SpectralSolution first = mcbvp::solve_linear(problem, 16);
    const SpectralSolution second = mcbvp::solve_linear(problem, 16);
    REQUIRE(first.coefficients().size() == second.coefficients().size());
    for (std::size_t i = 0; i < first.coefficients().size(); ++i)
        CHECK(first.coefficients()[i] == second.coefficients()[i]);

    const auto nonlinear = mcbvp::builtin(1);
    const NonlinearBvp& np = std::get<NonlinearBvp>(nonlinear.problem);
    const SpectralSolution n1 = mcbvp::solve_nonlinear(np, 12);
    const SpectralSolution n2 = mcbvp::solve_nonlinear(np, 12);
    for (std::size_t i = 0; i < n1.coefficients().size(); ++i)
        CHECK(n1.coefficients()[i] == n2.coefficients()[i]);
}

TEST_CASE("error reports take the maximum over the samples") {
    const auto example = mcbvp::builtin(2);
    const LinearBvp& problem = std::get<LinearBvp>(example.problem);
    const SpectralSolution solution = mcbvp::solve_linear(problem, 10);
    const auto report = mcbvp::error_report_uniform(solution, example.exact);
    REQUIRE(report.sample_points.size() == 201);
    REQUIRE(report.absolute_errors.size() == 201);
    double max_error = 0.0;
    for (double e : report.absolute_errors) max_error = std::max(max_error, e);
    CHECK(report.mae == max_error);
    CHECK(report.mae <= 1e-8);
    CHECK(report.mae > 0.0);
}

TEST_CASE("uniform grids pin both endpoints exactly") {
    const auto grid = mcbvp::uniform_grid(-1.0, 1.0, 11);
    REQUIRE(grid.size() == 11);
    CHECK(grid.front() == -1.0);
    CHECK(grid.back() == 1.0);
    CHECK(grid[5] == doctest::Approx(0.0).epsilon(1e-15));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(grid[i] - grid[i - 1] == doctest::Approx(0.2).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)mcbvp::uniform_grid(-1.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("evaluate_solution maps a batch of points") {
    const LinearBvp problem = parabola_on_02();
    const SpectralSolution solution = mcbvp::solve_linear(problem, 6);
    const std::vector<double> points = {0.0, 1.0, 2.0};
    const auto values = mcbvp::evaluate_solution(solution, points);
    REQUIRE(values.size() == 3);
    CHECK(std::abs(values[0] - 0.0) <= 1e-11);
    CHECK(std::abs(values[1] - 1.0) <= 1e-11);
    CHECK(std::abs(values[2] - 4.0) <= 1e-11);
}

TEST_CASE("the error decays spectrally along a truncation sequence") {
    const auto example = mcbvp::builtin(2);
    const LinearBvp& problem = std::get<LinearBvp>(example.problem);
    std::vector<double> maes;
    for (int n : {6, 8, 10, 12}) {
        const SpectralSolution solution = mcbvp::solve_linear(problem, n);
        maes.push_back(mcbvp::error_report_uniform(solution, example.exact).mae);
    }
    for (std::size_t k = 0; k + 1 < maes.size(); ++k) {
        CHECK(maes[k + 1] <= 10.0 * maes[k]);
    }
    CHECK(maes.back() <= 1e-12);
    CHECK(maes.front() >= 1e-5);
}

TEST_CASE("solve rejects invalid truncations and orders") {
    const auto example = mcbvp::builtin(2);
    const LinearBvp& problem = std::get<LinearBvp>(example.problem);
    CHECK_THROWS_AS((void)mcbvp::solve_linear(problem, 2), std::invalid_argument);

    LinearBvp zero_order;
    zero_order.order = 0;
    zero_order.coefficients = {constant_fn(1.0)};
    zero_order.rhs = constant_fn(0.0);
    CHECK_THROWS_AS((void)mcbvp::solve_linear(zero_order, 5), std::invalid_argument);
}

TEST_CASE("spectral solution validates its construction") {
    const LinearBvp problem = parabola_on_02();
    const SpectralSolution solution = mcbvp::solve_linear(problem, 6);
    CHECK_THROWS_AS(
        SpectralSolution(Vector(3, 0.0), mcbvp::McpBasis(6), solution.map(), solution.report()),
        std::invalid_argument);
}
