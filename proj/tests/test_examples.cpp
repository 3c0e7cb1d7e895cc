#include <doctest.h>

#include <mcbvp/examples.hpp>
#include <mcbvp/problem_io.hpp>
#include <mcbvp/solve.hpp>

#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

using mcbvp::BoundaryCondition;
using mcbvp::BuiltinExample;
using mcbvp::Endpoint;
using mcbvp::LinearBvp;
using mcbvp::NonlinearBvp;
using mcbvp::Vector;

namespace {

std::vector<double> reference_samples() {
    std::vector<double> zs;
    for (int i = 0; i <= 40; ++i) zs.push_back(-1.0 + 0.05 * i);
    zs.front() = -1.0;
    zs.back() = 1.0;
    return zs;
}

/// The differential equation applied to the closed-form solution must return
/// the right-hand side; anything else means the fixture was mistranscribed.
double equation_defect(const BuiltinExample& example, double z) {
    if (example.is_nonlinear()) {
        const auto& p = std::get<NonlinearBvp>(example.problem);
        std::vector<double> slots(static_cast<std::size_t>(p.order) + 1);
        for (int k = 0; k <= p.order; ++k)
            slots[static_cast<std::size_t>(k)] = example.exact_derivative(k, z);
        const double g = p.rhs ? p.rhs(z) : 0.0;
        return p.residual(z, slots) - g;
    }
    const auto& p = std::get<LinearBvp>(example.problem);
    double acc = 0.0;
    for (int k = 0; k <= p.order; ++k)
        acc += p.coefficients[static_cast<std::size_t>(k)](z) * example.exact_derivative(k, z);
    return acc - p.rhs(z);
}

double rhs_magnitude(const BuiltinExample& example, double z) {
    if (example.is_nonlinear()) {
        const auto& p = std::get<NonlinearBvp>(example.problem);
        return p.rhs ? std::abs(p.rhs(z)) : 0.0;
    }
    return std::abs(std::get<LinearBvp>(example.problem).rhs(z));
}

}  // namespace

TEST_CASE("the catalog holds five problems with the advertised shapes") {
    const int orders[5] = {4, 3, 6, 9, 12};
    const bool nonlinear[5] = {true, false, false, false, false};
    for (int id = 1; id <= mcbvp::builtin_count; ++id) {
        const BuiltinExample example = mcbvp::builtin(id);
        CAPTURE(id);
        CHECK(example.id == id);
        CHECK_FALSE(example.title.empty());
        CHECK_FALSE(example.exact_text.empty());
        CHECK_FALSE(example.document.empty());
        CHECK(example.order() == orders[id - 1]);
        CHECK(example.is_nonlinear() == nonlinear[id - 1]);
        CHECK(example.conditions().size() == static_cast<std::size_t>(orders[id - 1]));
        CHECK(example.reference_mae.size() == 6);
    }
    CHECK(mcbvp::builtin(1).reference_ae_n10.size() == 11);
    CHECK(mcbvp::builtin(4).reference_ae_n10.size() == 11);
    CHECK(mcbvp::builtin(2).reference_ae_n10.empty());
}

TEST_CASE("unknown catalog ids are rejected") {
    CHECK_THROWS_AS((void)mcbvp::builtin(0), std::invalid_argument);
    CHECK_THROWS_AS((void)mcbvp::builtin(6), std::invalid_argument);
    CHECK_THROWS_AS((void)mcbvp::builtin(-1), std::invalid_argument);
}

TEST_CASE("closed-form solutions satisfy their differential equations") {
    const auto samples = reference_samples();
    for (int id = 1; id <= mcbvp::builtin_count; ++id) {
        const BuiltinExample example = mcbvp::builtin(id);
        CAPTURE(id);
        for (double z : samples) {
            const double defect = equation_defect(example, z);
            const double tol = 1e-9 * std::max(1.0, rhs_magnitude(example, z));
            CHECK(std::abs(defect) <= tol);
        }
    }
}

TEST_CASE("closed-form solutions satisfy every boundary condition") {
    for (int id = 1; id <= mcbvp::builtin_count; ++id) {
        const BuiltinExample example = mcbvp::builtin(id);
        CAPTURE(id);
        for (const BoundaryCondition& c : example.conditions()) {
            const double endpoint = c.endpoint == Endpoint::right ? 1.0 : -1.0;
            const double expected = example.exact_derivative(c.derivative_order, endpoint);
            CHECK(std::abs(c.value - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("exact value and exact derivative fixtures are mutually consistent") {
    for (int id = 1; id <= mcbvp::builtin_count; ++id) {
        const BuiltinExample example = mcbvp::builtin(id);
        CAPTURE(id);
        for (double z : {-0.85, -0.3, 0.4, 0.95}) {
            CHECK(example.exact(z) ==
                  doctest::Approx(example.exact_derivative(0, z)).epsilon(1e-14));
            const double h = 1e-6;
            const double fd =
                (example.exact_derivative(0, z + h) - example.exact_derivative(0, z - h)) /
                (2.0 * h);
            CHECK(std::abs(fd - example.exact_derivative(1, z)) <=
                  1e-4 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("each problem solves to near machine accuracy at a moderate truncation") {
    struct Point {
        int id;
        int n;
        double bound;
    };
    const Point points[] = {
        {1, 12, 1e-8}, {2, 12, 1e-11}, {3, 15, 1e-12}, {4, 14, 1e-12}, {5, 14, 1e-13},
    };
    for (const Point& point : points) {
        const BuiltinExample example = mcbvp::builtin(point.id);
        CAPTURE(point.id);
        mcbvp::SpectralSolution solution =
            example.is_nonlinear()
                ? mcbvp::solve_nonlinear(std::get<NonlinearBvp>(example.problem), point.n)
                : mcbvp::solve_linear(std::get<LinearBvp>(example.problem), point.n);
        CHECK(solution.report().converged);
        const double mae = mcbvp::error_report_uniform(solution, example.exact).mae;
        CHECK(mae <= point.bound);
    }
}

TEST_CASE("stored accuracy tables carry the published figures") {
    const auto find = [](const BuiltinExample& example, int n) {
        for (const auto& entry : example.reference_mae)
            if (entry.n == n) return entry.mae;
        FAIL("missing table entry");
        return 0.0;
    };
    const BuiltinExample e1 = mcbvp::builtin(1);
    CHECK(find(e1, 10) == 7.5991e-05);
    CHECK(find(e1, 20) == 4.4409e-16);
    const BuiltinExample e2 = mcbvp::builtin(2);
    CHECK(find(e2, 6) == 2.563e-04);
    CHECK(find(e2, 15) == 1.110e-16);
    const BuiltinExample e3 = mcbvp::builtin(3);
    CHECK(find(e3, 12) == 3.163e-09);
    const BuiltinExample e4 = mcbvp::builtin(4);
    CHECK(find(e4, 10) == 1.3974e-09);
    const BuiltinExample e5 = mcbvp::builtin(5);
    CHECK(find(e5, 12) == 1.711e-12);

    // Pointwise profile for the ninth-order problem at N = 10 peaks mid-interval.
    double peak = 0.0;
    double peak_coord = -2.0;
    for (const auto& point : e4.reference_ae_n10) {
        if (point.ae > peak) {
            peak = point.ae;
            peak_coord = point.coord;
        }
    }
    CHECK(peak == 1.397438e-09);
    CHECK(peak_coord == 0.0);
}

TEST_CASE("problem documents round-trip through the file loader") {
    for (int id = 1; id <= mcbvp::builtin_count; ++id) {
        const BuiltinExample example = mcbvp::builtin(id);
        CAPTURE(id);
        const mcbvp::ProblemSpec loaded = mcbvp::load_problem_json(example.problem_json());
        CHECK(loaded.order() == example.order());
        CHECK(loaded.is_nonlinear() == example.is_nonlinear());
        CHECK(loaded.interval_a() == -1.0);
        CHECK(loaded.interval_b() == 1.0);
        REQUIRE(loaded.exact.has_value());

        const int n = example.order() + 6;
        mcbvp::SpectralSolution from_fixture =
            example.is_nonlinear()
                ? mcbvp::solve_nonlinear(std::get<NonlinearBvp>(example.problem), n)
                : mcbvp::solve_linear(std::get<LinearBvp>(example.problem), n);
        mcbvp::SpectralSolution from_loader =
            loaded.is_nonlinear()
                ? mcbvp::solve_nonlinear(std::get<NonlinearBvp>(loaded.problem), n)
                : mcbvp::solve_linear(std::get<LinearBvp>(loaded.problem), n);
        REQUIRE(from_fixture.coefficients().size() == from_loader.coefficients().size());
        for (std::size_t i = 0; i < from_fixture.coefficients().size(); ++i)
            CHECK(std::abs(from_fixture.coefficients()[i] - from_loader.coefficients()[i]) <=
                  1e-9);
    }
}

TEST_CASE("interpolating the exact nonlinear solution nearly solves the system") {
    const BuiltinExample example = mcbvp::builtin(1);
    const NonlinearBvp& problem = std::get<NonlinearBvp>(example.problem);
    const int n = 20;
    const mcbvp::CglGrid grid(n);
    const mcbvp::McpBasis basis(n);

    mcbvp::Matrix vandermonde(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    Vector values(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i)
            vandermonde(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) =
                mcbvp::eval_recurrence(i, grid.node(j));
        values[static_cast<std::size_t>(j)] = example.exact(grid.node(j));
    }
    const Vector projected = mcbvp::lu_solve(vandermonde, values);
    const Vector residual = mcbvp::assemble_residual(problem, grid, basis, projected);
    CHECK(mcbvp::infinity_norm(residual) <= 5e-8);
}

TEST_CASE("a corrupted leading coefficient is detectable by the equation defect") {
    const BuiltinExample example = mcbvp::builtin(5);
    LinearBvp corrupted = std::get<LinearBvp>(example.problem);
    corrupted.coefficients[12] = [](double) { return 2096.0; };

    double worst_correct = 0.0;
    double worst_corrupted = 0.0;
    for (double z : reference_samples()) {
        double acc_correct = 0.0;
        double acc_corrupted = 0.0;
        for (int k = 0; k <= 12; ++k) {
            const double yk = example.exact_derivative(k, z);
            acc_correct +=
                std::get<LinearBvp>(example.problem).coefficients[static_cast<std::size_t>(k)](
                    z) *
                yk;
            acc_corrupted += corrupted.coefficients[static_cast<std::size_t>(k)](z) * yk;
        }
        const double g = corrupted.rhs(z);
        worst_correct = std::max(worst_correct, std::abs(acc_correct - g));
        worst_corrupted = std::max(worst_corrupted, std::abs(acc_corrupted - g));
    }
    CHECK(worst_correct <= 1e-9);
    CHECK(worst_corrupted >= 1.0);

    // Solving the corrupted equation converges to a genuinely different
    // equation's solution: it violates the original equation by O(100) even
    // though the twelfth-order inverse damps the value-level change below 1e-8.
    const mcbvp::SpectralSolution solution = mcbvp::solve_linear(corrupted, 16);
    const LinearBvp& original = std::get<LinearBvp>(example.problem);
    double worst_original_defect = 0.0;
    for (double z : reference_samples()) {
        double acc = 0.0;
        for (int k = 0; k <= 12; ++k) {
            acc += original.coefficients[static_cast<std::size_t>(k)](z) *
                   solution.evaluate(z, k);
        }
        worst_original_defect = std::max(worst_original_defect, std::abs(acc - original.rhs(z)));
    }
    CHECK(worst_original_defect >= 1.0);
    CHECK(mcbvp::error_report_uniform(solution, example.exact).mae <= 1e-8);
}

TEST_CASE("solutions reproduce the published error profile shape at low truncation") {
    const BuiltinExample example = mcbvp::builtin(4);
    const LinearBvp& problem = std::get<LinearBvp>(example.problem);
    const mcbvp::SpectralSolution solution = mcbvp::solve_linear(problem, 10);

    double computed_peak = 0.0;
    double computed_arg = -2.0;
    for (const auto& point : example.reference_ae_n10) {
        const double ae = std::abs(solution.evaluate(point.coord) - example.exact(point.coord));
        if (ae > computed_peak) {
            computed_peak = ae;
            computed_arg = point.coord;
        }
    }
    CHECK(std::abs(computed_arg) <= 0.4);
    CHECK(computed_peak <= 100.0 * 1.397438e-09);
    CHECK(computed_peak >= 1.397438e-09 / 100.0);
}
