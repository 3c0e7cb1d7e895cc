#include "mcbvp/assemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mcbvp {

namespace {

void check_dimensions(int order, const CglGrid& grid, const McpBasis& basis) {
    if (grid.n() != basis.max_degree())
        throw std::invalid_argument("assembly: grid N and basis max degree must agree");
    if (grid.n() < order)
        throw std::invalid_argument("assembly: truncation N = " + std::to_string(grid.n()) +
                                    " is below the problem order " + std::to_string(order));
}

/// sigma^0 .. sigma^order, so derivative rescaling costs one lookup.
std::vector<double> scale_powers(double sigma, int order) {
    std::vector<double> powers(static_cast<std::size_t>(order) + 1, 1.0);
    for (int k = 1; k <= order; ++k) powers[static_cast<std::size_t>(k)] = powers[k - 1] * sigma;
    return powers;
}

}  // namespace

std::vector<RowInfo> row_plan(int n, std::span<const BoundaryCondition> conditions) {
    if (n < 1) throw std::invalid_argument("row_plan: N must be at least 1");
    if (conditions.size() > static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("row_plan: more boundary conditions than rows");

    std::vector<int> right_rows;
    std::vector<int> left_rows;
    for (std::size_t i = 0; i < conditions.size(); ++i)
        (conditions[i].endpoint == Endpoint::right ? right_rows : left_rows)
            .push_back(static_cast<int>(i));
    auto by_derivative_order = [&conditions](int lhs, int rhs) {
        return conditions[static_cast<std::size_t>(lhs)].derivative_order <
               conditions[static_cast<std::size_t>(rhs)].derivative_order;
    };
    std::stable_sort(right_rows.begin(), right_rows.end(), by_derivative_order);
    std::stable_sort(left_rows.begin(), left_rows.end(), by_derivative_order);

    // z_0 = +1 heads the grid and z_N = -1 ends it, so right-endpoint
    // conditions displace the leading rows and left-endpoint conditions the
    // trailing ones.
    std::vector<RowInfo> plan(static_cast<std::size_t>(n) + 1);
    std::size_t row = 0;
    for (int ci : right_rows) plan[row++] = {RowKind::boundary, -1, ci};
    const int first_retained = static_cast<int>(right_rows.size());
    const int last_retained = n - static_cast<int>(left_rows.size());
    for (int j = first_retained; j <= last_retained; ++j)
        plan[row++] = {RowKind::collocation, j, -1};
    for (int ci : left_rows) plan[row++] = {RowKind::boundary, -1, ci};
    return plan;
}

AssembledSystem assemble_linear_system(const LinearBvp& problem, const CglGrid& grid,
                                       const McpBasis& basis) {
    validate_interval(problem.interval_a, problem.interval_b);
    validate_conditions(problem.order, problem.conditions);
    check_dimensions(problem.order, grid, basis);
    if (problem.coefficients.size() != static_cast<std::size_t>(problem.order) + 1)
        throw std::invalid_argument(
            "assemble_linear_system: expected order+1 coefficient functions, got " +
            std::to_string(problem.coefficients.size()));
    for (const ScalarFn& f : problem.coefficients)
        if (!f)
            throw std::invalid_argument(
                "assemble_linear_system: every coefficient must be callable");
    if (!problem.rhs)
        throw std::invalid_argument("assemble_linear_system: right-hand side must be callable");

    const int n = grid.n();
    const int order = problem.order;
    const AffineMap map(problem.interval_a, problem.interval_b);
    const std::vector<double> sigma = scale_powers(map.scale(), order);
    const std::vector<RowInfo> plan = row_plan(n, problem.conditions);

    AssembledSystem system;
    system.matrix = Matrix(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    system.rhs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    system.rows = plan;

    double leading_magnitude = 0.0;
    for (std::size_t r = 0; r < plan.size(); ++r) {
        const RowInfo& row = plan[r];
        if (row.kind == RowKind::collocation) {
            const double z = grid.node(row.node_index);
            const double x = map.from_reference(z);
            const DerivativeTable table(n, order, z);
            for (int k = 0; k <= order; ++k) {
                const double fk =
                    problem.coefficients[static_cast<std::size_t>(k)](x) *
                    sigma[static_cast<std::size_t>(k)];
                if (k == order && std::abs(fk) > leading_magnitude)
                    leading_magnitude = std::abs(fk);
                if (fk == 0.0) continue;
                for (int i = 0; i <= n; ++i)
                    system.matrix(r, static_cast<std::size_t>(i)) += fk * table(i, k);
            }
            system.rhs[r] = problem.rhs(x);
        } else {
            const BoundaryCondition& c =
                problem.conditions[static_cast<std::size_t>(row.condition_index)];
            const double z = c.endpoint == Endpoint::right ? 1.0 : -1.0;
            const DerivativeTable table(n, c.derivative_order, z);
            for (int i = 0; i <= n; ++i)
                system.matrix(r, static_cast<std::size_t>(i)) = table(i, c.derivative_order);
            system.rhs[r] = c.value / sigma[static_cast<std::size_t>(c.derivative_order)];
        }
    }
    if (leading_magnitude == 0.0)
        throw std::invalid_argument(
            "assemble_linear_system: the leading coefficient vanishes at every "
            "collocation node, so the problem degenerates");
    return system;
}

namespace {

/// Native-scaled derivative slots (y, y', ..., y^(m)) of the expansion at one
/// reference node.
std::vector<double> expansion_slots(const DerivativeTable& table, int n, int order,
                                    std::span<const double> coeffs,
                                    std::span<const double> sigma) {
    std::vector<double> slots(static_cast<std::size_t>(order) + 1, 0.0);
    for (int s = 0; s <= order; ++s) {
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) acc += coeffs[static_cast<std::size_t>(i)] * table(i, s);
        slots[static_cast<std::size_t>(s)] = acc * sigma[static_cast<std::size_t>(s)];
    }
    return slots;
}

void check_nonlinear(const NonlinearBvp& problem, const CglGrid& grid, const McpBasis& basis,
                     std::span<const double> coeffs) {
    validate_interval(problem.interval_a, problem.interval_b);
    validate_conditions(problem.order, problem.conditions);
    check_dimensions(problem.order, grid, basis);
    if (!problem.residual)
        throw std::invalid_argument("assemble_residual: residual function must be callable");
    if (coeffs.size() != static_cast<std::size_t>(grid.n()) + 1)
        throw std::invalid_argument("assemble_residual: expected N+1 coefficients, got " +
                                    std::to_string(coeffs.size()));
}

}  // namespace

Vector assemble_residual(const NonlinearBvp& problem, const CglGrid& grid, const McpBasis& basis,
                         std::span<const double> coeffs) {
    check_nonlinear(problem, grid, basis, coeffs);

    const int n = grid.n();
    const int order = problem.order;
    const AffineMap map(problem.interval_a, problem.interval_b);
    const std::vector<double> sigma = scale_powers(map.scale(), order);
    const std::vector<RowInfo> plan = row_plan(n, problem.conditions);

    Vector residual(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::size_t r = 0; r < plan.size(); ++r) {
        const RowInfo& row = plan[r];
        if (row.kind == RowKind::collocation) {
            const double z = grid.node(row.node_index);
            const double x = map.from_reference(z);
            const DerivativeTable table(n, order, z);
            const std::vector<double> slots = expansion_slots(table, n, order, coeffs, sigma);
            const double g = problem.rhs ? problem.rhs(x) : 0.0;
            const double value = problem.residual(x, slots) - g;
            if (!std::isfinite(value))
                throw std::runtime_error(
                    "assemble_residual: non-finite residual at node index " +
                    std::to_string(row.node_index));
            residual[r] = value;
        } else {
            const BoundaryCondition& c =
                problem.conditions[static_cast<std::size_t>(row.condition_index)];
            const double z = c.endpoint == Endpoint::right ? 1.0 : -1.0;
            const DerivativeTable table(n, c.derivative_order, z);
            double acc = 0.0;
            for (int i = 0; i <= n; ++i)
                acc += coeffs[static_cast<std::size_t>(i)] * table(i, c.derivative_order);
            residual[r] =
                acc - c.value / sigma[static_cast<std::size_t>(c.derivative_order)];
        }
    }
    return residual;
}

Matrix assemble_jacobian(const NonlinearBvp& problem, const CglGrid& grid, const McpBasis& basis,
                         std::span<const double> coeffs) {
    check_nonlinear(problem, grid, basis, coeffs);
    if (problem.partials.size() != static_cast<std::size_t>(problem.order) + 1)
        throw std::invalid_argument(
            "assemble_jacobian: analytic partials for every slot y0..ym are required");
    for (const SlotFn& p : problem.partials)
        if (!p)
            throw std::invalid_argument("assemble_jacobian: every partial must be callable");

    const int n = grid.n();
    const int order = problem.order;
    const AffineMap map(problem.interval_a, problem.interval_b);
    const std::vector<double> sigma = scale_powers(map.scale(), order);
    const std::vector<RowInfo> plan = row_plan(n, problem.conditions);

    Matrix jac(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < plan.size(); ++r) {
        const RowInfo& row = plan[r];
        if (row.kind == RowKind::collocation) {
            const double z = grid.node(row.node_index);
            const double x = map.from_reference(z);
            const DerivativeTable table(n, order, z);
            const std::vector<double> slots = expansion_slots(table, n, order, coeffs, sigma);
            for (int s = 0; s <= order; ++s) {
                const double weight = problem.partials[static_cast<std::size_t>(s)](x, slots) *
                                      sigma[static_cast<std::size_t>(s)];
                if (weight == 0.0) continue;
                for (int i = 0; i <= n; ++i)
                    jac(r, static_cast<std::size_t>(i)) += weight * table(i, s);
            }
        } else {
            const BoundaryCondition& c =
                problem.conditions[static_cast<std::size_t>(row.condition_index)];
            const double z = c.endpoint == Endpoint::right ? 1.0 : -1.0;
            const DerivativeTable table(n, c.derivative_order, z);
            for (int i = 0; i <= n; ++i)
                jac(r, static_cast<std::size_t>(i)) = table(i, c.derivative_order);
        }
    }
    return jac;
}

}  // namespace mcbvp
