#pragma once

#include "mcbvp/grid.hpp"
#include "mcbvp/linalg.hpp"
#include "mcbvp/mcp_basis.hpp"
#include "mcbvp/problem.hpp"

#include <span>
#include <vector>

namespace mcbvp {

enum class RowKind { collocation, boundary };

struct RowInfo {
    RowKind kind = RowKind::collocation;
    int node_index = -1;       // collocation rows: index j of the retained node z_j
    int condition_index = -1;  // boundary rows: index into problem.conditions
};

/// Row layout shared by the linear and nonlinear assembly paths. Conditions
/// at the right endpoint (z = +1) replace the leading rows 0, 1, ... and
/// conditions at the left endpoint (z = -1) replace the trailing rows
/// N, N-1, ...; within one endpoint they are ordered by ascending derivative
/// order. The rows in between collocate the equation at the retained interior
/// nodes, preserving their grid order.
std::vector<RowInfo> row_plan(int n, std::span<const BoundaryCondition> conditions);

struct AssembledSystem {
    Matrix matrix;
    Vector rhs;
    std::vector<RowInfo> rows;
};

/// Collocation matrix and right-hand side for a linear problem on the given
/// grid. Entry (r, i) of a collocation row is sum_k f_k(x_r) sigma^k
/// Q_i^(k)(z_r); boundary rows enforce Q-expansion derivatives at z = +-1
/// with the condition value rescaled by sigma^-q. Requires
/// grid.n() == basis.max_degree() and grid.n() >= problem.order, and rejects
/// a leading coefficient that vanishes at every retained node.
AssembledSystem assemble_linear_system(const LinearBvp& problem, const CglGrid& grid,
                                       const McpBasis& basis);

/// Pointwise residual of a nonlinear problem at the expansion coefficients:
/// collocation rows give F(x_j, y, ..., y^(m)) - g(x_j) with native-scaled
/// derivative slots, boundary rows give the same reference-scaled mismatch
/// the linear path uses, so for a wrapped linear problem this equals
/// matrix * coeffs - rhs row by row. Non-finite entries are reported with
/// the offending node index.
Vector assemble_residual(const NonlinearBvp& problem, const CglGrid& grid,
                         const McpBasis& basis, std::span<const double> coeffs);

/// Jacobian of assemble_residual with respect to the coefficients, using the
/// problem's analytic partials (all order+1 of them must be present).
Matrix assemble_jacobian(const NonlinearBvp& problem, const CglGrid& grid,
                         const McpBasis& basis, std::span<const double> coeffs);

}  // namespace mcbvp
