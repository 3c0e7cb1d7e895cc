#pragma once

#include <functional>
#include <span>
#include <vector>

namespace mcbvp {

enum class Endpoint { left, right };

/// One endpoint condition y^(q)(a) = value or y^(q)(b) = value, stated in the
/// problem's native coordinates.
struct BoundaryCondition {
    Endpoint endpoint = Endpoint::left;
    int derivative_order = 0;
    double value = 0.0;
};

using ScalarFn = std::function<double(double)>;
using SlotFn = std::function<double(double, std::span<const double>)>;

/// Linear two-point problem sum_k f_k(x) y^(k)(x) = g(x) on [a,b] with
/// exactly order boundary conditions. coefficients[k] is f_k (index equals
/// derivative order), so the vector has order+1 entries and every entry must
/// be a valid callable; write explicit zeros for absent terms.
struct LinearBvp {
    int order = 0;
    std::vector<ScalarFn> coefficients;
    ScalarFn rhs;
    std::vector<BoundaryCondition> conditions;
    double interval_a = -1.0;
    double interval_b = 1.0;
};

/// Nonlinear problem F(x, y, y', ..., y^(m)) = g(x) in residual form. The
/// residual receives the coordinate and the slot vector (y, y', ..., y^(m))
/// in native scaling. partials, when provided, holds dF/dy_s for every
/// s = 0..order and enables the analytic Jacobian path; leave it empty to
/// fall back to finite differences.
struct NonlinearBvp {
    int order = 0;
    SlotFn residual;
    ScalarFn rhs;  // empty means identically zero
    std::vector<BoundaryCondition> conditions;
    double interval_a = -1.0;
    double interval_b = 1.0;
    std::vector<SlotFn> partials;
};

/// Wrap a linear problem in residual form, with exact partials dF/dy_s = f_s.
/// Newton on the result converges in a single step, which the tests use to
/// check the two assembly paths against each other.
NonlinearBvp as_nonlinear(const LinearBvp& problem);

/// Throws std::invalid_argument unless the interval is finite with a < b.
void validate_interval(double a, double b);

/// Throws std::invalid_argument unless the condition count equals order,
/// every derivative order q satisfies 0 <= q < order, and no (endpoint, q)
/// pair repeats.
void validate_conditions(int order, std::span<const BoundaryCondition> conditions);

}  // namespace mcbvp
