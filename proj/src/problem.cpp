#include "mcbvp/problem.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcbvp {

void validate_interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::invalid_argument("interval endpoints must be finite with a < b");
}

void validate_conditions(int order, std::span<const BoundaryCondition> conditions) {
    if (order < 0) throw std::invalid_argument("problem order must be non-negative");
    if (conditions.size() != static_cast<std::size_t>(order))
        throw std::invalid_argument("expected exactly " + std::to_string(order) +
                                    " boundary conditions for an order-" + std::to_string(order) +
                                    " problem, got " + std::to_string(conditions.size()));
    std::set<std::pair<int, int>> seen;
    for (const BoundaryCondition& c : conditions) {
        if (c.derivative_order < 0 || c.derivative_order >= order)
            throw std::invalid_argument("boundary condition derivative order " +
                                        std::to_string(c.derivative_order) +
                                        " must satisfy 0 <= q < " + std::to_string(order));
        if (!std::isfinite(c.value))
            throw std::invalid_argument("boundary condition values must be finite");
        const auto key = std::make_pair(c.endpoint == Endpoint::left ? 0 : 1, c.derivative_order);
        if (!seen.insert(key).second)
            throw std::invalid_argument(
                "duplicate boundary condition: derivative order " +
                std::to_string(c.derivative_order) + " at the " +
                (c.endpoint == Endpoint::left ? std::string("left") : std::string("right")) +
                " endpoint appears twice");
    }
}

NonlinearBvp as_nonlinear(const LinearBvp& problem) {
    if (problem.coefficients.size() != static_cast<std::size_t>(problem.order) + 1)
        throw std::invalid_argument("as_nonlinear: expected order+1 coefficient functions");
    for (const ScalarFn& f : problem.coefficients)
        if (!f) throw std::invalid_argument("as_nonlinear: every coefficient must be callable");

    NonlinearBvp result;
    result.order = problem.order;
    result.rhs = problem.rhs;
    result.conditions = problem.conditions;
    result.interval_a = problem.interval_a;
    result.interval_b = problem.interval_b;

    const auto coefficients = problem.coefficients;
    result.residual = [coefficients](double x, std::span<const double> slots) {
        double acc = 0.0;
        for (std::size_t k = 0; k < coefficients.size(); ++k)
            acc += coefficients[k](x) * slots[k];
        return acc;
    };
    result.partials.reserve(coefficients.size());
    for (const ScalarFn& f : coefficients)
        result.partials.push_back(
            [f](double x, std::span<const double>) { return f(x); });
    return result;
}

}  // namespace mcbvp
