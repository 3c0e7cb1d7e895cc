#pragma once

#include "mcbvp/assemble.hpp"
#include "mcbvp/newton.hpp"

#include <span>
#include <vector>

namespace mcbvp {

/// A solved expansion y(x) = sum_i A_i Q_i(z(x)). Evaluation maps the query
/// point onto [-1,1] and applies the chain-rule factor scale()^m for
/// derivative queries on problems authored over a native interval [a,b].
class SpectralSolution {
public:
    SpectralSolution(Vector coefficients, McpBasis basis, AffineMap map, SolveReport report);

    const Vector& coefficients() const noexcept { return coefficients_; }
    const McpBasis& basis() const noexcept { return basis_; }
    const AffineMap& map() const noexcept { return map_; }
    const SolveReport& report() const noexcept { return report_; }

    /// Truncation degree N (one less than the coefficient count).
    int truncation() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

    double evaluate(double x, int derivative_order = 0) const;

private:
    Vector coefficients_;
    McpBasis basis_;
    AffineMap map_;
    SolveReport report_;
};

std::vector<double> evaluate_solution(const SpectralSolution& solution,
                                      std::span<const double> points,
                                      int derivative_order = 0);

/// Direct collocation solve of a linear problem at truncation N. The report
/// carries zero iterations and the achieved algebraic residual |A c - b|_inf.
SpectralSolution solve_linear(const LinearBvp& problem, int n);

/// Newton collocation solve of a nonlinear problem at truncation N. The
/// initial guess is one full Newton step from the zero coefficient vector
/// (a linearization of the problem); if that step fails the zero vector is
/// used directly. Non-convergence is reported in the result, not thrown.
SpectralSolution solve_nonlinear(const NonlinearBvp& problem, int n,
                                 const NewtonConfig& config = {});

struct ErrorReport {
    std::vector<double> sample_points;
    std::vector<double> absolute_errors;
    double mae = 0.0;  // maximum absolute error over the samples
};

ErrorReport error_report(const SpectralSolution& solution, const ScalarFn& exact,
                         std::span<const double> points);

/// count equally spaced points from a to b inclusive.
std::vector<double> uniform_grid(double a, double b, int count);

/// The MAE convention used by sweeps and benchmark tables: a uniform
/// 201-point grid over the native interval.
ErrorReport error_report_uniform(const SpectralSolution& solution, const ScalarFn& exact,
                                 int count = 201);

}  // namespace mcbvp
