#pragma once

#include "mcbvp/linalg.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace mcbvp {

struct NewtonConfig {
    double residual_tolerance = 1e-13;              // infinity norm
    int max_iterations = 50;
    double fd_step_scale = 1.4901161193847656e-08;  // 2^-26
    bool damping_enabled = true;
};

struct SolveReport {
    int iterations = 0;
    double final_residual_norm = 0.0;
    bool converged = false;
    std::optional<double> condition_estimate;
};

using ResidualFn = std::function<Vector(const Vector&)>;
using JacobianFn = std::function<Matrix(const Vector&)>;

class SingularJacobianError : public std::runtime_error {
public:
    SingularJacobianError(const std::string& what, int iteration);
    int iteration() const noexcept { return iteration_; }

private:
    int iteration_;
};

/// Column-wise forward-difference Jacobian with per-column step
/// h_i = fd_step_scale * (1 + |x_i|).
Matrix finite_difference_jacobian(const ResidualFn& residual, const Vector& x,
                                  double fd_step_scale);

/// Damped Newton iteration for square systems. When jacobian is empty the
/// finite-difference Jacobian is used; either way it is refreshed every
/// iteration. Damping halves the step (at most 20 times) while the trial
/// residual norm exceeds the current one. A singular Jacobian surfaces as
/// SingularJacobianError carrying the iteration index; non-convergence within
/// max_iterations is reported, not thrown.
std::pair<Vector, SolveReport> newton_solve(const ResidualFn& residual,
                                            const JacobianFn& jacobian,
                                            Vector initial,
                                            const NewtonConfig& config = {});

}  // namespace mcbvp
