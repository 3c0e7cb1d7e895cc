#include "mcbvp/newton.hpp"

#include <cmath>
#include <string>

namespace mcbvp {

namespace {

constexpr int max_halvings = 20;

void validate_config(const NewtonConfig& config) {
    if (!(config.residual_tolerance > 0.0))
        throw std::invalid_argument("newton_solve: residual_tolerance must be positive");
    if (config.max_iterations < 1)
        throw std::invalid_argument("newton_solve: max_iterations must be at least 1");
    if (!(config.fd_step_scale > 0.0))
        throw std::invalid_argument("newton_solve: fd_step_scale must be positive");
}

}  // namespace

SingularJacobianError::SingularJacobianError(const std::string& what, int iteration)
    : std::runtime_error(what), iteration_(iteration) {}

Matrix finite_difference_jacobian(const ResidualFn& residual, const Vector& x,
                                  double fd_step_scale) {
    const Vector r0 = residual(x);
    if (r0.size() != x.size())
        throw std::invalid_argument("finite_difference_jacobian: system is not square");
    Matrix jac(r0.size(), x.size());
    Vector probe = x;
    for (std::size_t col = 0; col < x.size(); ++col) {
        const double h = fd_step_scale * (1.0 + std::abs(x[col]));
        probe[col] = x[col] + h;
        const Vector rp = residual(probe);
        probe[col] = x[col];
        for (std::size_t row = 0; row < r0.size(); ++row)
            jac(row, col) = (rp[row] - r0[row]) / h;
    }
    return jac;
}

std::pair<Vector, SolveReport> newton_solve(const ResidualFn& residual,
                                            const JacobianFn& jacobian, Vector initial,
                                            const NewtonConfig& config) {
    validate_config(config);
    if (!residual) throw std::invalid_argument("newton_solve: residual function is required");
    for (double v : initial)
        if (!std::isfinite(v))
            throw std::invalid_argument("newton_solve: initial guess must be finite");

    Vector x = std::move(initial);
    Vector r = residual(x);
    if (r.size() != x.size())
        throw std::invalid_argument("newton_solve: residual dimension does not match unknowns");
    double r_norm = infinity_norm(r);

    SolveReport report;
    if (r_norm <= config.residual_tolerance) {
        report.iterations = 0;
        report.final_residual_norm = r_norm;
        report.converged = true;
        return {std::move(x), report};
    }

    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        Matrix jac = jacobian ? jacobian(x)
                              : finite_difference_jacobian(residual, x, config.fd_step_scale);
        Vector neg_r = r;
        for (double& v : neg_r) v = -v;
        Vector step;
        try {
            step = lu_solve(std::move(jac), std::move(neg_r));
        } catch (const SingularMatrixError& err) {
            throw SingularJacobianError("newton_solve: singular Jacobian at iteration " +
                                            std::to_string(iter) + " (" + err.what() + ")",
                                        iter);
        }

        Vector candidate(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) candidate[i] = x[i] + step[i];
        Vector r_new = residual(candidate);
        double new_norm = infinity_norm(r_new);

        if (config.damping_enabled) {
            double lambda = 1.0;
            int halvings = 0;
            while (new_norm > r_norm && new_norm > config.residual_tolerance &&
                   halvings < max_halvings) {
                lambda *= 0.5;
                ++halvings;
                for (std::size_t i = 0; i < x.size(); ++i) candidate[i] = x[i] + lambda * step[i];
                r_new = residual(candidate);
                new_norm = infinity_norm(r_new);
            }
        }

        x = std::move(candidate);
        r = std::move(r_new);
        r_norm = new_norm;

        if (r_norm <= config.residual_tolerance) {
            report.iterations = iter;
            report.final_residual_norm = r_norm;
            report.converged = true;
            return {std::move(x), report};
        }
    }

    report.iterations = config.max_iterations;
    report.final_residual_norm = r_norm;
    report.converged = false;
    return {std::move(x), report};
}

}  // namespace mcbvp
