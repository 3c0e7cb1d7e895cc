#include "mcbvp/mcp_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mcbvp {

namespace {

void require_non_negative(int value, const char* what) {
    if (value < 0)
        throw std::invalid_argument(std::string(what) + " must be non-negative, got " +
                                    std::to_string(value));
}

}  // namespace

std::vector<PolyTerm> mcp_coefficients(int n) {
    require_non_negative(n, "mcp_coefficients: degree");
    if (n == 0) return {{0, 1.0}};
    std::vector<PolyTerm> terms;
    terms.reserve(static_cast<std::size_t>(n / 2) + 1);
    double b = 1.0;
    terms.push_back({n, b});
    for (int k = 1; k <= n / 2; ++k) {
        b *= -static_cast<double>((n - 2 * k + 2) * (n - 2 * k + 1)) /
             static_cast<double>(4 * k * (n - k));
        terms.push_back({n - 2 * k, b});
    }
    return terms;
}

double eval_recurrence(int n, double z) {
    require_non_negative(n, "eval_recurrence: degree");
    if (n == 0) return 1.0;
    if (n == 1) return z;
    double prev = z;            // Q_1
    double curr = z * z - 0.5;  // Q_2
    for (int k = 3; k <= n; ++k) {
        const double next = z * curr - 0.25 * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

double derivative_factor(int n, int k, int m) {
    require_non_negative(n, "derivative_factor: n");
    require_non_negative(k, "derivative_factor: k");
    require_non_negative(m, "derivative_factor: m");
    if (2 * k > n)
        throw std::invalid_argument("derivative_factor: series index k exceeds n/2");
    const int exponent = n - 2 * k;
    double value = 1.0;
    for (int l = 0; l < m; ++l) value *= static_cast<double>(exponent - l);
    return value;
}

double eval_derivative_series(int n, int m, double z) {
    require_non_negative(n, "eval_derivative_series: degree");
    require_non_negative(m, "eval_derivative_series: order");
    if (m > n) return 0.0;
    if (n == 0) return 1.0;
    // Horner over the stride-two exponents n-m, n-m-2, ...; the series
    // coefficients arrive in ascending k, which is descending exponent.
    const int k_max = (n - m) / 2;
    const double w = z * z;
    double b = 1.0;
    double acc = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0)
            b *= -static_cast<double>((n - 2 * k + 2) * (n - 2 * k + 1)) /
                 static_cast<double>(4 * k * (n - k));
        acc = acc * w + b * derivative_factor(n, k, m);
    }
    return ((n - m) % 2 != 0) ? acc * z : acc;
}

double eval_derivative_recurrence(int n, int m, double z) {
    require_non_negative(n, "eval_derivative_recurrence: degree");
    require_non_negative(m, "eval_derivative_recurrence: order");
    if (m > n) return 0.0;
    const DerivativeTable table(n, m, z);
    return table(n, m);
}

DerivativeTable::DerivativeTable(int degree, int order, double z)
    : degree_(degree), order_(order) {
    require_non_negative(degree, "DerivativeTable: degree");
    require_non_negative(order, "DerivativeTable: order");
    values_.assign(static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(order + 1),
                   0.0);
    auto at = [this](int n, int m) -> double& {
        return values_[static_cast<std::size_t>(n) * (order_ + 1) + m];
    };
    at(0, 0) = 1.0;
    if (degree_ >= 1) {
        at(1, 0) = z;
        if (order_ >= 1) at(1, 1) = 1.0;
    }
    for (int n = 2; n <= degree_; ++n) {
        const double c = (n == 2) ? 0.5 : 0.25;
        for (int m = 0; m <= order_; ++m) {
            double v = z * at(n - 1, m) - c * at(n - 2, m);
            if (m >= 1) v += m * at(n - 1, m - 1);
            at(n, m) = v;
        }
    }
}

double chebyshev_t(int n, double z) {
    require_non_negative(n, "chebyshev_t: degree");
    if (z < -1.0 || z > 1.0)
        throw std::domain_error("chebyshev_t: argument must lie in [-1, 1]");
    return std::cos(static_cast<double>(n) * std::acos(z));
}

double inner_product(int i, int j, int quad_points) {
    require_non_negative(i, "inner_product: i");
    require_non_negative(j, "inner_product: j");
    const int required = i + j + 1;
    if (quad_points < required)
        throw std::invalid_argument(
            "inner_product: quad_points must be at least i + j + 1 = " +
            std::to_string(required) + " for exact quadrature");
    // Gauss-Chebyshev: nodes cos((2p-1) pi / (2M)), uniform weight pi / M.
    const double pi = std::numbers::pi;
    double sum = 0.0;
    for (int p = 1; p <= quad_points; ++p) {
        const double zp = std::cos((2.0 * p - 1.0) * pi / (2.0 * quad_points));
        sum += eval_recurrence(i, zp) * eval_recurrence(j, zp);
    }
    return sum * pi / quad_points;
}

McpBasis::McpBasis(int max_degree) : max_degree_(max_degree) {
    require_non_negative(max_degree, "McpBasis: max_degree");
    table_.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) table_.push_back(mcp_coefficients(n));
}

const std::vector<PolyTerm>& McpBasis::coefficients(int n) const {
    if (n < 0 || n > max_degree_)
        throw std::invalid_argument("McpBasis: degree " + std::to_string(n) +
                                    " outside table range 0.." + std::to_string(max_degree_));
    return table_[static_cast<std::size_t>(n)];
}

}  // namespace mcbvp
