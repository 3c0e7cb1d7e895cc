#pragma once

#include <vector>

namespace mcbvp {

/// One power-series term coefficient * z^exponent.
struct PolyTerm {
    int exponent;
    double coefficient;
};

/// Power-series form of the degree-n monic Chebyshev polynomial Q_n.
///
/// The family is Q_0 = 1 and Q_n = 2^{1-n} T_n for n >= 1, where T_n is the
/// classical first-kind Chebyshev polynomial. The returned terms are ordered
/// by descending exponent n, n-2, ..., and the leading coefficient is exactly
/// 1. Successive coefficients are generated by the exact ratio
///
///   b_{n,k} = b_{n,k-1} * -(n-2k+2)(n-2k+1) / (4k(n-k)),   b_{n,0} = 1,
///
/// which avoids the overflow-prone Gamma-function form.
std::vector<PolyTerm> mcp_coefficients(int n);

/// Q_n(z) by the three-term recurrence
///   Q_0 = 1,  Q_1 = z,  Q_2 = z^2 - 1/2,  Q_n = z Q_{n-1} - Q_{n-2}/4 (n >= 3).
/// Note the step onto Q_2 carries 1/2, not 1/4; only from n = 3 on does the
/// uniform 1/4 recurrence hold. z outside [-1,1] extrapolates the polynomial.
double eval_recurrence(int n, double z);

/// Falling-factorial product (n-2k)(n-2k-1)...(n-2k-m+1) produced by
/// differentiating z^{n-2k} m times; 1 when m = 0, and exactly 0 whenever
/// m > n-2k. Requires 2k <= n.
double derivative_factor(int n, int k, int m);

/// m-th derivative of Q_n from the explicit series: sum over k of
/// b_{n,k} * derivative_factor(n,k,m) * z^{n-2k-m}, evaluated by Horner over
/// the even/odd exponent stride. Returns 0 when m > n.
double eval_derivative_series(int n, int m, double z);

/// m-th derivative of Q_n by m-fold differentiation of the three-term
/// recurrence. This path is the one used in system assembly.
double eval_derivative_recurrence(int n, int m, double z);

/// All Q_n^(m)(z) for n <= degree and m <= order, filled by one sweep of the
/// differentiated recurrence
///   Q_n^(m) = z Q_{n-1}^(m) + m Q_{n-1}^(m-1) - c_n Q_{n-2}^(m)
/// with c_2 = 1/2 and c_n = 1/4 for n >= 3.
class DerivativeTable {
public:
    DerivativeTable(int degree, int order, double z);

    int degree() const noexcept { return degree_; }
    int order() const noexcept { return order_; }
    double operator()(int n, int m) const { return values_[n * (order_ + 1) + m]; }

private:
    int degree_;
    int order_;
    std::vector<double> values_;
};

/// Classical first-kind Chebyshev value cos(n arccos z). Domain-checked to
/// [-1,1]; serves as the independent oracle for Q_n = 2^{1-n} T_n.
double chebyshev_t(int n, double z);

/// Weighted inner product <Q_i, Q_j> with weight (1-z^2)^{-1/2} on [-1,1],
/// computed by Gauss-Chebyshev quadrature with quad_points nodes. Exactness
/// requires quad_points >= i + j + 1. Closed form: 0 for i != j, pi for
/// i = j = 0, and 2^{1-2i} pi for i = j >= 1.
double inner_product(int i, int j, int quad_points = 64);

/// Degree-indexed family with cached power-series coefficients for
/// n = 0 .. max_degree.
class McpBasis {
public:
    explicit McpBasis(int max_degree);

    int max_degree() const noexcept { return max_degree_; }
    const std::vector<PolyTerm>& coefficients(int n) const;

private:
    int max_degree_;
    std::vector<std::vector<PolyTerm>> table_;
};

}  // namespace mcbvp
