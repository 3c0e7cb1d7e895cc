#include "mcbvp/linalg.hpp"

#include <cmath>
#include <utility>

namespace mcbvp {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::infinity_norm() const {
    double norm = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) row_sum += std::abs((*this)(i, j));
        if (row_sum > norm) norm = row_sum;
    }
    return norm;
}

Vector multiply(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size())
        throw std::invalid_argument("multiply: matrix and vector sizes do not match");
    Vector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double infinity_norm(const Vector& v) {
    double norm = 0.0;
    for (double x : v)
        if (std::abs(x) > norm) norm = std::abs(x);
    return norm;
}

SingularMatrixError::SingularMatrixError(const std::string& what, std::size_t pivot_index)
    : std::runtime_error(what), pivot_index_(pivot_index) {}

Vector lu_solve(Matrix a, Vector rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("lu_solve: matrix must be square");
    if (rhs.size() != n)
        throw std::invalid_argument("lu_solve: right-hand side size does not match");
    if (n == 0) return {};

    // Scaled partial pivoting: collocation systems mix rows many orders of
    // magnitude apart (high-derivative rows next to boundary rows), so both
    // the pivot choice and the singularity test are made relative to each
    // row's own magnitude.
    std::vector<double> scale(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < n; ++j) scale[r] = std::max(scale[r], std::abs(a(r, j)));
        if (scale[r] == 0.0)
            throw SingularMatrixError("lu_solve: row " + std::to_string(r) + " is zero", r);
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double pivot_ratio = std::abs(a(col, col)) / scale[col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double ratio = std::abs(a(r, col)) / scale[r];
            if (ratio > pivot_ratio) {
                pivot_ratio = ratio;
                pivot_row = r;
            }
        }
        if (pivot_ratio <= 1e-14)
            throw SingularMatrixError(
                "lu_solve: matrix is singular to working precision at pivot " +
                    std::to_string(col),
                col);
        if (pivot_row != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
            std::swap(rhs[col], rhs[pivot_row]);
            std::swap(scale[col], scale[pivot_row]);
        }
        const double inv_pivot = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a(r, col) * inv_pivot;
            if (factor == 0.0) continue;
            a(r, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= factor * a(col, j);
            rhs[r] -= factor * rhs[col];
        }
    }

    Vector x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

}  // namespace mcbvp
