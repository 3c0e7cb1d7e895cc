#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcbvp {

using Vector = std::vector<double>;

/// Dense row-major matrix. Collocation systems stay small (N <= ~25), so
/// storage is a flat vector with no sparsity handling.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Maximum absolute row sum.
    double infinity_norm() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Vector multiply(const Matrix& a, const Vector& x);

double infinity_norm(const Vector& v);

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, std::size_t pivot_index);
    std::size_t pivot_index() const noexcept { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

/// Solve a*x = rhs by LU factorization with scaled partial pivoting. Throws
/// SingularMatrixError when the best available pivot falls below 1e-14
/// relative to its row's magnitude.
Vector lu_solve(Matrix a, Vector rhs);

}  // namespace mcbvp
