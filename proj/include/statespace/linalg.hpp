#pragma once

#include "statespace/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace statespace {

/// Dense matrix of exact rationals. Small and simple on purpose: every
/// matrix in this library has at most a handful of rows.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_columns(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;

    Matrix transposed() const;

    bool operator==(const Matrix& other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

/// Rank by exact Gaussian elimination. Pivots are chosen among the nonzero
/// candidates by smallest bit size to limit coefficient growth.
std::size_t rank(Matrix m);

Rational determinant(Matrix m);

/// Inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Solves m * x = rhs for square m; nullopt when singular.
std::optional<Vec> solve_linear(Matrix m, Vec rhs);

/// Basis of the null space {x : m x = 0}.
std::vector<Vec> kernel_basis(Matrix m);

/// True when every leading principal minor is positive (exact test for
/// positive definiteness of a symmetric matrix).
bool leading_minors_positive(const Matrix& m);

}  // namespace statespace
