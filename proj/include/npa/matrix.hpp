#pragma once

#include "npa/rational.hpp"

#include <cstddef>
#include <vector>

namespace npa {

using Vector = std::vector<Rat>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;

  Rat trace() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator+(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(const Rat& scalar, const Matrix& m);

/// Row vector times matrix.
Vector operator*(const Vector& row, const Matrix& m);

Rat dot(const Vector& lhs, const Vector& rhs);

/// Block-diagonal direct sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace npa
