#include "npa/matrix.hpp"

#include <stdexcept>

namespace npa {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Rat Matrix::trace() const {
  Rat sum = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) sum += (*this)(i, i);
  return sum;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("matrix sum: dimension mismatch");
  Matrix out(lhs.rows(), lhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j) + rhs(i, j);
  return out;
}

Matrix operator*(const Rat& scalar, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scalar * m(i, j);
  return out;
}

Vector operator*(const Vector& row, const Matrix& m) {
  if (row.size() != m.rows()) throw std::invalid_argument("vector-matrix product: dimension mismatch");
  Vector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (row[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[i] * m(i, j);
  }
  return out;
}

Rat dot(const Vector& lhs, const Vector& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat sum = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) sum += lhs[i] * rhs[i];
  return sum;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

}  // namespace npa
