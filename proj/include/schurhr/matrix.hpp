#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "schurhr/errors.hpp"
#include "schurhr/rational.hpp"

namespace schurhr {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw InvalidArgument("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in product");
    Matrix c(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix shape mismatch in sum");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix shape mismatch in difference");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

/// Exact determinant by fraction-carrying Gaussian elimination.
Rational determinant(const RationalMatrix& m);

/// v^T M w.
Rational bilinear(const RationalMatrix& m, const RationalVector& v, const RationalVector& w);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Determinant over a commutative ring by Laplace expansion along the first
/// row, memoised on the set of remaining columns. Needs only +, -, *.
/// Exponential in n; intended for n <= 12 (Jacobi-Trudi, small pencils).
template <typename T>
T laplace_determinant(const Matrix<T>& m, const T& zero, const T& one) {
  if (!m.is_square()) throw InvalidArgument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n > 16) throw InvalidArgument("laplace_determinant: matrix too large");
  // memo[mask]: minor on the last popcount(mask) rows and the columns in mask
  std::vector<std::optional<T>> memo(std::size_t{1} << n);
  auto solve = [&](auto&& self, std::size_t mask) -> const T& {
    if (memo[mask]) return *memo[mask];
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    T acc = k == 0 ? one : zero;
    const std::size_t row = n - k;
    int s = 1;
    for (std::size_t col = 0; k > 0 && col < n; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      const T& entry = m(row, col);
      if (!(entry == zero)) {
        const T& minor = self(self, mask & ~(std::size_t{1} << col));
        if (s > 0) acc = acc + entry * minor;
        else acc = acc - entry * minor;
      }
      s = -s;
    }
    memo[mask] = std::move(acc);
    return *memo[mask];
  };
  return solve(solve, (std::size_t{1} << n) - 1);
}

}  // namespace schurhr
