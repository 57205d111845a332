#include "schurhr/matrix.hpp"

#include <utility>

namespace schurhr {

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

Rational bilinear(const RationalMatrix& m, const RationalVector& v, const RationalVector& w) {
  if (m.rows() != v.size() || m.cols() != w.size()) throw InvalidArgument("bilinear: dimension mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational row(0);
    for (std::size_t j = 0; j < w.size(); ++j) row += m(i, j) * w[j];
    acc += v[i] * row;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).get_str();
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace schurhr
