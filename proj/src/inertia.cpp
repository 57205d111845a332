#include "schurhr/inertia.hpp"

#include <vector>

namespace schurhr {

int Inertia::determinant_sign() const {
  if (zero > 0) return 0;
  return negative % 2 == 0 ? 1 : -1;
}

std::string Inertia::to_string() const {
  return "(" + std::to_string(positive) + "," + std::to_string(zero) + "," + std::to_string(negative) + ")";
}

Inertia inertia(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw InvalidArgument("inertia: matrix is not symmetric");
  RationalMatrix a = m;
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < a.rows(); ++i) live.push_back(i);
  Inertia out;

  auto drop = [&](std::size_t idx) { std::erase(live, idx); };

  while (!live.empty()) {
    std::size_t pivot = a.rows();
    for (std::size_t i : live)
      if (a(i, i) != 0) {
        pivot = i;
        break;
      }

    if (pivot != a.rows()) {
      const Rational p = a(pivot, pivot);
      (p > 0 ? out.positive : out.negative) += 1;
      drop(pivot);
      for (std::size_t i : live) {
        if (a(i, pivot) == 0) continue;
        const Rational f = a(i, pivot) / p;
        for (std::size_t j : live) a(i, j) -= f * a(pivot, j);
      }
      continue;
    }

    std::size_t r = a.rows(), s = a.rows();
    for (std::size_t i : live) {
      for (std::size_t j : live)
        if (i != j && a(i, j) != 0) {
          r = i;
          s = j;
          break;
        }
      if (r != a.rows()) break;
    }
    if (r == a.rows()) {
      out.zero += live.size();
      break;
    }

    // block [[0, b], [b, 0]] has inertia (1, 0, 1); its inverse is
    // [[0, 1/b], [1/b, 0]], so the Schur complement subtracts
    // (u_i v_j + v_i u_j) / b with u = column r, v = column s.
    const Rational b = a(r, s);
    out.positive += 1;
    out.negative += 1;
    drop(r);
    drop(s);
    std::vector<Rational> u, v;
    for (std::size_t i : live) {
      u.push_back(a(i, r));
      v.push_back(a(i, s));
    }
    for (std::size_t x = 0; x < live.size(); ++x)
      for (std::size_t y = 0; y < live.size(); ++y) {
        const Rational delta = (u[x] * v[y] + v[x] * u[y]) / b;
        if (delta != 0) a(live[x], live[y]) -= delta;
      }
  }
  return out;
}

InertiaReport hodge_riemann_report(const RationalMatrix& gram, const Rational& positivity) {
  InertiaReport r;
  r.signature = inertia(gram);
  r.det_sign = r.signature.determinant_sign();
  r.positivity = positivity;
  r.hl = r.signature.zero == 0;
  r.hr = positivity > 0 && r.signature == Inertia{1, 0, gram.rows() - 1};
  return r;
}

}  // namespace schurhr
