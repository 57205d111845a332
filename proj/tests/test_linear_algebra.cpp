#include "doctest.h"
#include "schurhr/inertia.hpp"
#include "schurhr/random.hpp"
#include "schurhr/univariate.hpp"

using namespace schurhr;

namespace {

RationalMatrix random_symmetric(Rng& rng, std::size_t n, int sparsity) {
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (rng.range(0, sparsity) != 0) continue;
      m(i, j) = m(j, i) = rng.rational(-5, 5, 3);
    }
  return m;
}

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(-4, 4, 2);
  return m;
}

// Inertia from the characteristic polynomial: all roots are real, so the
// multiplicity of 0 is the lowest nonvanishing degree and Descartes' count
// of sign variations is exact for the positive roots.
Inertia charpoly_inertia(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  Matrix<UniPoly> shifted(n, n, UniPoly());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      shifted(i, j) = (i == j ? UniPoly::variable() : UniPoly()) - UniPoly(m(i, j));
  UniPoly chi = laplace_determinant(shifted, UniPoly(), UniPoly(Rational(1)));
  Inertia out;
  while (out.zero < n && chi.coefficient(static_cast<int>(out.zero)) == 0) ++out.zero;
  int last = 0;
  for (int k = static_cast<int>(out.zero); k <= chi.degree(); ++k) {
    int s = sgn(chi.coefficient(k));
    if (s == 0) continue;
    if (last != 0 && s != last) ++out.positive;
    last = s;
  }
  out.negative = n - out.zero - out.positive;
  return out;
}

}  // namespace

TEST_CASE("inertia examples") {
  CHECK(inertia(RationalMatrix{{1, 0}, {0, -1}}) == Inertia{1, 0, 1});
  CHECK(inertia(RationalMatrix{{0, 1}, {1, 0}}) == Inertia{1, 0, 1});
  CHECK(inertia(RationalMatrix{{0, 0}, {0, 0}}) == Inertia{0, 2, 0});
  CHECK(inertia(RationalMatrix{{0, 20, 0}, {20, 0, 0}, {0, 0, 40}}) == Inertia{2, 0, 1});
  CHECK(inertia(RationalMatrix{{1, 1}, {1, 1}}) == Inertia{1, 1, 0});
  CHECK(inertia(RationalMatrix{{Rational(1, 4), Rational(1, 2)}, {Rational(1, 2), Rational(3, 2)}}) ==
        Inertia{2, 0, 0});
  CHECK(inertia(RationalMatrix(0, 0, Rational(0))) == Inertia{0, 0, 0});
  CHECK(Inertia{2, 0, 1}.to_string() == "(2,0,1)");
  CHECK(Inertia{2, 0, 1}.determinant_sign() == -1);
  CHECK(Inertia{2, 1, 1}.determinant_sign() == 0);
  CHECK_THROWS_AS(inertia(RationalMatrix{{1, 2}, {0, 1}}), InvalidArgument);
}

TEST_CASE("property: inertia agrees with the characteristic polynomial") {
  Rng rng(4242);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 7));
    RationalMatrix m = random_symmetric(rng, n, static_cast<int>(rng.range(0, 3)));
    Inertia in = inertia(m);
    CAPTURE(m);
    CHECK(in == charpoly_inertia(m));
    CHECK(in.determinant_sign() == sgn(determinant(m)));
  }
}

TEST_CASE("property: inertia of a signed Gram product") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.range(2, 6));
    std::size_t p = static_cast<std::size_t>(rng.range(0, n));
    std::size_t q = static_cast<std::size_t>(rng.range(0, n - p));
    RationalMatrix a = random_matrix(rng, p + q, n);
    RationalMatrix d(p + q, p + q, Rational(0));
    for (std::size_t i = 0; i < p + q; ++i) d(i, i) = i < p ? 1 : -1;
    RationalMatrix aat = a * a.transpose();
    if (determinant(aat) == 0) continue;  // rows dependent
    CHECK(inertia(a.transpose() * d * a) == Inertia{p, n - p - q, q});
  }
}

TEST_CASE("property: inertia is invariant under congruence") {
  Rng rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
    RationalMatrix m = random_symmetric(rng, n, 1);
    RationalMatrix p = random_matrix(rng, n, n);
    if (determinant(p) == 0) continue;
    CHECK(inertia(p.transpose() * m * p) == inertia(m));
  }
}

TEST_CASE("univariate arithmetic") {
  UniPoly t = UniPoly::variable();
  UniPoly p = t * t - UniPoly(Rational(2));
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 7);
  CHECK(p.to_string() == "t^2 - 2");
  CHECK(p.derivative() == UniPoly(Rational(2)) * t);
  CHECK(p.compose(t + UniPoly(Rational(1))) == t * t + UniPoly(Rational(2)) * t - UniPoly(Rational(1)));
  auto [quo, rem] = UniPoly::divmod(t * t * t + UniPoly(Rational(1)), t + UniPoly(Rational(1)));
  CHECK(quo == t * t - t + UniPoly(Rational(1)));
  CHECK(rem.is_zero());
  CHECK(UniPoly({Rational(1, 2), Rational(3, 4)}).primitive() == UniPoly({Rational(2), Rational(3)}));
  CHECK(gcd(p * (t - UniPoly(Rational(1))), (t - UniPoly(Rational(1))) * (t + UniPoly(Rational(5)))) ==
        t - UniPoly(Rational(1)));
}

TEST_CASE("root counting and isolation") {
  UniPoly t = UniPoly::variable();
  UniPoly p = t * t - UniPoly(Rational(2));
  CHECK(count_real_roots(p) == 2);
  CHECK(count_real_roots(p, Rational(0), Rational(2)) == 1);
  CHECK(count_real_roots(t * t + UniPoly(Rational(1))) == 0);
  UniPoly rep = (t - UniPoly(Rational(1))) * (t - UniPoly(Rational(1))) * (t + UniPoly(Rational(3)));
  CHECK(count_real_roots(rep) == 2);
  CHECK(count_real_roots(rep, Rational(1), Rational(5)) == 0);  // half-open (a, b]
  CHECK(count_real_roots(rep, Rational(0), Rational(1)) == 1);
  auto root = isolate_first_root(p, Rational(0), Rational(2), Rational(1, 1000000));
  REQUIRE(root.has_value());
  CHECK(root->width() <= Rational(1, 1000000));
  CHECK(root->lower * root->lower < 2);
  CHECK(root->upper * root->upper >= 2);
  CHECK_FALSE(isolate_first_root(p, Rational(2), Rational(3), Rational(1, 100)).has_value());
  CHECK(root_bound(p) > 2);
}

TEST_CASE("nonnegativity on the real line") {
  UniPoly t = UniPoly::variable();
  UniPoly sq = (t - UniPoly(Rational(1))) * (t - UniPoly(Rational(1)));
  CHECK(nonnegative_on_reals(sq));
  CHECK(nonnegative_on_reals(sq * sq + UniPoly(Rational(1))));
  CHECK(nonnegative_on_reals(UniPoly()));
  CHECK_FALSE(nonnegative_on_reals(t));
  CHECK_FALSE(nonnegative_on_reals(UniPoly(Rational(-1))));
  CHECK_FALSE(nonnegative_on_reals(sq * (t * t - UniPoly(Rational(1)))));
  CHECK(nonnegative_on_reals(sq * (t * t + UniPoly(Rational(1)))));
}

TEST_CASE("property: Yun factors multiply back") {
  Rng rng(31);
  UniPoly t = UniPoly::variable();
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly p(Rational(1));
    for (int k = 0; k < rng.range(1, 4); ++k) {
      UniPoly lin = t - UniPoly(rng.rational(-3, 3, 2));
      for (long r = rng.range(1, 3); r > 0; --r) p = p * lin;
    }
    auto factors = square_free_factors(p);
    UniPoly back(Rational(1));
    for (std::size_t k = 0; k < factors.size(); ++k)
      for (std::size_t r = 0; r <= k; ++r) back = back * factors[k];
    CHECK(back.monic() == p.monic());
    CHECK(count_real_roots(square_free_part(p)) == count_real_roots(p));
  }
}
