#include "schurhr/schur.hpp"

#include "schurhr/matrix.hpp"

namespace schurhr {

namespace {

template <typename EntryFn>
ChernPoly jacobi_trudi_with(std::span<const int> parts, int rank, int twist_vars, EntryFn&& entry) {
  const std::size_t n = parts.size();
  const ChernPoly zero(rank, twist_vars);
  Matrix<ChernPoly> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = entry(parts[i] + static_cast<int>(j) - static_cast<int>(i));
  return laplace_determinant(m, zero, ChernPoly::constant(rank, Rational(1), twist_vars));
}

void check_weakly_decreasing(std::span<const int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) {
      throw InvalidArgument("jacobi_trudi: parts must be weakly decreasing and nonnegative");
    }
  }
}

}  // namespace

ChernPoly jacobi_trudi(std::span<const int> parts, int rank) {
  check_weakly_decreasing(parts);
  return jacobi_trudi_with(parts, rank, 0, [rank](int k) { return ChernPoly::chern(rank, k); });
}

ChernPoly schur(const Partition& lambda, int rank) {
  if (rank < 1) throw InvalidArgument("schur: rank must be positive");
  if (!lambda.fits_rank(rank)) {
    throw InvalidArgument("invalid partition " + lambda.to_string() + " for rank " + std::to_string(rank));
  }
  return jacobi_trudi(lambda.parts(), rank);
}

ChernPoly chern_of_twist(int p, int rank, int twist_vars, int var) {
  if (p < 0 || p > rank) {
    throw InvalidArgument("chern_of_twist: degree " + std::to_string(p) + " outside [0, " + std::to_string(rank) + "]");
  }
  ChernPoly out(rank, twist_vars);
  const ChernPoly delta = ChernPoly::twist(rank, var, twist_vars);
  ChernPoly delta_power = ChernPoly::constant(rank, Rational(1), twist_vars);
  // k runs downward so delta_power tracks delta^{p-k}
  for (int k = p; k >= 0; --k) {
    out += binomial(rank - k, p - k) * (ChernPoly::chern(rank, k, twist_vars) * delta_power);
    delta_power = delta_power * delta;
  }
  return out;
}

ChernPoly twisted_schur(const Partition& lambda, int rank) {
  if (rank < 1) throw InvalidArgument("twisted_schur: rank must be positive");
  if (!lambda.fits_rank(rank)) {
    throw InvalidArgument("invalid partition " + lambda.to_string() + " for rank " + std::to_string(rank));
  }
  return jacobi_trudi_with(lambda.parts(), rank, 1, [rank](int k) {
    if (k < 0 || k > rank) return ChernPoly(rank, 1);
    return chern_of_twist(k, rank);
  });
}

ChernPoly derived_schur(const Partition& mu, int rank, int order) {
  if (order < 0 || order > mu.weight()) {
    throw InvalidArgument("derived_schur: order " + std::to_string(order) + " outside [0, " +
                          std::to_string(mu.weight()) + "]");
  }
  return twisted_schur(mu, rank).twist_coefficient(0, order);
}

ChernPoly segre_derived(int rank, int order) {
  if (order < 0 || order > rank) throw InvalidArgument("segre_derived: order outside [0, rank]");
  return binomial(2 * rank - 1, 2 * rank - 1 - order) * schur(Partition::column(rank - order), rank);
}

Rational schur_bialternant_oracle(const Partition& lambda, std::span<const Rational> x) {
  const std::size_t e = x.size();
  if (!lambda.fits_rank(static_cast<int>(e))) {
    throw InvalidArgument("bialternant: partition " + lambda.to_string() + " needs at least " +
                          std::to_string(lambda.largest()) + " points");
  }
  std::vector<int> nu = lambda.conjugate().parts();
  nu.resize(e, 0);
  RationalMatrix num(e, e), den(e, e);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) {
      num(i, j) = power(x[i], static_cast<unsigned long>(nu[j]) + e - 1 - j);
      den(i, j) = power(x[i], e - 1 - j);
    }
  }
  Rational vandermonde = determinant(den);
  if (vandermonde == 0) throw PreconditionError("bialternant: evaluation points must be pairwise distinct");
  return determinant(num) / vandermonde;
}

}  // namespace schurhr
