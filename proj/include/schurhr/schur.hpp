#pragma once

#include <span>

#include "schurhr/chern_poly.hpp"
#include "schurhr/partition.hpp"

namespace schurhr {

/// Jacobi-Trudi determinant det(c_{parts_i + j - i})_{1<=i,j<=N} for an
/// arbitrary (possibly zero-padded) weakly decreasing sequence. Entries are
/// taken from `entry(k)`, which must return c_k in the target ring.
/// Expanded by memoised Laplace expansion; N <= 16.
ChernPoly jacobi_trudi(std::span<const int> parts, int rank);

/// s_lambda in the Chern generators of a rank-e bundle, grade |lambda|.
/// Throws InvalidArgument when lambda_1 > rank.
ChernPoly schur(const Partition& lambda, int rank);

/// c_p of the twisted bundle E<delta>: sum_k C(e-k, p-k) c_k delta^{p-k}.
/// `var` selects which of the `twist_vars` twist variables plays delta.
ChernPoly chern_of_twist(int p, int rank, int twist_vars = 1, int var = 0);

/// s_lambda(E<delta>) with a single twist variable delta.
ChernPoly twisted_schur(const Partition& lambda, int rank);

/// Derived Schur polynomial s_mu^{(i)}: the delta^i coefficient of
/// s_mu(E<delta>). Grade |mu| - i.
ChernPoly derived_schur(const Partition& mu, int rank, int order);

/// C(2e-1, 2e-1-i) * s_{(1)^{e-i}}, the closed form of s_{(1)^e}^{(i)}.
ChernPoly segre_derived(int rank, int order);

/// Value of the classical bialternant det(x_i^{nu_j + e - j}) / det(x_i^{e - j})
/// at nu = lambda' (the conjugate partition). With c_k := e_k(x) this equals
/// schur(lambda, e) evaluated at x, because the Jacobi-Trudi determinant in
/// elementary symmetric functions indexes the conjugate shape.
/// Requires lambda_1 <= e = x.size() and pairwise distinct x.
Rational schur_bialternant_oracle(const Partition& lambda, std::span<const Rational> x);

}  // namespace schurhr
