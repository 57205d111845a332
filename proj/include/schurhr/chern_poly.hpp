#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurhr/errors.hpp"
#include "schurhr/rational.hpp"

namespace schurhr {

/// Polynomial with rational coefficients in the abstract Chern generators
/// c_1..c_e of a rank-e bundle, optionally extended by grade-1 twist
/// variables delta_1..delta_m. c_0 = 1 and c_k = 0 outside [0, e].
///
/// A monomial is stored as its exponent vector
///   [exp(c_1), ..., exp(c_e), exp(delta_1), ..., exp(delta_m)].
/// The grade of c_k is k, each delta has grade 1.
class ChernPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  ChernPoly(int rank, int twist_vars = 0);

  static ChernPoly constant(int rank, const Rational& value, int twist_vars = 0);
  /// c_k, normalised: 1 for k = 0, zero polynomial for k < 0 or k > rank.
  static ChernPoly chern(int rank, int k, int twist_vars = 0);
  /// The twist variable delta_j (0-based j < twist_vars).
  static ChernPoly twist(int rank, int j, int twist_vars);

  int rank() const { return rank_; }
  int twist_vars() const { return twist_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  Rational coefficient(const Exponents& monomial) const;
  int monomial_grade(const Exponents& monomial) const;

  /// Common grade of all terms; nullopt for the zero polynomial.
  /// Throws InvalidArgument if the polynomial is not homogeneous.
  std::optional<int> grade() const;
  bool is_homogeneous() const;

  /// Coefficient of delta_j^power as a polynomial in the remaining
  /// generators (delta_j is removed; later twist variables shift down).
  ChernPoly twist_coefficient(int j, int power) const;

  /// Same polynomial viewed with `twist_vars` twist variables (must be >=
  /// the current count when the polynomial uses twist variables).
  ChernPoly with_twist_vars(int twist_vars) const;

  /// Drops every twist variable; only valid when none appear.
  ChernPoly without_twist() const { return with_twist_vars(0); }

  ChernPoly& operator+=(const ChernPoly& other);
  ChernPoly& operator-=(const ChernPoly& other);
  friend ChernPoly operator+(ChernPoly a, const ChernPoly& b) { return a += b; }
  friend ChernPoly operator-(ChernPoly a, const ChernPoly& b) { return a -= b; }
  friend ChernPoly operator*(const ChernPoly& a, const ChernPoly& b);
  friend ChernPoly operator*(const Rational& s, const ChernPoly& a);
  friend bool operator==(const ChernPoly& a, const ChernPoly& b);

  /// Substitutes c_k -> chern_value(k) (k = 1..rank) and delta_j ->
  /// twist_value(j) in any commutative ring T supporting T+T, T*T and
  /// Rational*T. Returns `zero` for the zero polynomial.
  template <typename T, typename ChernFn, typename TwistFn>
  T evaluate(ChernFn&& chern_value, TwistFn&& twist_value, const T& zero, const T& one) const;

  /// Pretty form, e.g. "c1*c2 - c3" or "2*c1^2 + 2*c2". Terms are sorted by
  /// grade, then lexicographically (descending) on exponent vectors.
  std::string to_string() const;

 private:
  void check_compatible(const ChernPoly& other) const;
  void add_term(const Exponents& monomial, const Rational& coeff);

  int rank_;
  int twist_vars_;
  Terms terms_;
};

template <typename T, typename ChernFn, typename TwistFn>
T ChernPoly::evaluate(ChernFn&& chern_value, TwistFn&& twist_value, const T& zero, const T& one) const {
  const int nvars = rank_ + twist_vars_;
  std::vector<std::vector<T>> powers(static_cast<std::size_t>(nvars));
  auto power_of = [&](int var, int exp) -> const T& {
    auto& cache = powers[static_cast<std::size_t>(var)];
    if (cache.empty()) {
      cache.push_back(one);
      cache.push_back(var < rank_ ? T(chern_value(var + 1)) : T(twist_value(var - rank_)));
    }
    while (static_cast<int>(cache.size()) <= exp) cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<std::size_t>(exp)];
  };
  std::optional<T> acc;
  for (const auto& [mono, coeff] : terms_) {
    std::optional<T> term;
    for (int v = 0; v < nvars; ++v) {
      int e = mono[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      term = term ? T(*term * power_of(v, e)) : T(power_of(v, e));
    }
    T scaled = coeff * (term ? *term : one);
    acc = acc ? T(*acc + scaled) : scaled;
  }
  return acc ? *acc : zero;
}

}  // namespace schurhr
