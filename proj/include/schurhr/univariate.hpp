#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurhr/rational.hpp"

namespace schurhr {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward with no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly variable();
  static UniPoly monomial(const Rational& coeff, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }
  UniPoly derivative() const;
  /// p(q(t)).
  UniPoly compose(const UniPoly& q) const;
  /// Scaled to have leading coefficient 1 (zero stays zero).
  UniPoly monic() const;
  /// Scaled to integer coefficients with content 1 and positive leading coefficient.
  UniPoly primitive() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Quotient and remainder of Euclidean division.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  /// e.g. "3*t^2 - t + 1/2".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd.
UniPoly gcd(UniPoly a, UniPoly b);

/// p / gcd(p, p'): same real roots, all simple.
UniPoly square_free_part(const UniPoly& p);

/// Yun's square-free factorisation: returns f_1, f_2, ... with
/// p = lc * prod_k f_k^k, each f_k square-free and pairwise coprime.
std::vector<UniPoly> square_free_factors(const UniPoly& p);

/// Canonical Sturm sequence p, p', -rem(...), ... with content-normalised
/// entries (positive rescaling preserves sign variations).
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Number of distinct real roots of p in (a, b]. p must be nonzero.
int count_real_roots(const UniPoly& p, const Rational& a, const Rational& b);
/// Number of distinct real roots of p on the whole line.
int count_real_roots(const UniPoly& p);

/// Cauchy bound B: every real root lies in (-B, B).
Rational root_bound(const UniPoly& p);

struct RootInterval {
  Rational lower;
  Rational upper;
  Rational width() const { return upper - lower; }
};

/// Isolates the smallest root of p in (a, b] to an interval (lo, hi] of width
/// at most `max_width` containing exactly one root; nullopt if none.
std::optional<RootInterval> isolate_first_root(const UniPoly& p, const Rational& a, const Rational& b,
                                               const Rational& max_width);

/// True iff p(x) >= 0 for every real x.
bool nonnegative_on_reals(const UniPoly& p);

}  // namespace schurhr
