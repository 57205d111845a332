#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schurhr/inertia.hpp"
#include "schurhr/matrix.hpp"
#include "schurhr/partition.hpp"
#include "schurhr/rational.hpp"

namespace schurhr {

/// a + b i with rational a, b.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  GaussianRational(int r) : re(r) {}                                                             // NOLINT

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "3", "-1/7", "2i", "-i", "1/2+3/4i", "0+1i".
  static GaussianRational parse(const std::string& text);

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) { return a * b.inverse(); }
  GaussianRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

  /// "3", "2i", "1/2-3/4i".
  std::string to_string() const;
};

/// Constant-coefficient (p,q)-form on C^d: sum of c_{I,J} dz_I ^ dzb_J over
/// increasing index sets I, J, stored as bitmasks. Bidegrees above d are
/// allowed and are identically zero.
class PQForm {
 public:
  using Mask = std::uint32_t;
  using Key = std::pair<Mask, Mask>;
  using Terms = std::map<Key, GaussianRational>;

  static constexpr int kMaxDimension = 16;

  PQForm(int d, int p, int q);
  /// The constant (0,0)-form 1.
  static PQForm one(int d);
  /// c dz_I ^ dzb_J.
  static PQForm term(int d, Mask holomorphic, Mask antiholomorphic, const GaussianRational& c);

  int dimension() const { return d_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const Terms& terms() const { return terms_; }
  GaussianRational coefficient(Mask holomorphic, Mask antiholomorphic) const;
  bool is_zero() const { return terms_.empty(); }

  void add(Mask holomorphic, Mask antiholomorphic, const GaussianRational& c);

  /// Complex conjugate, a (q,p)-form: conj(dz_I ^ dzb_J) = (-1)^{pq} dz_J ^ dzb_I.
  PQForm conj() const;
  bool is_real() const { return conj() == *this; }

  /// r with Omega = r * prod_j (i dz_j ^ dzb_j). Requires p = q = d and Omega real.
  Rational integrate_top() const;

  PQForm& operator+=(const PQForm& o);
  PQForm& operator-=(const PQForm& o);
  friend PQForm operator+(PQForm a, const PQForm& b) { return a += b; }
  friend PQForm operator-(PQForm a, const PQForm& b) { return a -= b; }
  /// Wedge product.
  friend PQForm operator*(const PQForm& a, const PQForm& b);
  friend PQForm operator*(const GaussianRational& c, const PQForm& a);
  friend PQForm operator*(const Rational& c, const PQForm& a) { return GaussianRational(c) * a; }
  friend bool operator==(const PQForm&, const PQForm&) = default;

  /// e.g. "i*dz1^dzb1 + i*dz2^dzb2"; "0" for the zero form.
  std::string to_string() const;

 private:
  void check_compatible(const PQForm& o) const;

  int d_;
  int p_;
  int q_;
  Terms terms_;
};

PQForm wedge(const PQForm& a, const PQForm& b);
PQForm wedge_power(const PQForm& a, int k);

/// Coefficient of dz_{1..d} ^ dzb_{1..d} in prod_j (i dz_j ^ dzb_j).
GaussianRational volume_coefficient(int d);

/// Hermitian matrix H viewed as the real (1,1)-form i sum H_jk dz_j ^ dzb_k.
class HermitianOneOne {
 public:
  explicit HermitianOneOne(Matrix<GaussianRational> h);
  static HermitianOneOne identity(int d);
  static HermitianOneOne diagonal(const std::vector<Rational>& entries);
  /// Rows of GaussianRational literals.
  static HermitianOneOne parse(const std::vector<std::vector<std::string>>& rows);

  int dimension() const { return static_cast<int>(h_.rows()); }
  const Matrix<GaussianRational>& matrix() const { return h_; }
  PQForm to_form() const;

  friend bool operator==(const HermitianOneOne& a, const HermitianOneOne& b) { return a.h_ == b.h_; }

 private:
  Matrix<GaussianRational> h_;
};

/// Positive definiteness by leading principal minors.
bool kahler_check(const HermitianOneOne& h);

/// Jacobi-Trudi determinant of lambda evaluated at c_k := e_k(omega_1, ..., omega_e).
PQForm schur_form(const Partition& lambda, std::span<const HermitianOneOne> omegas);

/// Real basis of the real (1,1)-forms, d^2 elements: i dz_j^dzb_j, then
/// i(dz_j^dzb_k + dz_k^dzb_j) and dz_j^dzb_k - dz_k^dzb_j for j < k.
std::vector<PQForm> real_one_one_basis(int d);

/// Gram matrix of (a, b) -> integral of a ^ Omega ^ b on real_one_one_basis.
RationalMatrix hr_gram(const PQForm& omega);

/// Signature of hr_gram(Omega) with positivity scalar integral of Omega ^ w^2.
InertiaReport hodge_riemann_verdict(const PQForm& omega, const HermitianOneOne& reference);

}  // namespace schurhr
