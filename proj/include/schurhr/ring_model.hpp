#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schurhr/chern_poly.hpp"
#include "schurhr/matrix.hpp"
#include "schurhr/partition.hpp"

namespace schurhr {

using Monomial = std::vector<int>;

/// The three nonzero quartic integrals of the abelian-square model
/// (theta1, theta2, lambdaP basis). Overridable for mutation tests.
struct AbelianIntegrals {
  Rational theta1sq_theta2sq{4};
  Rational theta1_theta2_lambdasq{-4};
  Rational lambda4{24};
  friend bool operator==(const AbelianIntegrals&, const AbelianIntegrals&) = default;
};

/// Finite-dimensional graded ring with a top-degree integral.
///
///  - proj(n_1,...,n_k): Q[x_1..x_k]/(x_i^{n_i+1}), d = sum n_i,
///    integral of x_1^{n_1}...x_k^{n_k} equal to 1.
///  - abelian_square: formal ring on (theta1, theta2, lambdaP), d = 4, with
///    only the three quartic integrals in AbelianIntegrals nonzero.
///
/// Degree-g bases are all admissible exponent vectors of total degree g in
/// descending lexicographic order, so degree 1 is (x_1,...,x_k) resp.
/// (theta1, theta2, lambdaP) and abelian degree 2 is
/// (theta1^2, theta1 theta2, theta2^2, theta1 lambdaP, theta2 lambdaP, lambdaP^2).
class RingModel {
 public:
  enum class Kind { ProjProduct, AbelianSquare };

  static std::shared_ptr<const RingModel> proj_product(std::vector<int> dims);
  static std::shared_ptr<const RingModel> abelian_square(AbelianIntegrals integrals = {});
  /// "proj(2,3)" or "abelian_square".
  static std::shared_ptr<const RingModel> parse(std::string_view text);

  Kind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  int generator_count() const { return static_cast<int>(generator_names_.size()); }
  const std::vector<int>& factor_dims() const { return dims_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const AbelianIntegrals& abelian_integrals() const { return integrals_; }

  /// Monomial basis of the given grade, 0 <= grade <= dimension.
  const std::vector<Monomial>& basis(int grade) const;
  std::optional<std::size_t> index_of(int grade, const Monomial& m) const;
  /// Integral of a top-degree monomial.
  Rational integral(const Monomial& m) const;

  std::string name() const;

  friend bool operator==(const RingModel& a, const RingModel& b) {
    return a.kind_ == b.kind_ && a.dims_ == b.dims_ && a.integrals_ == b.integrals_;
  }

 private:
  RingModel(Kind kind, std::vector<int> dims, AbelianIntegrals integrals);

  Kind kind_;
  std::vector<int> dims_;  // per-generator exponent caps
  AbelianIntegrals integrals_;
  int dimension_;
  std::vector<std::string> generator_names_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::map<Monomial, std::size_t>> index_;
};

using ModelPtr = std::shared_ptr<const RingModel>;

/// Homogeneous element of a RingModel. Classes above the top grade are
/// identically zero and carry no coefficients.
class GradedClass {
 public:
  GradedClass(ModelPtr model, int grade);

  static GradedClass one(ModelPtr model);
  static GradedClass generator(ModelPtr model, int index);
  /// sum_i coeffs[i] * generator_i.
  static GradedClass linear(ModelPtr model, std::span<const Rational> coeffs);
  static GradedClass monomial(ModelPtr model, const Monomial& m, const Rational& coeff = Rational(1));

  const ModelPtr& model() const { return model_; }
  int grade() const { return grade_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  /// Integral of a class of top grade. Throws InvalidArgument otherwise.
  Rational integrate() const;

  GradedClass pow(int k) const;

  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const Rational& s, GradedClass a);
  friend bool operator==(const GradedClass& a, const GradedClass& b);

  /// e.g. "2*x1 + x2"; "0" for zero.
  std::string to_string() const;

 private:
  void check_same(const GradedClass& other, const char* op) const;

  ModelPtr model_;
  int grade_;
  std::vector<Rational> coeffs_;
};

/// Direct sum of degree-1 classes (Chern roots), optionally R-twisted by a
/// degree-1 class delta: the Chern roots of E<delta> are root_i + delta.
class SplitBundle {
 public:
  SplitBundle(ModelPtr model, std::vector<GradedClass> roots, std::optional<GradedClass> twist = std::nullopt);
  static SplitBundle from_coefficients(ModelPtr model, const std::vector<RationalVector>& roots,
                                       const RationalVector& twist = {});

  const ModelPtr& model() const { return model_; }
  int rank() const { return static_cast<int>(roots_.size()); }
  const std::vector<GradedClass>& roots() const { return roots_; }
  const GradedClass& twist() const { return twist_; }
  std::vector<GradedClass> shifted_roots() const;

  /// E<delta + delta'>.
  SplitBundle twisted(const GradedClass& delta) const;

  /// c_p(E) = e_p(root_i + twist), 0 <= p <= rank.
  GradedClass chern(int p) const;
  std::vector<GradedClass> chern_classes() const;

  /// Substitutes c_k -> chern(k); twist variables of `p` (if any) map to
  /// `twist_values`.
  GradedClass evaluate(const ChernPoly& p, std::span<const GradedClass> twist_values = {}) const;
  GradedClass schur_class(const Partition& lambda) const;
  GradedClass derived_schur_class(const Partition& mu, int order) const;

  /// Sufficient ampleness test on proj models: every shifted root has all
  /// coefficients strictly positive. nullopt on models without a criterion.
  std::optional<bool> ample_by_criterion() const;

 private:
  ModelPtr model_;
  std::vector<GradedClass> roots_;
  GradedClass twist_;
};

/// Whether a degree-1 class on a proj model has all coefficients > 0.
std::optional<bool> is_ample_class(const GradedClass& h);

/// M_ij = integral(b_i * omega * b_j) over the given classes.
RationalMatrix gram_on_basis(const GradedClass& omega, std::span<const GradedClass> basis);
/// Pairing of omega on the degree-k monomial basis; requires grade(omega) = d - 2k.
RationalMatrix intersection_gram(const GradedClass& omega, int degree);
/// Pairing on H^{1,1}; requires grade(omega) = d - 2.
RationalMatrix gram_on_h11(const GradedClass& omega);

}  // namespace schurhr
