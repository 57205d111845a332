#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "schurhr/errors.hpp"
#include "schurhr/inertia.hpp"
#include "schurhr/matrix.hpp"
#include "schurhr/random.hpp"
#include "schurhr/ring_model.hpp"
#include "schurhr/univariate.hpp"

namespace schurhr {

/// A hypothesis of a certification did not hold on the given input.
class HypothesisError : public PreconditionError {
 public:
  HypothesisError(const std::string& what, Inertia offending)
      : PreconditionError(what + " (inertia " + offending.to_string() + ")"), inertia_(offending) {}
  const Inertia& inertia() const { return inertia_; }

 private:
  Inertia inertia_;
};

/// Signature, determinant sign and hl flag of a symmetric matrix; hr is
/// left false because no positivity scalar is involved.
InertiaReport signature_report(const RationalMatrix& m);

/// HR report of a ring class of grade d - 2 against an ample class h.
InertiaReport ring_hodge_riemann(const GradedClass& omega, const GradedClass& h);

struct HodgeIndexResult {
  Rational lhs;  // Q(v) Q(h)
  Rational rhs;  // Q(v, h)^2
  bool holds = false;
  bool equality = false;
  /// kappa with v = kappa h, if one exists.
  std::optional<Rational> witness;
  /// equality <=> a witness exists.
  bool equality_iff_proportional = false;
};

/// Q(v) Q(h) <= Q(v,h)^2 for Q of signature (1, 0, n-1) and Q(h) > 0.
/// Both hypotheses are verified; HypothesisError otherwise.
HodgeIndexResult hodge_index_check(const RationalMatrix& q, const RationalVector& h, const RationalVector& v);

/// Q_W = [[Q_V, phi^T], [phi, 0]] on V + R, with a distinguished h in V.
struct BlockFormInstance {
  RationalMatrix q_v;
  RationalVector phi;
  RationalVector h;

  RationalMatrix q_w() const;
};

struct BlockHypotheses {
  Inertia q_w_signature;
  bool q_w_hodge_riemann = false;  // signature (1, 0, rho)
  bool q_v_h_positive = false;
  bool phi_h_positive = false;
  bool all() const { return q_w_hodge_riemann && q_v_h_positive && phi_h_positive; }
};

BlockHypotheses block_hypotheses(const BlockFormInstance& inst);

struct BlockFormResult {
  Rational lhs;  // Q_V(v) phi(h)
  Rational rhs;  // 2 Q_V(v, h) phi(v)
  bool holds = false;
  bool equality = false;
  /// equality => v = 0.
  bool equality_implies_v_zero = false;
  /// Q_V restricted to ker phi.
  Inertia kernel_signature;
  bool kernel_negative_definite = false;
};

/// Verifies the hypotheses (HypothesisError otherwise), then checks
/// Q_V(v) phi(h) <= 2 Q_V(v,h) phi(v) and negativity of Q_V on ker phi.
BlockFormResult block_form_check(const BlockFormInstance& inst, const RationalVector& v);

/// Basis of ker(phi), phi nonzero.
std::vector<RationalVector> kernel_basis(const RationalVector& phi);

/// p(b) >= 0 for all real b, decided with Sturm sequences.
bool quartic_nonneg(const UniPoly& p);

/// a1 theta1^2 + a2 theta1 theta2 + a3 theta2^2 + a4 theta1 lambdaP
/// + a5 theta2 lambdaP + a6 lambdaP^2.
struct Nef2Coefficients {
  std::array<Rational, 6> a;
};

struct Nef2Condition {
  std::string name;
  bool holds = false;
  /// Holds with equality (for the quartic: touches zero somewhere).
  bool tight = false;
};

struct Nef2Verdict {
  std::vector<Nef2Condition> conditions;
  /// The polynomial in b whose nonnegativity is the last condition.
  UniPoly quartic;
  bool member = false;
  /// Member with at least one condition tight.
  bool boundary = false;
  std::vector<std::string> failed() const;
};

/// Membership in the cone of classes nonnegative on all surfaces of the
/// abelian square, by its five closed polynomial conditions.
Nef2Verdict nef2_membership(const Nef2Coefficients& c);

struct LogConcavityResult {
  /// f(i) f(i-2) < f(i-1)^2 for all i >= 2.
  bool midpoint = false;
  /// f_i^{k-j} f_k^{j-i} < f_j^{k-i} for all i < j < k.
  bool chord = false;
  /// Indices i at which the midpoint inequality fails.
  std::vector<std::size_t> midpoint_failures;
  /// Non-strict versions of the two conditions.
  bool weak_midpoint = false;
  bool weak_chord = false;
};

/// Strict log-concavity by cross-multiplication. Values must be positive.
LogConcavityResult logconcavity(const std::vector<Rational>& f);
bool discrete_logconcave(const std::vector<Rational>& f);

struct SchurLogConcavityReport {
  /// f(i) = integral of s_mu^{(e-i)}(E) h^{d-i}, i = 0..d.
  std::vector<Rational> values;
  /// Indices with f(i) <= 0.
  std::vector<std::size_t> nonpositive;
  LogConcavityResult result;
  bool strict() const { return nonpositive.empty() && result.midpoint && result.chord; }
};

/// Requires rank >= d, |mu| = rank, and E, h ample by the model criterion.
SchurLogConcavityReport schur_logconcavity_report(const SplitBundle& bundle, const Partition& mu,
                                                  const GradedClass& h);

struct Hi2Result {
  Rational lhs;  // int alpha^2 c_{d-2} * int h c_{d-1}
  Rational rhs;  // 2 int alpha h c_{d-2} * int alpha c_{d-1}
  bool holds = false;
  bool equality = false;
  bool alpha_zero = false;
};

/// Requires rank >= d - 1 and E, h ample by the model criterion.
Hi2Result hi2_check(const SplitBundle& bundle, const GradedClass& h, const GradedClass& alpha);

/// Q_t = R + s(t) S.
struct GramFamily {
  RationalMatrix r;
  RationalMatrix s;
  UniPoly shift;
};

struct HlScanResult {
  int det_r_sign = 0;
  int det_s_sign = 0;
  UniPoly det_q;
  std::optional<RootInterval> first_positive_root;
};

/// Signs of det R, det S and the smallest root of det Q_t on t > 0.
HlScanResult hl_failure_scan(const GramFamily& family, const Rational& max_width);

/// Gram pencil on H^{2,2} of proj(2,2,2) for E = O(1,0,0)+O(0,1,0)+O(0,0,1)
/// twisted by t c_1(E): R, S are the Grams of c_2(E), c_1(E)^2 on
/// (x1^2, x2^2, x3^2, x2x3, x1x3, x1x2), s(t) = 2t + 3t^2.
GramFamily three_plane_chern_family();

/// H^{1,1} Gram of (1 - t) a + t b as a matrix of linear polynomials in t.
Matrix<UniPoly> pencil_gram(const GradedClass& a, const GradedClass& b);

namespace gen {

/// Q = P^T diag(1, -1, ..., -1) P for random invertible P.
RationalMatrix hodge_index_form(Rng& rng, std::size_t n);

/// Instance with rho >= 2 satisfying all hypotheses by construction: Q_W is
/// congruent to diag(1, -1, ..., -1) with the extra basis vector isotropic.
BlockFormInstance block_form_instance(Rng& rng, std::size_t rho);

RationalVector vector(Rng& rng, std::size_t n);

}  // namespace gen

}  // namespace schurhr
