#include "schurhr/certify.hpp"

namespace schurhr {

namespace {

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void require_square(const RationalMatrix& q, std::size_t n, const char* what) {
  if (!q.is_square() || q.rows() != n) throw InvalidArgument(std::string(what) + ": dimension mismatch");
}

void require_ample(const SplitBundle& bundle, const GradedClass& h) {
  if (bundle.ample_by_criterion() != std::optional<bool>(true))
    throw PreconditionError("bundle is not ample by the model criterion");
  if (is_ample_class(h) != std::optional<bool>(true))
    throw PreconditionError("class h is not ample by the model criterion");
  if (!(*bundle.model() == *h.model())) throw ModelMismatch("bundle and h live on different models");
}

}  // namespace

InertiaReport signature_report(const RationalMatrix& m) {
  InertiaReport r;
  r.signature = inertia(m);
  r.det_sign = r.signature.determinant_sign();
  r.hl = r.signature.zero == 0;
  return r;
}

InertiaReport ring_hodge_riemann(const GradedClass& omega, const GradedClass& h) {
  if (h.grade() != 1) throw InvalidArgument("reference class must have degree 1");
  return hodge_riemann_report(gram_on_h11(omega), (omega * h * h).integrate());
}

HodgeIndexResult hodge_index_check(const RationalMatrix& q, const RationalVector& h, const RationalVector& v) {
  const std::size_t n = h.size();
  require_square(q, n, "hodge_index_check");
  if (v.size() != n) throw InvalidArgument("hodge_index_check: vector length mismatch");
  Inertia sig = inertia(q);
  if (!(sig == Inertia{1, 0, n - 1})) throw HypothesisError("form does not have signature (1, 0, n-1)", sig);
  const Rational qh = bilinear(q, h, h);
  if (qh <= 0) throw HypothesisError("Q(h) is not positive", sig);
  HodgeIndexResult r;
  const Rational qvh = bilinear(q, v, h);
  r.lhs = bilinear(q, v, v) * qh;
  r.rhs = qvh * qvh;
  r.holds = r.lhs <= r.rhs;
  r.equality = r.lhs == r.rhs;
  std::size_t pivot = 0;
  while (h[pivot] == 0) ++pivot;  // h != 0 since Q(h) > 0
  Rational kappa = v[pivot] / h[pivot];
  bool proportional = true;
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] != kappa * h[i]) proportional = false;
  if (proportional) r.witness = kappa;
  r.equality_iff_proportional = r.equality == proportional;
  return r;
}

RationalMatrix BlockFormInstance::q_w() const {
  const std::size_t rho = q_v.rows();
  require_square(q_v, phi.size(), "BlockFormInstance");
  RationalMatrix w(rho + 1, rho + 1, Rational(0));
  for (std::size_t i = 0; i < rho; ++i) {
    for (std::size_t j = 0; j < rho; ++j) w(i, j) = q_v(i, j);
    w(i, rho) = w(rho, i) = phi[i];
  }
  return w;
}

BlockHypotheses block_hypotheses(const BlockFormInstance& inst) {
  if (inst.h.size() != inst.phi.size()) throw InvalidArgument("BlockFormInstance: h has the wrong length");
  BlockHypotheses hyp;
  hyp.q_w_signature = inertia(inst.q_w());
  hyp.q_w_hodge_riemann = hyp.q_w_signature == Inertia{1, 0, inst.phi.size()};
  hyp.q_v_h_positive = bilinear(inst.q_v, inst.h, inst.h) > 0;
  hyp.phi_h_positive = dot(inst.phi, inst.h) > 0;
  return hyp;
}

std::vector<RationalVector> kernel_basis(const RationalVector& phi) {
  std::size_t pivot = 0;
  while (pivot < phi.size() && phi[pivot] == 0) ++pivot;
  if (pivot == phi.size()) throw InvalidArgument("kernel_basis: covector is zero");
  std::vector<RationalVector> basis;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    if (j == pivot) continue;
    RationalVector v(phi.size(), Rational(0));
    v[j] = 1;
    v[pivot] = -phi[j] / phi[pivot];
    basis.push_back(std::move(v));
  }
  return basis;
}

BlockFormResult block_form_check(const BlockFormInstance& inst, const RationalVector& v) {
  BlockHypotheses hyp = block_hypotheses(inst);
  if (!hyp.q_w_hodge_riemann) throw HypothesisError("Q_W does not have signature (1, 0, rho)", hyp.q_w_signature);
  if (!hyp.q_v_h_positive) throw HypothesisError("Q_V(h) is not positive", hyp.q_w_signature);
  if (!hyp.phi_h_positive) throw HypothesisError("phi(h) is not positive", hyp.q_w_signature);
  if (v.size() != inst.phi.size()) throw InvalidArgument("block_form_check: vector length mismatch");

  BlockFormResult r;
  r.lhs = bilinear(inst.q_v, v, v) * dot(inst.phi, inst.h);
  r.rhs = 2 * bilinear(inst.q_v, v, inst.h) * dot(inst.phi, v);
  r.holds = r.lhs <= r.rhs;
  r.equality = r.lhs == r.rhs;
  bool v_zero = true;
  for (const auto& x : v)
    if (x != 0) v_zero = false;
  r.equality_implies_v_zero = !r.equality || v_zero;

  auto kernel = kernel_basis(inst.phi);
  RationalMatrix restricted(kernel.size(), kernel.size(), Rational(0));
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < kernel.size(); ++j) restricted(i, j) = bilinear(inst.q_v, kernel[i], kernel[j]);
  r.kernel_signature = inertia(restricted);
  r.kernel_negative_definite = r.kernel_signature == Inertia{0, 0, kernel.size()};
  return r;
}

bool quartic_nonneg(const UniPoly& p) { return nonnegative_on_reals(p); }

std::vector<std::string> Nef2Verdict::failed() const {
  std::vector<std::string> out;
  for (const auto& c : conditions)
    if (!c.holds) out.push_back(c.name);
  return out;
}

Nef2Verdict nef2_membership(const Nef2Coefficients& c) {
  const auto& [a1, a2, a3, a4, a5, a6] = c.a;
  Nef2Verdict v;
  auto add = [&](std::string name, const Rational& lhs, const Rational& rhs) {
    v.conditions.push_back({std::move(name), lhs >= rhs, lhs == rhs});
  };
  v.conditions.push_back({"a1>=0&a3>=0", a1 >= 0 && a3 >= 0, a1 >= 0 && a3 >= 0 && (a1 == 0 || a3 == 0)});
  add("a2>=a6", a2, a6);
  add("4*a1*(a2-a6)>=a4^2", 4 * a1 * (a2 - a6), a4 * a4);
  add("4*a3*(a2-a6)>=a5^2", 4 * a3 * (a2 - a6), a5 * a5);

  const UniPoly left({a2 - a6, -a5, a3});       // a3 b^2 - a5 b + a2 - a6
  const UniPoly right({a1, -a4, a2 - a6});      // (a2 - a6) b^2 - a4 b + a1
  const UniPoly square({a4, a2 - 6 * a6, a5});  // a5 b^2 + (a2 - 6 a6) b + a4
  v.quartic = UniPoly(Rational(4)) * left * right - square * square;
  const bool nonneg = quartic_nonneg(v.quartic);
  const bool touches = v.quartic.is_zero() || count_real_roots(v.quartic) > 0;
  v.conditions.push_back({"quartic", nonneg, nonneg && touches});

  v.member = true;
  for (const auto& cond : v.conditions) v.member = v.member && cond.holds;
  v.boundary = false;
  for (const auto& cond : v.conditions) v.boundary = v.boundary || cond.tight;
  v.boundary = v.member && v.boundary;
  return v;
}

LogConcavityResult logconcavity(const std::vector<Rational>& f) {
  for (const auto& x : f)
    if (x <= 0) throw InvalidArgument("log-concavity needs positive values");
  LogConcavityResult r;
  r.weak_midpoint = true;
  for (std::size_t i = 2; i < f.size(); ++i) {
    const Rational outer = f[i] * f[i - 2], inner = f[i - 1] * f[i - 1];
    if (!(outer < inner)) r.midpoint_failures.push_back(i);
    if (outer > inner) r.weak_midpoint = false;
  }
  r.midpoint = r.midpoint_failures.empty();
  r.chord = true;
  r.weak_chord = true;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      for (std::size_t k = j + 1; k < f.size(); ++k) {
        Rational lhs = power(f[i], static_cast<unsigned>(k - j)) * power(f[k], static_cast<unsigned>(j - i));
        const Rational rhs = power(f[j], static_cast<unsigned>(k - i));
        if (!(lhs < rhs)) r.chord = false;
        if (lhs > rhs) r.weak_chord = false;
      }
  return r;
}

bool discrete_logconcave(const std::vector<Rational>& f) { return logconcavity(f).midpoint; }

SchurLogConcavityReport schur_logconcavity_report(const SplitBundle& bundle, const Partition& mu,
                                                  const GradedClass& h) {
  require_ample(bundle, h);
  const int d = bundle.model()->dimension();
  const int e = bundle.rank();
  if (e < d) throw PreconditionError("log-concavity report needs rank >= dimension");
  if (mu.weight() != e) throw InvalidArgument("partition must have weight equal to the rank");
  SchurLogConcavityReport report;
  for (int i = 0; i <= d; ++i) {
    Rational value = (bundle.derived_schur_class(mu, e - i) * h.pow(d - i)).integrate();
    if (value <= 0) report.nonpositive.push_back(static_cast<std::size_t>(i));
    report.values.push_back(value);
  }
  if (report.nonpositive.empty()) report.result = logconcavity(report.values);
  return report;
}

Hi2Result hi2_check(const SplitBundle& bundle, const GradedClass& h, const GradedClass& alpha) {
  const int d = bundle.model()->dimension();
  if (d < 2) throw InvalidArgument("hi2_check needs dimension >= 2");
  if (bundle.rank() < d - 1) throw InvalidArgument("hi2_check needs rank >= d - 1");
  if (alpha.grade() != 1 || h.grade() != 1) throw InvalidArgument("h and alpha must have degree 1");
  require_ample(bundle, h);
  const GradedClass c_low = bundle.chern(d - 2);
  const GradedClass c_high = bundle.chern(d - 1);
  Hi2Result r;
  r.lhs = (alpha * alpha * c_low).integrate() * (h * c_high).integrate();
  r.rhs = 2 * (alpha * h * c_low).integrate() * (alpha * c_high).integrate();
  r.holds = r.lhs <= r.rhs;
  r.equality = r.lhs == r.rhs;
  r.alpha_zero = alpha.is_zero();
  return r;
}

HlScanResult hl_failure_scan(const GramFamily& family, const Rational& max_width) {
  const std::size_t n = family.r.rows();
  require_square(family.r, n, "hl_failure_scan");
  require_square(family.s, n, "hl_failure_scan");
  HlScanResult out;
  out.det_r_sign = sgn(determinant(family.r));
  out.det_s_sign = sgn(determinant(family.s));
  Matrix<UniPoly> q(n, n, UniPoly());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = UniPoly(family.r(i, j)) + UniPoly(family.s(i, j)) * family.shift;
  out.det_q = laplace_determinant(q, UniPoly(), UniPoly(Rational(1)));
  if (!out.det_q.is_zero())
    out.first_positive_root = isolate_first_root(out.det_q, Rational(0), root_bound(out.det_q), max_width);
  return out;
}

GramFamily three_plane_chern_family() {
  auto model = RingModel::proj_product({2, 2, 2});
  auto bundle = SplitBundle::from_coefficients(model, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  std::vector<GradedClass> basis;
  for (const Monomial& m : std::vector<Monomial>{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}})
    basis.push_back(GradedClass::monomial(model, m));
  GramFamily fam;
  fam.r = gram_on_basis(bundle.chern(2), basis);
  fam.s = gram_on_basis(bundle.chern(1).pow(2), basis);
  fam.shift = UniPoly({Rational(0), Rational(2), Rational(3)});
  return fam;
}

Matrix<UniPoly> pencil_gram(const GradedClass& a, const GradedClass& b) {
  RationalMatrix g0 = gram_on_h11(a);
  RationalMatrix g1 = gram_on_h11(b);
  Matrix<UniPoly> out(g0.rows(), g0.cols(), UniPoly());
  for (std::size_t i = 0; i < g0.rows(); ++i)
    for (std::size_t j = 0; j < g0.cols(); ++j) out(i, j) = UniPoly({g0(i, j), g1(i, j) - g0(i, j)});
  return out;
}

namespace gen {

RationalVector vector(Rng& rng, std::size_t n) {
  RationalVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rng.rational(-4, 4, 3));
  return v;
}

namespace {

RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    RationalMatrix p(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = rng.rational(-3, 3, 2);
    if (determinant(p) != 0) return p;
  }
}

RationalMatrix lorentz(std::size_t n) {
  RationalMatrix d(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) d(i, i) = i == 0 ? 1 : -1;
  return d;
}

}  // namespace

RationalMatrix hodge_index_form(Rng& rng, std::size_t n) {
  RationalMatrix p = random_invertible(rng, n);
  return p.transpose() * lorentz(n) * p;
}

BlockFormInstance block_form_instance(Rng& rng, std::size_t rho) {
  if (rho < 2) throw InvalidArgument("block_form_instance needs rho >= 2");
  const std::size_t n = rho + 1;
  while (true) {
    RationalMatrix p(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) p(i, j) = rng.rational(-3, 3, 2);
    // (1 + s^2)^2 - (2s)^2 - (1 - s^2)^2 = 0: the last basis vector is isotropic
    Rational s = rng.rational(-3, 3, 2);
    p(0, rho) = 1 + s * s;
    p(1, rho) = 2 * s;
    p(2, rho) = 1 - s * s;
    if (determinant(p) == 0) continue;
    RationalMatrix w = p.transpose() * lorentz(n) * p;
    BlockFormInstance inst;
    inst.q_v = RationalMatrix(rho, rho, Rational(0));
    for (std::size_t i = 0; i < rho; ++i) {
      for (std::size_t j = 0; j < rho; ++j) inst.q_v(i, j) = w(i, j);
      inst.phi.push_back(w(rho, i));
    }
    for (int attempt = 0; attempt < 40; ++attempt) {
      RationalVector h = vector(rng, rho);
      if (bilinear(inst.q_v, h, h) <= 0) continue;
      Rational ph = dot(inst.phi, h);
      if (ph == 0) continue;
      if (ph < 0)
        for (auto& x : inst.phi) x = -x;  // congruence by diag(1, ..., 1, -1)
      inst.h = std::move(h);
      return inst;
    }
  }
}

}  // namespace gen

}  // namespace schurhr
