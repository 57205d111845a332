#include "doctest.h"
#include "schurhr/certify.hpp"
#include "schurhr/generators.hpp"

using namespace schurhr;

namespace {

GradedClass x(const ModelPtr& m, int i) { return GradedClass::generator(m, i); }

Nef2Coefficients nef2(std::initializer_list<Rational> a) {
  Nef2Coefficients c;
  std::size_t i = 0;
  for (const auto& v : a) c.a[i++] = v;
  return c;
}

}  // namespace

TEST_CASE("signature report examples") {
  auto hyperbolic = signature_report(RationalMatrix{{0, 1}, {1, 0}});
  CHECK(hyperbolic.signature == Inertia{1, 0, 1});
  CHECK(hyperbolic.det_sign == -1);
  CHECK(hyperbolic.hl);
  auto mu = signature_report(Rational(20) * RationalMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 2}});
  CHECK(mu.signature == Inertia{2, 0, 1});
  CHECK(mu.det_sign == -1);
  auto zero = signature_report(RationalMatrix(4, 4, Rational(0)));
  CHECK(zero.signature == Inertia{0, 4, 0});
  CHECK_FALSE(zero.hl);
  CHECK_FALSE(zero.hr);
}

TEST_CASE("hodge_index_check examples") {
  RationalMatrix q{{1, 0}, {0, -1}};
  auto r = hodge_index_check(q, {1, 0}, {0, 1});
  CHECK(r.lhs == -1);
  CHECK(r.rhs == 0);
  CHECK(r.holds);
  CHECK_FALSE(r.equality);
  CHECK_FALSE(r.witness.has_value());
  auto prop = hodge_index_check(q, {2, 1}, {6, 3});
  CHECK(prop.equality);
  CHECK(prop.witness == Rational(3));
  CHECK(prop.equality_iff_proportional);
  CHECK_THROWS_AS(hodge_index_check(RationalMatrix{{1, 0}, {0, 1}}, {1, 0}, {0, 1}), HypothesisError);
  CHECK_THROWS_AS(hodge_index_check(q, {0, 1}, {0, 1}), HypothesisError);
  try {
    hodge_index_check(RationalMatrix{{1, 0}, {0, 1}}, {1, 0}, {0, 1});
  } catch (const HypothesisError& e) {
    CHECK(e.inertia() == Inertia{2, 0, 0});
  }
}

TEST_CASE("property: the Hodge-index inequality never fails on signature (1, n-1)") {
  for (int trial = 0; trial < 80; ++trial) {
    Rng rng(Rng::derive_seed(61, static_cast<std::uint64_t>(trial)));
    const auto n = static_cast<std::size_t>(rng.range(2, 5));
    RationalMatrix q = gen::hodge_index_form(rng, n);
    RationalVector h = gen::vector(rng, n);
    if (bilinear(q, h, h) <= 0) continue;
    RationalVector v = rng.coin() ? gen::vector(rng, n) : RationalVector{};
    if (v.empty())
      for (const auto& c : h) v.push_back(Rational(-2, 5) * c);
    auto r = hodge_index_check(q, h, v);
    CHECK(r.holds);
    CHECK(r.equality_iff_proportional);
  }
}

TEST_CASE("block_form_check examples") {
  Rng rng(1234);
  BlockFormInstance inst = gen::block_form_instance(rng, 3);
  REQUIRE(block_hypotheses(inst).all());
  auto zero = block_form_check(inst, RationalVector(3, Rational(0)));
  CHECK(zero.equality);
  CHECK(zero.equality_implies_v_zero);
  auto at_h = block_form_check(inst, inst.h);
  CHECK(at_h.lhs < at_h.rhs);
  CHECK(at_h.kernel_signature == Inertia{0, 0, 2});

  BlockFormInstance bad = inst;
  for (auto& c : bad.phi) c = -c;
  CHECK_THROWS_AS(block_form_check(bad, inst.h), HypothesisError);
  BlockFormInstance definite{RationalMatrix{{1, 0}, {0, 1}}, {1, 0}, {1, 0}};
  CHECK_FALSE(block_hypotheses(definite).q_w_hodge_riemann);
  CHECK_THROWS_AS(block_form_check(definite, {0, 1}), HypothesisError);
}

TEST_CASE("property: block-form conclusions hold on random instances") {
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Rng rng(Rng::derive_seed(23, static_cast<std::uint64_t>(trial)));
    const auto rho = static_cast<std::size_t>(rng.range(2, 5));
    BlockFormInstance inst = gen::block_form_instance(rng, rho);
    REQUIRE(block_hypotheses(inst).all());
    for (int k = 0; k < 3; ++k) {
      RationalVector v = gen::vector(rng, rho);
      auto r = block_form_check(inst, v);
      CHECK(r.holds);
      CHECK(r.equality_implies_v_zero);
      CHECK(r.kernel_negative_definite);
    }
    ++checked;
  }
  CHECK(checked == 120);
}

TEST_CASE("quartic_nonneg examples") {
  UniPoly b = UniPoly::variable();
  CHECK(quartic_nonneg(b * b));
  CHECK_FALSE(quartic_nonneg(b * b - UniPoly(Rational(1))));
  CHECK(quartic_nonneg(UniPoly(Rational(4)) * b * b - b * b));
  CHECK_FALSE(quartic_nonneg(b * b * b));
  CHECK(quartic_nonneg(UniPoly()));
  UniPoly touching = (b - UniPoly(Rational(1, 2))) * (b - UniPoly(Rational(1, 2))) * (b * b + UniPoly(Rational(1)));
  CHECK(quartic_nonneg(touching));
  CHECK_FALSE(quartic_nonneg(touching - UniPoly(Rational(1, 1000000))));
}

TEST_CASE("property: quartic_nonneg agrees with sums of squares and sampled sign changes") {
  Rng rng(808);
  UniPoly b = UniPoly::variable();
  for (int trial = 0; trial < 60; ++trial) {
    UniPoly p = UniPoly({rng.rational(-3, 3, 2), rng.rational(-3, 3, 2), rng.rational(-3, 3, 2)});
    UniPoly q = UniPoly({rng.rational(-3, 3, 2), rng.rational(-3, 3, 2)});
    CHECK(quartic_nonneg(p * p + q * q));
    Rational r = rng.rational(-5, 5, 3);
    UniPoly crossing = (b - UniPoly(r)) * (b - UniPoly(r + Rational(1))) * (p * p + UniPoly(Rational(1)));
    CHECK_FALSE(quartic_nonneg(crossing));
    CHECK(crossing(r + Rational(1, 2)) < 0);
  }
}

TEST_CASE("nef2_membership examples") {
  auto mu = nef2_membership(nef2({0, 8, 0, 0, 0, 3}));
  CHECK(mu.member);
  CHECK(mu.boundary);
  CHECK(mu.quartic.is_zero());
  CHECK(mu.conditions.back().tight);

  auto above = nef2_membership(nef2({0, 8, 0, 0, 0, Rational(301, 100)}));
  CHECK_FALSE(above.member);
  CHECK(above.failed() == std::vector<std::string>{"quartic"});

  auto theta = nef2_membership(nef2({0, 1, 0, 0, 0, 0}));
  CHECK(theta.member);
  CHECK(theta.quartic == UniPoly({0, 0, 3}));

  auto four = nef2_membership(nef2({0, 8, 0, 0, 0, 4}));
  CHECK_FALSE(four.member);
  CHECK(four.failed() == std::vector<std::string>{"quartic"});

  auto negative = nef2_membership(nef2({-1, 1, 0, 0, 0, 0}));
  CHECK_FALSE(negative.member);
  CHECK(negative.failed().front() == "a1>=0&a3>=0");

  // lower end of the mu-line: a6 = -a2/4 stays, just below leaves
  CHECK(nef2_membership(nef2({0, 8, 0, 0, 0, -2})).member);
  CHECK_FALSE(nef2_membership(nef2({0, 8, 0, 0, 0, Rational(-201, 100)})).member);
}

TEST_CASE("nef2 membership along the line a2 theta1 theta2 + a6 lambdaP^2") {
  for (int k = -16; k <= 16; ++k) {
    Rational a6(k, 4);
    bool expected = a6 >= -2 && a6 <= 3;  // -a2/4 <= a6 <= 3 a2/8 at a2 = 8
    CAPTURE(to_string(a6));
    CHECK(nef2_membership(nef2({0, 8, 0, 0, 0, a6})).member == expected);
  }
}

TEST_CASE("property: products of nonnegative theta combinations lie in the nef2 cone") {
  Rng rng(55);
  auto ab = RingModel::abelian_square();
  for (int trial = 0; trial < 40; ++trial) {
    auto draw = [&] {
      RationalVector c{rng.rational(0, 3, 2), rng.rational(0, 3, 2), Rational(0)};
      return GradedClass::linear(ab, c);
    };
    GradedClass p = draw() * draw();
    const auto& coeffs = p.coefficients();  // basis (t1^2, t1t2, t1L, t2^2, t2L, L^2)
    REQUIRE(coeffs.size() == 6);
    auto v = nef2_membership(nef2({coeffs[0], coeffs[1], coeffs[3], coeffs[2], coeffs[4], coeffs[5]}));
    CHECK(v.member);
  }
}

TEST_CASE("discrete_logconcave examples") {
  CHECK(discrete_logconcave({1, 2, 3, 2, 1}));
  CHECK_FALSE(discrete_logconcave({1, 1, 1}));
  CHECK(discrete_logconcave({1, 4, 6, 4, 1}));
  CHECK(discrete_logconcave({5}));
  CHECK_THROWS_AS(discrete_logconcave({1, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(discrete_logconcave({1, -2, 1}), InvalidArgument);
  auto flat = logconcavity({2, 2, 2, 2});
  CHECK_FALSE(flat.midpoint);
  CHECK(flat.weak_midpoint);
  CHECK(flat.weak_chord);
  CHECK(flat.midpoint_failures == std::vector<std::size_t>{2, 3});
}

TEST_CASE("property: midpoint log-concavity implies the chord condition") {
  Rng rng(91);
  int concave = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> f;
    for (long n = rng.range(3, 7); n > 0; --n) f.push_back(rng.positive_rational(20, 3));
    auto r = logconcavity(f);
    if (r.midpoint) {
      ++concave;
      CHECK(r.chord);
    }
    if (!r.weak_midpoint) CHECK_FALSE(r.weak_chord);
  }
  CHECK(concave > 10);
}

TEST_CASE("schur_logconcavity_report examples") {
  auto p2 = RingModel::proj_product({2});
  auto e = SplitBundle::from_coefficients(p2, {{1}, {2}});
  GradedClass h = x(p2, 0);
  auto report = schur_logconcavity_report(e, Partition({2}), h);
  CHECK(report.values == std::vector<Rational>{1, 3, 2});
  CHECK(report.strict());

  // mu = (e) gives the Chern numbers
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    auto model = gen::proj_model(rng, static_cast<int>(rng.range(2, 4)));
    const int d = model->dimension();
    auto b = gen::ample_split_bundle(rng, model, static_cast<int>(rng.range(d, d + 2)));
    GradedClass hh = gen::ample_class(rng, model);
    auto r = schur_logconcavity_report(b, Partition::row(b.rank()), hh);
    for (int i = 0; i <= d; ++i)
      CHECK(r.values[static_cast<std::size_t>(i)] == (b.chern(i) * hh.pow(d - i)).integrate());
    CHECK(r.strict());
  }

  CHECK_THROWS_AS(schur_logconcavity_report(SplitBundle::from_coefficients(p2, {{1}}), Partition({1}), h),
                  PreconditionError);
  CHECK_THROWS_AS(schur_logconcavity_report(e, Partition({1}), h), InvalidArgument);
  CHECK_THROWS_AS(schur_logconcavity_report(SplitBundle::from_coefficients(p2, {{1}, {0}}), Partition({2}), h),
                  PreconditionError);
}

TEST_CASE("equal roots recover the mixed-degree sequence of two ample classes") {
  Rng rng(72);
  for (int trial = 0; trial < 15; ++trial) {
    auto model = gen::proj_model(rng, static_cast<int>(rng.range(2, 5)));
    const int d = model->dimension();
    GradedClass alpha = gen::ample_class(rng, model);
    GradedClass beta = gen::ample_class(rng, model);
    const int e = d + static_cast<int>(rng.range(0, 1));
    std::vector<GradedClass> roots(static_cast<std::size_t>(e), alpha);
    SplitBundle b(model, roots);
    auto report = schur_logconcavity_report(b, Partition::row(e), beta);
    std::vector<Rational> mixed;
    for (int i = 0; i <= d; ++i) {
      Rational s = (alpha.pow(i) * beta.pow(d - i)).integrate();
      mixed.push_back(s);
      CHECK(report.values[static_cast<std::size_t>(i)] == binomial(e, i) * s);
    }
    CHECK(report.strict());
    auto kt = logconcavity(mixed);
    CHECK(kt.weak_midpoint);
    CHECK(kt.weak_chord);
  }
}

TEST_CASE("property: strict log-concavity of derived Schur numbers") {
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng(Rng::derive_seed(83, static_cast<std::uint64_t>(trial)));
    auto model = gen::proj_model(rng, static_cast<int>(rng.range(2, 5)));
    const int d = model->dimension();
    auto b = gen::ample_split_bundle(rng, model, static_cast<int>(rng.range(d, d + 1)));
    Partition mu = gen::partition(rng, b.rank(), b.rank());
    auto report = schur_logconcavity_report(b, mu, gen::ample_class(rng, model));
    CAPTURE(model->name());
    CAPTURE(mu.to_string());
    CHECK(report.nonpositive.empty());
    CHECK(report.result.midpoint);
    CHECK(report.result.chord);
  }
}

TEST_CASE("hi2_check") {
  auto p22 = RingModel::proj_product({2, 2});
  auto e = SplitBundle::from_coefficients(p22, {{1, 1}, {2, 1}, {1, 3}});
  GradedClass h = x(p22, 0) + x(p22, 1);
  auto zero = hi2_check(e, h, GradedClass(p22, 1));
  CHECK(zero.equality);
  CHECK(zero.alpha_zero);
  CHECK(zero.lhs == 0);
  auto at_h = hi2_check(e, h, h);
  CHECK(at_h.lhs < at_h.rhs);
  CHECK_THROWS_AS(hi2_check(SplitBundle::from_coefficients(p22, {{1, 1}}), h, h), InvalidArgument);
  CHECK_THROWS_AS(hi2_check(e, x(p22, 0), h), PreconditionError);

  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto model = gen::proj_model(rng, static_cast<int>(rng.range(2, 5)));
    const int d = model->dimension();
    auto b = gen::ample_split_bundle(rng, model, static_cast<int>(rng.range(d - 1, d + 1)));
    GradedClass hh = gen::ample_class(rng, model);
    RationalVector coeffs = gen::vector(rng, static_cast<std::size_t>(model->generator_count()));
    GradedClass alpha = GradedClass::linear(model, coeffs);
    auto r = hi2_check(b, hh, alpha);
    CHECK(r.holds);
    CHECK(r.equality == r.alpha_zero);
    auto s = hi2_check(b, hh, hh);
    CHECK(s.lhs < s.rhs);
  }
}

TEST_CASE("hi2_check on surfaces is the block-form inequality for the intersection form") {
  Rng rng(18);
  for (int trial = 0; trial < 20; ++trial) {
    auto model = gen::proj_model(rng, 2);
    auto b = gen::ample_split_bundle(rng, model, static_cast<int>(rng.range(1, 3)));
    GradedClass h = gen::ample_class(rng, model);
    const auto k = static_cast<std::size_t>(model->generator_count());
    BlockFormInstance inst;
    inst.q_v = intersection_gram(GradedClass::one(model), 1);
    for (std::size_t i = 0; i < k; ++i)
      inst.phi.push_back((x(model, static_cast<int>(i)) * b.chern(1)).integrate());
    inst.h = h.coefficients();
    REQUIRE(block_hypotheses(inst).all());
    RationalVector a = gen::vector(rng, k);
    auto hi = hi2_check(b, h, GradedClass::linear(model, a));
    auto block = block_form_check(inst, a);
    CHECK(hi.lhs == block.lhs);
    CHECK(hi.rhs == block.rhs);
    auto index = hodge_index_check(inst.q_v, inst.h, a);
    CHECK(index.holds);
  }
}

TEST_CASE("hl_failure_scan on the three-plane family") {
  GramFamily fam = three_plane_chern_family();
  auto scan = hl_failure_scan(fam, Rational(1, 1000000));
  CHECK(scan.det_r_sign < 0);
  CHECK(scan.det_s_sign > 0);
  REQUIRE(scan.first_positive_root.has_value());
  const auto& root = *scan.first_positive_root;
  CHECK(root.lower >= 0);
  CHECK(root.width() < Rational(1, 1000000));
  CHECK(count_real_roots(scan.det_q, root.lower, root.upper) == 1);
  CHECK(scan.det_q(Rational(0)) == determinant(fam.r));

  // det Q_t against the Gram of c_2 of the bundle twisted by t c_1
  auto model = RingModel::proj_product({2, 2, 2});
  auto e = SplitBundle::from_coefficients(model, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  std::vector<GradedClass> basis;
  for (const Monomial& m : std::vector<Monomial>{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}})
    basis.push_back(GradedClass::monomial(model, m));
  for (Rational t : {Rational(1, 3), Rational(2), Rational(-5, 7), root.lower, root.upper}) {
    GradedClass c2 = e.twisted(t * e.chern(1)).chern(2);
    CHECK(determinant(gram_on_basis(c2, basis)) == scan.det_q(t));
  }
}

TEST_CASE("pencil between c3 and s_111 on proj(2,3)") {
  auto model = RingModel::proj_product({2, 3});
  auto e = SplitBundle::from_coefficients(model, {{1, 0}, {1, 0}, {0, 1}});
  auto pencil = pencil_gram(e.chern(3), e.schur_class(Partition({1, 1, 1})));
  UniPoly t = UniPoly::variable();
  UniPoly two(Rational(2));
  Matrix<UniPoly> expected{{t, two * t}, {two * t, UniPoly(Rational(1)) + two * t}};
  CHECK(pencil == expected);
  RationalMatrix at(2, 2, Rational(0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) at(i, j) = pencil(i, j)(Rational(1, 4));
  CHECK(inertia(at) == Inertia{2, 0, 0});
}

TEST_CASE("property: Schur classes of ample bundles are Hodge-Riemann") {
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Rng rng(Rng::derive_seed(2024, static_cast<std::uint64_t>(trial)));
    const int d = static_cast<int>(rng.range(4, 5));
    auto model = gen::proj_model(rng, d);
    const int e = static_cast<int>(rng.range(1, 4));
    auto b = gen::ample_split_bundle(rng, model, e);
    Partition lambda = gen::partition(rng, d - 2, e);
    auto r = ring_hodge_riemann(b.schur_class(lambda), gen::ample_class(rng, model));
    CAPTURE(model->name());
    CAPTURE(lambda.to_string());
    CHECK(r.hr);
    CHECK(r.positivity > 0);
    ++checked;
  }
  CHECK(checked == 60);
}
