#include "schurhr/repro.hpp"

#include <sstream>

#include "schurhr/certify.hpp"
#include "schurhr/forms.hpp"
#include "schurhr/schur.hpp"

namespace schurhr {

namespace {

// accumulates failure messages for one case
class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (!text_.empty()) text_ += "; ";
    text_ += what;
  }
  std::string str() const { return text_; }

 private:
  std::string text_;
};

std::string str(const RationalMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

InertiaReport omega_family_verdict(const Rational& a) {
  PQForm w1 = HermitianOneOne::identity(4).to_form();
  PQForm w2 = HermitianOneOne::diagonal({Rational(1, 7), Rational(1, 7), Rational(2), Rational(2)}).to_form();
  return hodge_riemann_verdict(w1 * w1 + a * (w2 * w2), HermitianOneOne::identity(4));
}

GradedClass abelian_mu(const ModelPtr& ab) {
  GradedClass t1 = GradedClass::generator(ab, 0), t2 = GradedClass::generator(ab, 1);
  GradedClass l = GradedClass::generator(ab, 2);
  return Rational(8) * t1 * t2 + Rational(3) * l * l;
}

SplitBundle p2p3_bundle() {
  return SplitBundle::from_coefficients(RingModel::proj_product({2, 3}), {{1, 0}, {1, 0}, {0, 1}});
}

std::vector<ReproCase> build_cases() {
  std::vector<ReproCase> cases;

  cases.push_back({"omega-family-signature-1-15",
                   "w1^2 + a w2^2 on C^4 is Hodge-Riemann, inertia (1,0,15), for a in {0, 1, 2, 9/2, 100}",
                   [](const ReproOptions&) {
                     Failures f;
                     for (Rational a : {Rational(0), Rational(1), Rational(2), Rational(9, 2), Rational(100)}) {
                       auto r = omega_family_verdict(a);
                       f.expect(r.signature == Inertia{1, 0, 15} && r.hr,
                                "a=" + to_string(a) + " inertia=" + r.signature.to_string());
                     }
                     return f.str();
                   }});
  cases.push_back({"omega-family-degenerate", "w1^2 + a w2^2 on C^4 has a kernel for a in {3, 49/12}",
                   [](const ReproOptions&) {
                     Failures f;
                     for (Rational a : {Rational(3), Rational(49, 12)}) {
                       auto r = omega_family_verdict(a);
                       f.expect(r.signature.zero >= 1 && !r.hl,
                                "a=" + to_string(a) + " inertia=" + r.signature.to_string());
                     }
                     return f.str();
                   }});
  cases.push_back({"omega-family-signature-2-14",
                   "w1^2 + a w2^2 on C^4 has inertia (2,0,14), not Hodge-Riemann, for a in {13/4, 7/2, 4}",
                   [](const ReproOptions&) {
                     Failures f;
                     for (Rational a : {Rational(13, 4), Rational(7, 2), Rational(4)}) {
                       auto r = omega_family_verdict(a);
                       f.expect(r.signature == Inertia{2, 0, 14} && !r.hr,
                                "a=" + to_string(a) + " inertia=" + r.signature.to_string());
                     }
                     return f.str();
                   }});
  cases.push_back({"omega-family-kahler-data", "diag(1/7,1/7,2,2) is a Kahler form", [](const ReproOptions&) {
                     Failures f;
                     f.expect(kahler_check(HermitianOneOne::diagonal(
                                  {Rational(1, 7), Rational(1, 7), Rational(2), Rational(2)})),
                              "not positive definite");
                     return f.str();
                   }});
  cases.push_back({"complete-homogeneous-schur-form",
                   "s_(1^(d-2))(w1, w2) = sum_j w1^(d-2-j) w2^j for d = 4, 5", [](const ReproOptions&) {
                     Failures f;
                     for (int d = 4; d <= 5; ++d) {
                       std::vector<Rational> a, b;
                       for (int j = 1; j <= d; ++j) {
                         a.emplace_back(j);
                         b.emplace_back(1, j + 1);
                       }
                       std::vector<HermitianOneOne> ws{HermitianOneOne::diagonal(a), HermitianOneOne::diagonal(b)};
                       PQForm w1 = ws[0].to_form(), w2 = ws[1].to_form();
                       PQForm sum(d, d - 2, d - 2);
                       for (int j = 0; j <= d - 2; ++j) sum += wedge_power(w1, d - 2 - j) * wedge_power(w2, j);
                       Partition ones(std::vector<int>(static_cast<std::size_t>(d - 2), 1));
                       f.expect(schur_form(ones, ws) == sum, "d=" + std::to_string(d));
                     }
                     return f.str();
                   }});

  cases.push_back({"abelian-quartic-integrals", "lambdaP^4 = 24, theta1 theta2 lambdaP^2 = -4, theta1^3 theta2 = 0",
                   [](const ReproOptions& o) {
                     auto ab = RingModel::abelian_square(o.abelian);
                     Failures f;
                     f.expect(ab->integral({0, 0, 4}) == 24, "lambdaP^4");
                     f.expect(ab->integral({1, 1, 2}) == -4, "theta1 theta2 lambdaP^2");
                     f.expect(ab->integral({3, 1, 0}) == 0, "theta1^3 theta2");
                     return f.str();
                   }});
  cases.push_back({"abelian-mu-gram",
                   "mu = 8 theta1 theta2 + 3 lambdaP^2 has Gram 20*[[0,1,0],[1,0,0],[0,0,2]], inertia (2,0,1)",
                   [](const ReproOptions& o) {
                     auto ab = RingModel::abelian_square(o.abelian);
                     RationalMatrix g = gram_on_h11(abelian_mu(ab));
                     RationalMatrix expected = Rational(20) * RationalMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 2}};
                     Failures f;
                     f.expect(g == expected, "gram=" + str(g));
                     f.expect(inertia(g) == Inertia{2, 0, 1}, "inertia=" + inertia(g).to_string());
                     f.expect(determinant(g) < 0, "determinant not negative");
                     return f.str();
                   }});
  cases.push_back({"abelian-mu-nef2-boundary",
                   "mu lies on the boundary of the nef2 cone: quartic identically zero, a6 = 3 + 1/100 outside",
                   [](const ReproOptions&) {
                     Failures f;
                     auto mu = nef2_membership({{0, 8, 0, 0, 0, 3}});
                     f.expect(mu.member && mu.boundary, "mu not a boundary member");
                     f.expect(mu.quartic.is_zero(), "quartic=" + mu.quartic.to_string("b"));
                     f.expect(!nef2_membership({{0, 8, 0, 0, 0, Rational(301, 100)}}).member, "a6=301/100 accepted");
                     f.expect(nef2_membership({{0, 1, 0, 0, 0, 0}}).member, "theta1 theta2 rejected");
                     return f.str();
                   }});

  cases.push_back({"three-plane-c2", "c2 of O(1,0,0)+O(0,1,0)+O(0,0,1) is x1x2 + x1x3 + x2x3",
                   [](const ReproOptions&) {
                     auto m = RingModel::proj_product({2, 2, 2});
                     auto e = SplitBundle::from_coefficients(m, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
                     Failures f;
                     f.expect(e.chern(2).to_string() == "x1*x2 + x1*x3 + x2*x3", e.chern(2).to_string());
                     return f.str();
                   }});
  cases.push_back({"three-plane-det-signs", "on proj(2,2,2): det Gram(c2) < 0 and det Gram(c1^2) > 0 on H^{2,2}",
                   [](const ReproOptions&) {
                     auto scan = hl_failure_scan(three_plane_chern_family(), Rational(1, 1000000));
                     Failures f;
                     f.expect(scan.det_r_sign < 0, "det R sign " + std::to_string(scan.det_r_sign));
                     f.expect(scan.det_s_sign > 0, "det S sign " + std::to_string(scan.det_s_sign));
                     return f.str();
                   }});
  cases.push_back({"three-plane-singular-twist",
                   "det Gram(c2 of E twisted by t c1) vanishes at some t > 0, isolated to width < 1e-6",
                   [](const ReproOptions&) {
                     auto scan = hl_failure_scan(three_plane_chern_family(), Rational(1, 1000000));
                     Failures f;
                     f.expect(scan.first_positive_root.has_value(), "no positive root");
                     if (scan.first_positive_root) {
                       const auto& r = *scan.first_positive_root;
                       f.expect(r.lower >= 0 && r.width() < Rational(1, 1000000), "interval too wide");
                       f.expect(count_real_roots(scan.det_q, r.lower, r.upper) == 1, "interval not isolating");
                     }
                     return f.str();
                   }});

  cases.push_back({"p2p3-c1", "c1 of O(1,0)+O(1,0)+O(0,1) on proj(2,3) is 2x1 + x2", [](const ReproOptions&) {
                     Failures f;
                     auto e = p2p3_bundle();
                     f.expect(e.chern(1).to_string() == "2*x1 + x2", e.chern(1).to_string());
                     return f.str();
                   }});
  cases.push_back({"p2p3-pencil-gram",
                   "Gram of (1-t) c3 + t s_111 on proj(2,3) is [[t,2t],[2t,1+2t]], inertia (2,0,0) at t = 1/4",
                   [](const ReproOptions&) {
                     auto e = p2p3_bundle();
                     auto pencil = pencil_gram(e.chern(3), e.schur_class(Partition({1, 1, 1})));
                     UniPoly t = UniPoly::variable(), two(Rational(2));
                     Matrix<UniPoly> expected{{t, two * t}, {two * t, UniPoly(Rational(1)) + two * t}};
                     Failures f;
                     f.expect(pencil == expected, "pencil differs");
                     f.expect(gram_on_h11(e.chern(3)) == RationalMatrix{{0, 0}, {0, 1}}, "Gram at t=0");
                     RationalMatrix quarter(2, 2, Rational(0));
                     for (std::size_t i = 0; i < 2; ++i)
                       for (std::size_t j = 0; j < 2; ++j) quarter(i, j) = pencil(i, j)(Rational(1, 4));
                     f.expect(inertia(quarter) == Inertia{2, 0, 0}, "inertia at 1/4 " + inertia(quarter).to_string());
                     return f.str();
                   }});

  cases.push_back({"low-degree-schur", "s_21 = c1 c2 - c3 and s_111 = c1^3 - 2 c1 c2 + c3 at rank 3",
                   [](const ReproOptions&) {
                     Failures f;
                     f.expect(schur(Partition({2, 1}), 3).to_string() == "c1*c2 - c3", "s_21");
                     f.expect(schur(Partition({1, 1, 1}), 3).to_string() == "c1^3 - 2*c1*c2 + c3", "s_111");
                     return f.str();
                   }});
  cases.push_back({"twisted-first-chern", "c1 of a rank-3 bundle twisted by delta is c1 + 3 delta",
                   [](const ReproOptions&) {
                     Failures f;
                     f.expect(chern_of_twist(1, 3).to_string() == "c1 + 3*delta", chern_of_twist(1, 3).to_string());
                     return f.str();
                   }});
  cases.push_back({"derived-schur-low-degree-table",
                   "closed forms of s_mu^(i) for |mu| <= 3 at ranks 3, 4, 5", [](const ReproOptions&) {
                     Failures f;
                     for (int e = 3; e <= 5; ++e)
                       for (const auto& row : low_degree_derived_table(e)) {
                         ChernPoly got = derived_schur(row.mu, e, row.order);
                         f.expect(got == row.expected, "e=" + std::to_string(e) + " mu=" + row.mu.to_string() +
                                                           " i=" + std::to_string(row.order) + ": " + got.to_string());
                       }
                     return f.str();
                   }});
  cases.push_back({"derived-schur-of-a-row", "s_(e)^(i) = c_(e-i) for e <= 6", [](const ReproOptions&) {
                     Failures f;
                     for (int e = 1; e <= 6; ++e)
                       for (int i = 0; i <= e; ++i)
                         f.expect(derived_schur(Partition::row(e), e, i) == ChernPoly::chern(e, e - i),
                                  "e=" + std::to_string(e) + " i=" + std::to_string(i));
                     return f.str();
                   }});
  cases.push_back({"chern-number-logconcavity", "O(1)+O(2) on proj(2) with h = x: (1, 3, 2), strictly log-concave",
                   [](const ReproOptions&) {
                     auto p2 = RingModel::proj_product({2});
                     auto e = SplitBundle::from_coefficients(p2, {{1}, {2}});
                     auto report = schur_logconcavity_report(e, Partition({2}), GradedClass::generator(p2, 0));
                     Failures f;
                     f.expect(report.values == std::vector<Rational>{1, 3, 2}, "values differ");
                     f.expect(report.strict(), "not strict");
                     return f.str();
                   }});
  return cases;
}

}  // namespace

const std::vector<ReproCase>& repro_cases() {
  static const std::vector<ReproCase> cases = build_cases();
  return cases;
}

std::vector<ReproOutcome> run_repro(const ReproOptions& options) {
  std::vector<ReproOutcome> out;
  for (const auto& c : repro_cases()) {
    ReproOutcome o{c.id, c.description, false, ""};
    try {
      o.detail = c.run(options);
      o.passed = o.detail.empty();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<DerivedSchurIdentity> low_degree_derived_table(int e) {
  if (e < 3) throw InvalidArgument("low_degree_derived_table needs rank >= 3");
  auto c = [e](int k) { return ChernPoly::chern(e, k); };
  auto k = [e](const Rational& v) { return ChernPoly::constant(e, v); };
  return {
      {Partition({1}), 0, c(1)},
      {Partition({1}), 1, k(e)},
      {Partition({2}), 0, c(2)},
      {Partition({2}), 1, Rational(e - 1) * c(1)},
      {Partition({2}), 2, k(binomial(e, 2))},
      {Partition({1, 1}), 0, c(1) * c(1) - c(2)},
      {Partition({1, 1}), 1, Rational(e + 1) * c(1)},
      {Partition({1, 1}), 2, k(binomial(e + 1, 2))},
      {Partition({3}), 0, c(3)},
      {Partition({3}), 1, Rational(e - 2) * c(2)},
      {Partition({3}), 2, binomial(e - 1, 2) * c(1)},
      {Partition({3}), 3, k(binomial(e, 3))},
      {Partition({2, 1}), 0, c(1) * c(2) - c(3)},
      {Partition({2, 1}), 1, Rational(2) * c(2) + Rational(e - 1) * c(1) * c(1)},
      {Partition({2, 1}), 2, Rational(e * e - 1) * c(1)},
      {Partition({2, 1}), 3, k(2 * binomial(e + 1, 3))},
      {Partition({1, 1, 1}), 0, c(1) * c(1) * c(1) - Rational(2) * c(1) * c(2) + c(3)},
      {Partition({1, 1, 1}), 1, Rational(e + 2) * (c(1) * c(1) - c(2))},
      {Partition({1, 1, 1}), 2, binomial(e + 2, 2) * c(1)},
      {Partition({1, 1, 1}), 3, k(binomial(e + 2, 3))},
  };
}

}  // namespace schurhr
