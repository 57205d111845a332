#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "schurhr/cli.hpp"
#include "schurhr/random.hpp"
#include "schurhr/repro.hpp"
#include "schurhr/scenario.hpp"

using namespace schurhr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "schurhr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("schurhr_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string scenario_path(const std::string& name) { return std::string(SCHURHR_SCENARIO_DIR) + "/" + name; }

void check_error_at(const std::string& text, int line, int column, const std::string& fragment) {
  CAPTURE(text);
  try {
    parse_scenario(text);
    FAIL("expected a ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

const std::string kOmegaFamily = R"(# comment
[form w1]
diagonal = 1, 1, 1, 1
[form w2]
diagonal = 1/7, 1/7, 2, 2
)";

std::string omega_task(const std::string& a) {
  return kOmegaFamily + "[hr-check]\nreference = w1\nomega = w1^2 + " + a + "*w2^2\n";
}

}  // namespace

TEST_CASE("scenario parser reads every section kind") {
  Scenario s = parse_scenario(R"(model = proj(2,2)   # trailing comment
seed = 42

[bundle E]
roots = 1,1; 2, 1/2
twist = 0, -1/3

[bundle R]
random_rank = 3

[form h]
row = 1, 0+1i
row = 0-1i, 2

[ring-eval first]
bundle = E
partition = 2
derived = 1

[hi2]
bundle = E
alpha = 1, -1
)");
  REQUIRE(s.model);
  CHECK(*s.model == "proj(2,2)");
  CHECK(s.seed == std::optional<std::uint64_t>(42));
  REQUIRE(s.bundles.size() == 2);
  CHECK(s.bundles[0].roots == std::vector<RationalVector>{{1, 1}, {2, Rational(1, 2)}});
  CHECK(s.bundles[0].twist == RationalVector{0, Rational(-1, 3)});
  CHECK(s.bundles[1].random_rank == std::optional<int>(3));
  REQUIRE(s.forms.size() == 1);
  CHECK(s.forms[0].rows[0][1] == GaussianRational::i());
  REQUIRE(s.tasks.size() == 2);
  CHECK(s.tasks[0].kind == "ring-eval");
  CHECK(s.tasks[0].label == "first");
  CHECK(s.tasks[0].find("derived")->value == "1");
  CHECK(s.tasks[0].find("derived")->line == 18);
  CHECK(s.tasks[0].find("derived")->column == 11);
  CHECK(s.tasks[1].label.empty());
}

TEST_CASE("scenario diagnostics carry line and column") {
  check_error_at("model = proj(2)\ncolour = red\n", 2, 1, "unknown key 'colour'");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 1\nroots = 2\n", 4, 1, "duplicate key");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 1, 2\n", 3, 9, "expected 1 coefficients");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 1\ncolour = 2\n", 4, 1, "unknown key 'colour'");
  check_error_at("[bundle E]\nroots = 1\n", 2, 9, "model");
  check_error_at("model = proj(2)\n  [widget]\n", 2, 4, "unknown section 'widget'");
  check_error_at("model = proj(2)\n[bundle E]\nroots 1\n", 3, 1, "key = value");
  check_error_at("model = proj(2)\n[bundle E]\nroots =   \n", 3, 8, "missing value");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 1/0\n", 3, 9, "");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 0.5\n", 3, 9, "");
  check_error_at("model = proj(2)\n[bundle E]\n", 2, 1, "exactly one of 'roots' or 'random_rank'");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 1\n[bundle E]\nroots = 1\n", 4, 2, "already defined");
  check_error_at("model = proj(2)\n[ring-eval]\nbundle = F\npartition = 1\n", 3, 10, "unknown bundle 'F'");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 1\n[ring-eval]\nbundle = E\n", 4, 1, "missing 'partition'");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 1\n[ring-eval]\nbundle = E\npartition = 2,x\n", 6, 13,
                 "bad partition");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 1\n[hi2]\nbundle = E\nalpha = 1\nomega = w\n", 7, 1,
                 "unknown key 'omega' in hi2");
  check_error_at("[form w]\nrow = 1, 1\nrow = 0, 1\n", 1, 1, "not Hermitian");
  check_error_at("[form w]\nrow = 1, 1\nrow = 1\n", 1, 1, "");
  check_error_at(kOmegaFamily + "[hr-check]\nreference = w1\nomega = w1^2 + w3^2\n", 8, 9, "unknown form 'w3'");
  check_error_at(kOmegaFamily + "[hr-check]\nreference = w1\nomega = w1^2 + w2\n", 8, 9, "mixes wedge degrees");
  check_error_at(kOmegaFamily + "[hr-check]\nreference = w1\n", 6, 1, "either 'omega'");
  check_error_at(kOmegaFamily + "[hr-check]\nreference = w1\nomega = w1^2\npartition = 1,1\n", 6, 1, "either 'omega'");
  check_error_at("seed = -3\n", 1, 8, "seed");
  check_error_at("model = proj(2)\n[bundle E]\nroots = 1\n[logconcave]\nbundle = E\n[bundle E2\n", 6, 10, "']'");
}

TEST_CASE("form expressions") {
  FormExpression e = parse_form_expression("w1^2 + 7/2*w2^2");
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[1].coeff == Rational(7, 2));
  CHECK(e.terms[1].factors == std::vector<std::pair<std::string, int>>{{"w2", 2}});
  CHECK(e.degree() == 2);
  FormExpression f = parse_form_expression("- w1*w2 - 1/3 * w1^2");
  CHECK(f.terms[0].coeff == -1);
  CHECK(f.terms[1].coeff == Rational(-1, 3));
  CHECK(f.degree() == 2);
  CHECK(parse_form_expression("3").degree() == 0);
  CHECK_THROWS_AS(parse_form_expression(""), InvalidArgument);
  CHECK_THROWS_AS(parse_form_expression("w1 w2"), InvalidArgument);
  CHECK_THROWS_AS(parse_form_expression("w1^"), InvalidArgument);
  CHECK_THROWS_AS(parse_form_expression("w1 + w2^2"), InvalidArgument);
}

TEST_CASE("scenario round trip property") {
  const std::vector<std::string> models{"proj(2,2)", "proj(1,3)", "proj(4)"};
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    Rng rng(Rng::derive_seed(91, trial));
    Scenario s;
    s.model = models[rng.below(models.size())];
    const std::size_t k = *s.model == "proj(4)" ? 1 : 2;
    if (rng.coin()) s.seed = rng.next();
    auto vec = [&](std::size_t n) {
      RationalVector v;
      for (std::size_t i = 0; i < n; ++i) v.push_back(rng.rational(-5, 5, 4));
      return v;
    };
    const int nb = 1 + static_cast<int>(rng.below(3));
    for (int b = 0; b < nb; ++b) {
      BundleSpec spec{"E" + std::to_string(b), {}, {}, std::nullopt};
      if (rng.coin()) {
        spec.random_rank = 1 + static_cast<int>(rng.below(4));
      } else {
        for (std::size_t r = 0, n = 1 + rng.below(4); r < n; ++r) spec.roots.push_back(vec(k));
        if (rng.coin()) spec.twist = vec(k);
      }
      s.bundles.push_back(spec);
    }
    const std::size_t d = 2 + rng.below(3);
    FormSpec diag{"w0", {}, vec(d)};
    s.forms.push_back(diag);
    FormSpec full{"w1", {}, {}};
    full.rows.assign(d, std::vector<GaussianRational>(d));
    for (std::size_t i = 0; i < d; ++i) {
      full.rows[i][i] = GaussianRational(rng.rational(-3, 3, 3));
      for (std::size_t j = i + 1; j < d; ++j) {
        GaussianRational z(rng.rational(-3, 3, 3), rng.rational(-3, 3, 3));
        full.rows[i][j] = z;
        full.rows[j][i] = z.conj();
      }
    }
    s.forms.push_back(full);
    TaskSpec t1{"ring-eval", rng.coin() ? "" : "t" + std::to_string(trial), {}, 0};
    t1.entries = {{"bundle", "E0"}, {"partition", "2,1"}, {"derived", "1"}};
    TaskSpec t2{"hr-check", "", {}, 0};
    t2.entries = {{"reference", "w0"}, {"omega", "w0^2 - 1/2*w0*w1"}};
    TaskSpec t3{"hr-check", "forms-mode", {}, 0};
    t3.entries = {{"reference", "w1"}, {"partition", "1,1"}, {"forms", "w0, w1"}};
    s.tasks = {t1, t2, t3};
    const std::string text = s.to_string();
    CAPTURE(text);
    Scenario back = parse_scenario(text);
    CHECK(back == s);
    CHECK(back.to_string() == text);
  }
}

TEST_CASE("schur subcommand") {
  CHECK(run({"schur", "2,1", "--rank", "3"}).out == "c1*c2 - c3\n");
  CHECK(run({"schur", "1,1,1", "--rank", "3", "--derived", "2"}).out == "10*c1\n");
  CHECK(run({"schur", "0", "--rank", "5"}).out == "1\n");
  CHECK(run({"--machine", "schur", "2,1", "--rank", "3"}).out == "polynomial=c1*c2 - c3\n");
  Run bad = run({"schur", "4", "--rank", "3"});
  CHECK(bad.code == kExitValidation);
  CHECK(bad.out.empty());
  CHECK(run({"schur", "2,x", "--rank", "3"}).code == kExitValidation);
  CHECK(run({"schur", "2,1"}).code == kExitValidation);
}

TEST_CASE("hr-check on the omega family") {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"0", "inertia=(1,0,15) hr=true"},      {"7/2", "inertia=(2,0,14) hr=false"},
      {"13/4", "inertia=(2,0,14) hr=false"},  {"49/12", "hl=false"},
      {"3", "hl=false"},                       {"9/2", "inertia=(1,0,15) hr=true"}};
  for (const auto& [a, fragment] : expected) {
    CAPTURE(a);
    Run r = run({"hr-check", write_temp("omega.scn", omega_task(a))});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find(fragment) != std::string::npos);
  }
  Run file = run({"hr-check", scenario_path("omega_family.scn")});
  CHECK(file.code == kExitOk);
  CHECK(file.out.find("hr-check a7/2: inertia=(2,0,14) hr=false") != std::string::npos);
}

TEST_CASE("hr-check forms mode with a Schur form and ring mode") {
  Run r = run({"hr-check", write_temp("schur_form.scn", kOmegaFamily + R"(
[hr-check s11]
reference = w1
partition = 1,1
forms = w1, w2
)")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("hr-check s11: inertia=(1,0,15) hr=true hl=true") != std::string::npos);

  Run ring = run({"hr-check", write_temp("ring.scn", R"(model = proj(2,2)
[bundle E]
roots = 1,1; 2,1; 1,2
[hr-check]
bundle = E
partition = 2
)")});
  CHECK(ring.code == kExitOk);
  CHECK(ring.out.find("inertia=(1,0,1) hr=true") != std::string::npos);
}

TEST_CASE("hr-check exit codes") {
  Run non_kahler = run({"hr-check", write_temp("nk.scn", R"([form w]
diagonal = 1, -1, 1
[hr-check]
reference = w
omega = w
)")});
  CHECK(non_kahler.code == kExitPrecondition);
  CHECK(non_kahler.out.empty());
  CHECK(non_kahler.err.find("Kahler") != std::string::npos);

  Run wrong_degree = run({"hr-check", write_temp("deg.scn", kOmegaFamily + "[hr-check]\nreference = w1\nomega = w1\n")});
  CHECK(wrong_degree.code == kExitValidation);

  // A failing second task leaves no output from the first.
  Run partial = run({"hr-check", write_temp("partial.scn", R"([form w]
diagonal = 1, 1, 1
[form bad]
diagonal = 1, 0, 1
[hr-check ok]
reference = w
omega = w
[hr-check fails]
reference = bad
omega = w
)")});
  CHECK(partial.code == kExitPrecondition);
  CHECK(partial.out.empty());

  Run parse = run({"hr-check", write_temp("parse.scn", "[form w]\ndiagonal = 1\ncolour = 3\n")});
  CHECK(parse.code == kExitValidation);
  CHECK(parse.err.find("line 3, column 1") != std::string::npos);
  CHECK(run({"hr-check", "/nonexistent/file.scn"}).code == kExitValidation);
  CHECK(run({"ring-eval", write_temp("empty.scn", kOmegaFamily)}).code == kExitValidation);
}

TEST_CASE("nef2 subcommand") {
  CHECK(run({"nef2", "0", "8", "0", "0", "0", "3"}).out == "member=true boundary=true\n");
  Run above = run({"nef2", "0", "8", "0", "0", "0", "4"});
  CHECK(above.code == kExitOk);
  CHECK(above.out == "member=false failed=[quartic]\n");
  CHECK(run({"nef2", "0", "8", "0", "0", "0", "-2"}).out == "member=true boundary=true\n");
  CHECK(run({"nef2", "0", "8", "0", "0", "0", "-201/100"}).out.find("member=false") == 0);
  CHECK(run({"nef2", "--", "-1", "8", "0", "0", "0", "0"}).out.find("failed=[a1>=0&a3>=0") != std::string::npos);
  CHECK(run({"nef2", "-1", "8", "0", "0", "0", "0"}).out ==
        "member=false failed=[a1>=0&a3>=0,4*a1*(a2-a6)>=a4^2,quartic]\n");
  CHECK(run({"nef2", "1", "2"}).code == kExitValidation);
  CHECK(run({"nef2", "1", "2", "3", "4", "5", "0.5"}).code == kExitValidation);
  Run machine = run({"--machine", "nef2", "0", "8", "0", "0", "0", "3"});
  CHECK(machine.out.find("member=true\nboundary=true\n") == 0);
  CHECK(machine.out.find("condition[quartic]=holds,tight\n") != std::string::npos);
}

TEST_CASE("logconcave, hi2 and ring-eval on a scenario file") {
  const std::string path = scenario_path("proj22_random.scn");
  Run lc = run({"logconcave", path});
  CHECK(lc.code == kExitOk);
  CHECK(lc.out.find("strict=true") != std::string::npos);
  CHECK(lc.out.find("strict=false") == std::string::npos);
  CHECK(lc.out.find("f(4) = ") != std::string::npos);
  Run hi2 = run({"hi2", path});
  CHECK(hi2.code == kExitOk);
  CHECK(hi2.out.find("holds=true") != std::string::npos);
  Run ring = run({"ring-eval", path});
  CHECK(ring.code == kExitOk);
  CHECK(ring.out.find("ring-eval F-s21: grade=3") != std::string::npos);
}

TEST_CASE("ring-eval agrees with the schur subcommand on a direct computation") {
  // O(1)+O(2) on P2: c1 = 3x and c2 = 2x^2.
  Run r = run({"ring-eval", write_temp("p2.scn", R"(model = proj(2)
[bundle E]
roots = 1; 2
[ring-eval c2]
bundle = E
partition = 2
[ring-eval c1]
bundle = E
partition = 1
h = 1
)")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "ring-eval c2: grade=2 class=2*x1^2 integral=2\nring-eval c1: grade=1 class=3*x1 integral=3\n");
}

TEST_CASE("machine output is byte-identical for a fixed seed") {
  const std::string path = scenario_path("proj22_random.scn");
  for (const char* cmd : {"logconcave", "hi2", "ring-eval", "hr-check"}) {
    Run a = run({"--machine", "--seed", "77", cmd, path});
    Run b = run({"--machine", "--seed", "77", cmd, path});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
  Run seeded = run({"--machine", "--seed", "77", "logconcave", path});
  Run other = run({"--machine", "--seed", "78", "logconcave", path});
  CHECK(seeded.out != other.out);
  CHECK(run({"--machine", "logconcave", path}).out == run({"--machine", "logconcave", path}).out);
}

TEST_CASE("hl-scan") {
  Run r = run({"hl-scan"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("det_r_sign=-1 det_s_sign=1") == 0);
  CHECK(r.out.find("root=(") != std::string::npos);
  Run m = run({"--machine", "hl-scan", "--width", "1/1000"});
  CHECK(m.out.find("\nroot=(") != std::string::npos);
  CHECK(run({"hl-scan", "--width", "0"}).code == kExitValidation);
}

TEST_CASE("fixed example suite") {
  Run all = run({"paper-repro"});
  CHECK(all.code == kExitOk);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out.find("failed=[]") != std::string::npos);

  Run mutated = run({"paper-repro", "--abelian-integrals", "5,-4,24"});
  CHECK(mutated.code == kExitReproFailure);
  CHECK(mutated.out.find("FAIL abelian-mu-gram") != std::string::npos);
  CHECK(mutated.out.find("PASS omega-family-signature-1-15") != std::string::npos);

  Run list = run({"paper-repro", "--list"});
  CHECK(list.code == kExitOk);
  for (const auto& c : repro_cases()) CHECK(list.out.find(c.id + "  ") != std::string::npos);
}
