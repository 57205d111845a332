#include "schurhr/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schurhr/certify.hpp"
#include "schurhr/forms.hpp"
#include "schurhr/generators.hpp"
#include "schurhr/repro.hpp"
#include "schurhr/scenario.hpp"
#include "schurhr/schur.hpp"

namespace schurhr {
namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

std::string bracket_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out + "]";
}

/// Accumulates key=value fields; prints them on one line for people or one
/// per line with --machine.
class Report {
 public:
  explicit Report(bool machine) : machine_(machine) {}

  void begin(const std::string& kind, const std::string& label) {
    if (machine_) {
      out_ << "task=" << kind << "\nlabel=" << label << "\n";
    } else {
      out_ << kind << " " << label << ":";
      space_ = true;
    }
    in_task_ = true;
  }

  void field(const std::string& key, const std::string& value) {
    if (machine_) {
      out_ << key << "=" << value << "\n";
      return;
    }
    out_ << (space_ ? " " : "") << key << "=" << value;
    space_ = true;
  }

  /// Starts an indented human-only line (tables); ignored with --machine.
  void note(const std::string& text) {
    if (machine_) return;
    out_ << "\n  " << text;
    space_ = !text.empty();
  }

  void end() {
    if (!machine_ || in_task_) out_ << "\n";
    in_task_ = false;
    space_ = false;
  }

  void raw(const std::string& line) { out_ << line << "\n"; }
  bool machine() const { return machine_; }
  std::string str() const { return out_.str(); }

 private:
  bool machine_;
  bool in_task_ = false;
  bool space_ = false;
  std::ostringstream out_;
};

struct Globals {
  bool machine = false;
  std::optional<std::uint64_t> seed;
};

/// Scenario resolved against its model: bundles are materialised once, in
/// declaration order, before any task runs.
class Workspace {
 public:
  Workspace(Scenario s, const Globals& g) : s_(std::move(s)) {
    if (s_.model) model_ = RingModel::parse(*s_.model);
    seed_ = g.seed ? *g.seed : s_.seed.value_or(0);
    for (std::size_t i = 0; i < s_.bundles.size(); ++i) {
      const BundleSpec& b = s_.bundles[i];
      if (b.random_rank) {
        Rng rng(Rng::derive_seed(seed_, i));
        bundles_.push_back(gen::ample_split_bundle(rng, model_, *b.random_rank));
      } else {
        bundles_.push_back(SplitBundle::from_coefficients(model_, b.roots, b.twist));
      }
    }
  }

  const Scenario& scenario() const { return s_; }
  const ModelPtr& model() const { return model_; }

  const SplitBundle& bundle(const std::string& name) const {
    for (std::size_t i = 0; i < s_.bundles.size(); ++i)
      if (s_.bundles[i].name == name) return bundles_[i];
    throw InvalidArgument("unknown bundle '" + name + "'");
  }

  HermitianOneOne form(const std::string& name) const {
    const FormSpec* f = s_.form(name);
    if (!f) throw InvalidArgument("unknown form '" + name + "'");
    return f->to_hermitian();
  }

  GradedClass degree_one(const TaskEntry* entry) const {
    if (entry) {
      RationalVector v = parse_vector(entry->value);
      return GradedClass::linear(model_, v);
    }
    if (model_->kind() != RingModel::Kind::ProjProduct)
      throw InvalidArgument("'h' is required on models other than proj(...)");
    return GradedClass::linear(model_, RationalVector(static_cast<std::size_t>(model_->generator_count()), Rational(1)));
  }

  std::vector<std::pair<std::string, const TaskSpec*>> tasks_of(const std::string& kind) const {
    std::vector<std::pair<std::string, const TaskSpec*>> out;
    for (std::size_t i = 0; i < s_.tasks.size(); ++i) {
      const TaskSpec& t = s_.tasks[i];
      if (t.kind != kind) continue;
      out.emplace_back(t.label.empty() ? kind + "-" + std::to_string(i + 1) : t.label, &t);
    }
    if (out.empty()) throw InvalidArgument("scenario has no [" + kind + "] sections");
    return out;
  }

 private:
  Scenario s_;
  ModelPtr model_;
  std::uint64_t seed_ = 0;
  std::vector<SplitBundle> bundles_;
};

std::string interval_string(const RootInterval& r) {
  return "(" + to_string(r.lower) + "," + to_string(r.upper) + "]";
}

// ---- subcommands --------------------------------------------------------

void cmd_schur(Report& r, const std::string& partition, int rank, std::optional<int> derived) {
  Partition lambda = Partition::parse(partition);
  ChernPoly p = derived ? derived_schur(lambda, rank, *derived) : schur(lambda, rank);
  if (r.machine()) {
    r.field("polynomial", p.to_string());
  } else {
    r.raw(p.to_string());
  }
}

void cmd_ring_eval(Report& r, const Workspace& ws) {
  for (const auto& [label, t] : ws.tasks_of("ring-eval")) {
    const SplitBundle& e = ws.bundle(t->find("bundle")->value);
    Partition lambda = Partition::parse(t->find("partition")->value);
    const TaskEntry* derived = t->find("derived");
    GradedClass c = derived ? e.derived_schur_class(lambda, std::stoi(derived->value)) : e.schur_class(lambda);
    const int d = ws.model()->dimension();
    r.begin("ring-eval", label);
    r.field("grade", std::to_string(c.grade()));
    r.field("class", c.to_string());
    if (c.grade() == d) {
      r.field("integral", to_string(c.integrate()));
    } else if (c.grade() < d && t->find("h")) {
      GradedClass h = ws.degree_one(t->find("h"));
      r.field("integral", to_string((c * h.pow(d - c.grade())).integrate()));
    }
    r.end();
  }
}

PQForm evaluate_expression(const Workspace& ws, const FormExpression& expr, int d) {
  PQForm total(d, expr.degree(), expr.degree());
  for (const auto& term : expr.terms) {
    PQForm prod = PQForm::one(d);
    for (const auto& [name, power] : term.factors) {
      HermitianOneOne w = ws.form(name);
      if (w.dimension() != d) throw InvalidArgument("form '" + name + "' has the wrong dimension");
      prod = prod * wedge_power(w.to_form(), power);
    }
    total += term.coeff * prod;
  }
  return total;
}

void report_inertia(Report& r, const InertiaReport& v) {
  r.field("inertia", v.signature.to_string());
  r.field("hr", flag(v.hr));
  r.field("hl", flag(v.hl));
  r.field("positivity", to_string(v.positivity));
  r.field("det_sign", std::to_string(v.det_sign));
}

void cmd_hr_check(Report& r, const Workspace& ws) {
  std::vector<std::pair<std::string, InertiaReport>> results;
  for (const auto& [label, t] : ws.tasks_of("hr-check")) {
    if (const TaskEntry* ref = t->find("reference")) {
      HermitianOneOne reference = ws.form(ref->value);
      const int d = reference.dimension();
      PQForm omega(d, 0, 0);
      if (const TaskEntry* expr = t->find("omega")) {
        omega = evaluate_expression(ws, parse_form_expression(expr->value), d);
      } else {
        std::vector<HermitianOneOne> omegas;
        std::istringstream names(t->find("forms")->value);
        for (std::string name; std::getline(names, name, ',');) {
          name.erase(0, name.find_first_not_of(' '));
          name.erase(name.find_last_not_of(' ') + 1);
          omegas.push_back(ws.form(name));
          if (omegas.back().dimension() != d) throw InvalidArgument("form '" + name + "' has the wrong dimension");
        }
        omega = schur_form(Partition::parse(t->find("partition")->value), omegas);
      }
      if (omega.p() != d - 2 || omega.q() != d - 2)
        throw InvalidArgument("hr-check needs a form of bidegree (d-2,d-2), got (" + std::to_string(omega.p()) + "," +
                              std::to_string(omega.q()) + ")");
      results.emplace_back(label, hodge_riemann_verdict(omega, reference));
    } else {
      const SplitBundle& e = ws.bundle(t->find("bundle")->value);
      GradedClass c = e.schur_class(Partition::parse(t->find("partition")->value));
      results.emplace_back(label, ring_hodge_riemann(c, ws.degree_one(t->find("h"))));
    }
  }
  for (const auto& [label, v] : results) {
    r.begin("hr-check", label);
    report_inertia(r, v);
    r.end();
  }
}

void cmd_logconcave(Report& r, const Workspace& ws) {
  std::vector<std::pair<std::string, SchurLogConcavityReport>> results;
  for (const auto& [label, t] : ws.tasks_of("logconcave")) {
    const SplitBundle& e = ws.bundle(t->find("bundle")->value);
    const TaskEntry* mu = t->find("partition");
    Partition p = mu ? Partition::parse(mu->value) : Partition::row(e.rank());
    results.emplace_back(label, schur_logconcavity_report(e, p, ws.degree_one(t->find("h"))));
  }
  for (const auto& [label, rep] : results) {
    r.begin("logconcave", label);
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
      if (r.machine()) {
        r.field("f" + std::to_string(i), to_string(rep.values[i]));
      } else {
        r.note("f(" + std::to_string(i) + ") = " + to_string(rep.values[i]));
      }
    }
    r.note("");
    r.field("strict", flag(rep.strict()));
    r.field("midpoint", flag(rep.result.midpoint));
    r.field("chord", flag(rep.result.chord));
    r.end();
  }
}

void cmd_hi2(Report& r, const Workspace& ws) {
  std::vector<std::pair<std::string, Hi2Result>> results;
  for (const auto& [label, t] : ws.tasks_of("hi2")) {
    const SplitBundle& e = ws.bundle(t->find("bundle")->value);
    results.emplace_back(label, hi2_check(e, ws.degree_one(t->find("h")), ws.degree_one(t->find("alpha"))));
  }
  for (const auto& [label, res] : results) {
    r.begin("hi2", label);
    r.field("holds", flag(res.holds));
    r.field("equality", flag(res.equality));
    r.field("lhs", to_string(res.lhs));
    r.field("rhs", to_string(res.rhs));
    r.field("alpha_zero", flag(res.alpha_zero));
    r.end();
  }
}

void cmd_nef2(Report& r, const std::vector<std::string>& args) {
  if (args.size() != 6) throw InvalidArgument("nef2 needs exactly six coefficients a1..a6");
  Nef2Coefficients c;
  for (std::size_t i = 0; i < 6; ++i) c.a[i] = parse_rational(args[i]);
  Nef2Verdict v = nef2_membership(c);
  r.field("member", flag(v.member));
  if (v.member) {
    r.field("boundary", flag(v.boundary));
  } else {
    r.field("failed", bracket_list(v.failed()));
  }
  if (r.machine()) {
    for (const auto& cond : v.conditions) {
      r.field("condition[" + cond.name + "]", std::string(cond.holds ? "holds" : "fails") + (cond.tight ? ",tight" : ""));
    }
    r.field("quartic", v.quartic.to_string("b"));
  }
  r.end();
}

void cmd_hl_scan(Report& r, const std::string& width) {
  Rational w = parse_rational(width);
  if (w <= 0) throw InvalidArgument("--width must be positive");
  HlScanResult res = hl_failure_scan(three_plane_chern_family(), w);
  r.field("det_r_sign", std::to_string(res.det_r_sign));
  r.field("det_s_sign", std::to_string(res.det_s_sign));
  r.field("det_q", res.det_q.to_string("t"));
  if (res.first_positive_root) {
    r.field("root", interval_string(*res.first_positive_root));
    r.field("width", to_string(res.first_positive_root->width()));
  } else {
    r.field("root", "none");
  }
  r.end();
}

int cmd_paper_repro(Report& r, bool list, const std::string& integrals) {
  if (list) {
    for (const auto& c : repro_cases()) {
      if (r.machine()) {
        r.raw(c.id + "=" + c.description);
      } else {
        r.raw(c.id + "  " + c.description);
      }
    }
    return kExitOk;
  }
  ReproOptions options;
  if (!integrals.empty()) {
    RationalVector v = parse_vector(integrals);
    if (v.size() != 3) throw InvalidArgument("--abelian-integrals needs three values");
    options.abelian = {v[0], v[1], v[2]};
  }
  std::vector<std::string> failed;
  std::size_t passed = 0;
  for (const auto& o : run_repro(options)) {
    if (o.passed) {
      ++passed;
    } else {
      failed.push_back(o.id);
    }
    if (r.machine()) {
      r.raw(o.id + "=" + (o.passed ? "pass" : "fail"));
    } else {
      r.raw(std::string(o.passed ? "PASS " : "FAIL ") + o.id + (o.passed ? "" : ": " + o.detail));
    }
  }
  r.field("passed", std::to_string(passed));
  r.field("total", std::to_string(passed + failed.size()));
  r.field("failed", bracket_list(failed));
  r.end();
  return failed.empty() ? kExitOk : kExitReproFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Schur classes, Hodge-Riemann checks and log-concavity certificates", "schurhr"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed_value = 0;
  app.add_flag("--machine", g.machine, "Print key=value lines");
  auto* seed_opt = app.add_option("--seed", seed_value, "Master seed for random bundles (overrides the scenario)");

  std::string partition;
  int rank = 0;
  std::optional<int> derived;
  auto* schur_cmd = app.add_subcommand("schur", "Schur or derived Schur polynomial in c1, c2, ...");
  schur_cmd->add_option("partition", partition, "Partition, e.g. 2,1")->required();
  schur_cmd->add_option("--rank", rank, "Bundle rank e")->required()->check(CLI::Range(0, 16));
  schur_cmd->add_option("--derived", derived, "Derived order i")->check(CLI::NonNegativeNumber);

  std::string scenario_path;
  std::vector<std::pair<std::string, CLI::App*>> scenario_cmds;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"ring-eval", "Evaluate (derived) Schur classes of scenario bundles"},
           {"hr-check", "Signature of the (1,1) pairing of a form or ring class"},
           {"logconcave", "Log-concavity of i -> integral of s_mu^(e-i)(E) h^(d-i)"},
           {"hi2", "Second Hodge-index-type inequality for scenario bundles"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("scenario", scenario_path, "Scenario file")->required();
    scenario_cmds.emplace_back(name, sub);
  }

  std::vector<std::string> nef2_args;
  auto* nef2_cmd = app.add_subcommand("nef2", "Membership of a1..a6 in the codimension-2 nef cone of the abelian square");
  nef2_cmd->add_option("coefficients", nef2_args, "a1 a2 a3 a4 a5 a6 (use -- before negative values)")
      ->expected(6)
      ->required();

  std::string width = "1/1000000";
  auto* hl_cmd = app.add_subcommand("hl-scan", "Hard Lefschetz failure scan of the three-plane Chern family");
  hl_cmd->add_option("--width", width, "Maximal root interval width (rational)");

  bool list = false;
  std::string integrals;
  auto* repro_cmd = app.add_subcommand("paper-repro", "Run the fixed worked examples");
  repro_cmd->add_flag("--list", list, "List example ids and descriptions");
  repro_cmd->add_option("--abelian-integrals", integrals,
                        "Override the abelian square integral table (three values, comma separated)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }
  if (seed_opt->count() > 0) g.seed = seed_value;

  Report report(g.machine);
  int code = kExitOk;
  try {
    if (schur_cmd->parsed()) {
      cmd_schur(report, partition, rank, derived);
    } else if (nef2_cmd->parsed()) {
      cmd_nef2(report, nef2_args);
    } else if (hl_cmd->parsed()) {
      cmd_hl_scan(report, width);
    } else if (repro_cmd->parsed()) {
      code = cmd_paper_repro(report, list, integrals);
    } else {
      for (const auto& [name, sub] : scenario_cmds) {
        if (!sub->parsed()) continue;
        Workspace ws(load_scenario(scenario_path), g);
        if (name == "ring-eval") cmd_ring_eval(report, ws);
        if (name == "hr-check") cmd_hr_check(report, ws);
        if (name == "logconcave") cmd_logconcave(report, ws);
        if (name == "hi2") cmd_hi2(report, ws);
      }
    }
  } catch (const ScenarioError& e) {
    err << scenario_path << ": " << e.what() << "\n";
    return kExitValidation;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  }
  out << report.str();
  if (code == kExitReproFailure) err << "paper-repro: some examples failed\n";
  return code;
}

}  // namespace schurhr
