#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurhr/errors.hpp"
#include "schurhr/forms.hpp"
#include "schurhr/matrix.hpp"

namespace schurhr {

/// Parse failure with a 1-based source position.
class ScenarioError : public InvalidArgument {
 public:
  ScenarioError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct BundleSpec {
  std::string name;
  /// Chern roots as coefficient vectors on the model generators.
  std::vector<RationalVector> roots;
  RationalVector twist;
  /// If set, roots are drawn from the scenario seed instead.
  std::optional<int> random_rank;
  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

struct FormSpec {
  std::string name;
  /// Exactly one of rows / diagonal is nonempty.
  std::vector<std::vector<GaussianRational>> rows;
  std::vector<Rational> diagonal;
  HermitianOneOne to_hermitian() const;
  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

struct TaskEntry {
  std::string key;
  std::string value;
  int line = 0;
  int column = 0;
  friend bool operator==(const TaskEntry& a, const TaskEntry& b) { return a.key == b.key && a.value == b.value; }
};

/// One task section. Keys are validated against the task kind at parse time.
struct TaskSpec {
  std::string kind;  // ring-eval, hr-check, logconcave, hi2
  std::string label;
  std::vector<TaskEntry> entries;
  int line = 0;
  const TaskEntry* find(std::string_view key) const;
  friend bool operator==(const TaskSpec& a, const TaskSpec& b) {
    return a.kind == b.kind && a.label == b.label && a.entries == b.entries;
  }
};

struct Scenario {
  std::optional<std::string> model;
  std::optional<std::uint64_t> seed;
  std::vector<BundleSpec> bundles;
  std::vector<FormSpec> forms;
  std::vector<TaskSpec> tasks;

  /// Canonical text; parse(to_string()) reproduces the scenario.
  std::string to_string() const;
  const BundleSpec* bundle(std::string_view name) const;
  const FormSpec* form(std::string_view name) const;
  friend bool operator==(const Scenario& a, const Scenario& b) {
    return a.model == b.model && a.seed == b.seed && a.bundles == b.bundles && a.forms == b.forms &&
           a.tasks == b.tasks;
  }
};

/// Throws ScenarioError on any syntax, unknown-key or reference error.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

/// "1,0; 2,1" -> {{1,0},{2,1}}.
std::vector<RationalVector> parse_vector_list(std::string_view text);
/// "1, -1/2, 3" -> {1, -1/2, 3}.
RationalVector parse_vector(std::string_view text);

/// Linear combination of wedge monomials in named (1,1)-forms, e.g.
/// "w1^2 + 7/2*w2^2" or "w1*w2 - 1/3*w1^2".
struct FormExpression {
  struct Term {
    Rational coeff;
    std::vector<std::pair<std::string, int>> factors;
  };
  std::vector<Term> terms;
  /// Common wedge degree of all terms.
  int degree() const;
};
FormExpression parse_form_expression(std::string_view text);

}  // namespace schurhr
