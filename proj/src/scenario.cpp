#include "schurhr/scenario.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "schurhr/partition.hpp"
#include "schurhr/ring_model.hpp"

namespace schurhr {

ScenarioError::ScenarioError(int line, int column, const std::string& message)
    : InvalidArgument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument("expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::string join(const RationalVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out;
}

struct TaskRule {
  std::set<std::string> allowed;
  std::set<std::string> required;
};

const std::map<std::string, TaskRule>& task_rules() {
  static const std::map<std::string, TaskRule> rules{
      {"ring-eval", {{"bundle", "partition", "derived", "h"}, {"bundle", "partition"}}},
      {"hr-check", {{"reference", "omega", "partition", "forms", "bundle", "h"}, {}}},
      {"logconcave", {{"bundle", "partition", "h"}, {"bundle"}}},
      {"hi2", {{"bundle", "h", "alpha"}, {"bundle", "alpha"}}},
  };
  return rules;
}

enum class SectionKind { Global, Bundle, Form, Task };

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scenario run() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      handle_line(line_no, text_.substr(pos, end - pos));
      pos = end + 1;
    }
    close_section();
    validate_references();
    return std::move(s_);
  }

 private:
  [[noreturn]] void fail(int line, int column, const std::string& msg) { throw ScenarioError(line, column, msg); }

  void handle_line(int line_no, std::string_view raw) {
    std::string_view line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view body = trim(line);
    if (body.empty()) return;
    const int indent = static_cast<int>(line.find(body.front())) + 1;
    if (body.front() == '[') {
      if (body.back() != ']') fail(line_no, indent + static_cast<int>(body.size()) - 1, "expected ']'");
      close_section();
      open_section(line_no, indent, body.substr(1, body.size() - 2));
      return;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, indent, "expected 'key = value'");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view after = line.substr(eq + 1);
    std::string_view value = trim(after);
    int value_col = static_cast<int>(eq) + 2;
    if (!value.empty()) value_col = static_cast<int>(eq + 1 + after.find(value.front())) + 1;
    if (key.empty()) fail(line_no, indent, "missing key");
    if (value.empty()) fail(line_no, value_col, "missing value for '" + std::string(key) + "'");
    handle_entry(line_no, indent, std::string(key), std::string(value), value_col);
  }

  void open_section(int line_no, int column, std::string_view inner) {
    inner = trim(inner);
    std::size_t sp = 0;
    while (sp < inner.size() && !is_space(inner[sp])) ++sp;
    std::string kind(inner.substr(0, sp));
    std::string rest(trim(inner.substr(sp)));
    const int kind_col = column + 1;
    seen_keys_.clear();
    section_line_ = line_no;
    if (kind == "bundle" || kind == "form") {
      if (!is_identifier(rest)) fail(line_no, kind_col, "section '" + kind + "' needs an identifier name");
      if (names_.count(rest) != 0) fail(line_no, kind_col, "name '" + rest + "' is already defined");
      names_.insert(rest);
      if (kind == "bundle") {
        section_ = SectionKind::Bundle;
        s_.bundles.push_back({rest, {}, {}, std::nullopt});
      } else {
        section_ = SectionKind::Form;
        s_.forms.push_back({rest, {}, {}});
      }
      return;
    }
    if (task_rules().count(kind) == 0) fail(line_no, kind_col, "unknown section '" + kind + "'");
    for (char c : rest)
      if (is_space(c) || c == '=' || c == ']')
        fail(line_no, kind_col, "task labels may not contain spaces, '=' or ']'");
    section_ = SectionKind::Task;
    TaskSpec t;
    t.kind = kind;
    t.label = rest;
    t.line = line_no;
    s_.tasks.push_back(std::move(t));
  }

  void handle_entry(int line_no, int key_col, const std::string& key, const std::string& value, int value_col) {
    if (key != "row" && !seen_keys_.insert(key).second) fail(line_no, key_col, "duplicate key '" + key + "'");
    try {
      switch (section_) {
        case SectionKind::Global:
          if (key == "model") {
            model_ = RingModel::parse(value);
            model_line_ = line_no;
            s_.model = model_->name();
          } else if (key == "seed") {
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc() || ptr != value.data() + value.size())
              throw InvalidArgument("seed must be an unsigned 64-bit integer");
            s_.seed = v;
          } else {
            fail(line_no, key_col, "unknown key '" + key + "'");
          }
          return;
        case SectionKind::Bundle: {
          BundleSpec& b = s_.bundles.back();
          if (key == "roots") {
            b.roots = parse_vector_list(value);
            for (const auto& r : b.roots) check_length(r);
          } else if (key == "twist") {
            b.twist = parse_vector(value);
            check_length(b.twist);
          } else if (key == "random_rank") {
            b.random_rank = parse_int(value);
            if (*b.random_rank < 1) throw InvalidArgument("random_rank must be positive");
          } else {
            fail(line_no, key_col, "unknown key '" + key + "' in bundle section");
          }
          return;
        }
        case SectionKind::Form: {
          FormSpec& f = s_.forms.back();
          if (key == "row") {
            std::vector<GaussianRational> row;
            for (auto item : split(value, ',')) row.push_back(GaussianRational::parse(std::string(item)));
            f.rows.push_back(std::move(row));
          } else if (key == "diagonal") {
            f.diagonal = parse_vector(value);
          } else {
            fail(line_no, key_col, "unknown key '" + key + "' in form section");
          }
          return;
        }
        case SectionKind::Task: {
          TaskSpec& t = s_.tasks.back();
          if (task_rules().at(t.kind).allowed.count(key) == 0)
            fail(line_no, key_col, "unknown key '" + key + "' in " + t.kind + " section");
          check_task_value(key, value);
          t.entries.push_back({key, value, line_no, value_col});
          return;
        }
      }
    } catch (const ScenarioError&) {
      throw;
    } catch (const Error& e) {
      fail(line_no, value_col, e.what());
    }
  }

  void check_length(const RationalVector& v) {
    if (!model_) throw InvalidArgument("bundles need a 'model' declared before them");
    if (static_cast<int>(v.size()) != model_->generator_count())
      throw InvalidArgument("expected " + std::to_string(model_->generator_count()) + " coefficients, got " +
                            std::to_string(v.size()));
  }

  void check_task_value(const std::string& key, const std::string& value) {
    if (key == "partition") {
      Partition::parse(value);
    } else if (key == "derived") {
      if (parse_int(value) < 0) throw InvalidArgument("derived order must be nonnegative");
    } else if (key == "h" || key == "alpha") {
      check_length(parse_vector(value));
    } else if (key == "omega") {
      parse_form_expression(value);
    } else if (key == "forms") {
      for (auto name : split(value, ','))
        if (!is_identifier(name)) throw InvalidArgument("expected a list of form names");
    } else if (key == "bundle" || key == "reference") {
      if (!is_identifier(value)) throw InvalidArgument("expected a name");
    }
  }

  void close_section() {
    switch (section_) {
      case SectionKind::Global:
        break;
      case SectionKind::Bundle: {
        const BundleSpec& b = s_.bundles.back();
        if (b.roots.empty() == !b.random_rank.has_value())
          fail(section_line_, 1, "bundle '" + b.name + "' needs exactly one of 'roots' or 'random_rank'");
        if (b.random_rank && !b.twist.empty())
          fail(section_line_, 1, "bundle '" + b.name + "': 'twist' cannot be combined with 'random_rank'");
        break;
      }
      case SectionKind::Form: {
        const FormSpec& f = s_.forms.back();
        if (f.rows.empty() == f.diagonal.empty())
          fail(section_line_, 1, "form '" + f.name + "' needs either 'row' lines or a 'diagonal'");
        try {
          f.to_hermitian();
        } catch (const Error& e) {
          fail(section_line_, 1, "form '" + f.name + "': " + e.what());
        }
        break;
      }
      case SectionKind::Task: {
        const TaskSpec& t = s_.tasks.back();
        for (const auto& req : task_rules().at(t.kind).required)
          if (!t.find(req)) fail(t.line, 1, t.kind + " section is missing '" + req + "'");
        if (t.kind == "hr-check") check_hr_shape(t);
        if (t.kind != "hr-check" || t.find("bundle")) {
          if (!model_) fail(t.line, 1, t.kind + " needs a 'model'");
        }
        break;
      }
    }
    section_ = SectionKind::Global;
  }

  void check_hr_shape(const TaskSpec& t) {
    const bool forms_mode = t.find("reference") != nullptr;
    if (forms_mode) {
      if (t.find("bundle") || t.find("h")) fail(t.line, 1, "hr-check: 'bundle'/'h' cannot be used with 'reference'");
      const bool expr = t.find("omega") != nullptr;
      const bool schur = t.find("partition") || t.find("forms");
      if (expr == schur) fail(t.line, 1, "hr-check needs either 'omega' or 'partition' with 'forms'");
      if (schur && !(t.find("partition") && t.find("forms")))
        fail(t.line, 1, "hr-check needs both 'partition' and 'forms'");
    } else {
      if (!t.find("bundle") || !t.find("partition"))
        fail(t.line, 1, "hr-check needs 'reference' (forms) or 'bundle' and 'partition' (ring model)");
      if (t.find("omega") || t.find("forms")) fail(t.line, 1, "hr-check: 'omega'/'forms' need a 'reference'");
    }
  }

  void validate_references() {
    for (const auto& t : s_.tasks) {
      for (const auto& e : t.entries) {
        if (e.key == "bundle" && !s_.bundle(e.value)) fail(e.line, e.column, "unknown bundle '" + e.value + "'");
        if (e.key == "reference" && !s_.form(e.value)) fail(e.line, e.column, "unknown form '" + e.value + "'");
        if (e.key == "forms")
          for (auto name : split(e.value, ','))
            if (!s_.form(name)) fail(e.line, e.column, "unknown form '" + std::string(name) + "'");
        if (e.key == "omega")
          for (const auto& term : parse_form_expression(e.value).terms)
            for (const auto& [name, power] : term.factors)
              if (!s_.form(name)) fail(e.line, e.column, "unknown form '" + name + "'");
      }
    }
  }

  std::string_view text_;
  Scenario s_;
  SectionKind section_ = SectionKind::Global;
  int section_line_ = 0;
  std::set<std::string> seen_keys_;
  std::set<std::string> names_;
  ModelPtr model_;
  int model_line_ = 0;
};

}  // namespace

HermitianOneOne FormSpec::to_hermitian() const {
  if (!diagonal.empty()) return HermitianOneOne::diagonal(diagonal);
  Matrix<GaussianRational> h(rows.size(), rows.size(), GaussianRational());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != rows.size()) throw InvalidArgument("matrix rows must have as many entries as there are rows");
    for (std::size_t k = 0; k < rows.size(); ++k) h(j, k) = rows[j][k];
  }
  return HermitianOneOne(std::move(h));
}

const TaskEntry* TaskSpec::find(std::string_view key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

const BundleSpec* Scenario::bundle(std::string_view name) const {
  for (const auto& b : bundles)
    if (b.name == name) return &b;
  return nullptr;
}

const FormSpec* Scenario::form(std::string_view name) const {
  for (const auto& f : forms)
    if (f.name == name) return &f;
  return nullptr;
}

std::string Scenario::to_string() const {
  std::ostringstream os;
  if (model) os << "model = " << *model << "\n";
  if (seed) os << "seed = " << *seed << "\n";
  for (const auto& b : bundles) {
    os << "\n[bundle " << b.name << "]\n";
    if (b.random_rank) os << "random_rank = " << *b.random_rank << "\n";
    if (!b.roots.empty()) {
      os << "roots = ";
      for (std::size_t i = 0; i < b.roots.size(); ++i) os << (i ? "; " : "") << join(b.roots[i]);
      os << "\n";
    }
    if (!b.twist.empty()) os << "twist = " << join(b.twist) << "\n";
  }
  for (const auto& f : forms) {
    os << "\n[form " << f.name << "]\n";
    if (!f.diagonal.empty()) os << "diagonal = " << join(f.diagonal) << "\n";
    for (const auto& row : f.rows) {
      os << "row = ";
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i].to_string();
      os << "\n";
    }
  }
  for (const auto& t : tasks) {
    os << "\n[" << t.kind << (t.label.empty() ? "" : " " + t.label) << "]\n";
    for (const auto& e : t.entries) os << e.key << " = " << e.value << "\n";
  }
  return os.str();
}

Scenario parse_scenario(std::string_view text) { return Parser(text).run(); }

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

RationalVector parse_vector(std::string_view text) {
  RationalVector v;
  for (auto item : split(text, ',')) {
    if (item.empty()) throw InvalidArgument("empty entry in list");
    v.push_back(parse_rational(item));
  }
  return v;
}

std::vector<RationalVector> parse_vector_list(std::string_view text) {
  std::vector<RationalVector> out;
  for (auto item : split(text, ';')) out.push_back(parse_vector(item));
  return out;
}

int FormExpression::degree() const {
  int deg = -1;
  for (const auto& t : terms) {
    int d = 0;
    for (const auto& f : t.factors) d += f.second;
    if (deg >= 0 && d != deg) throw InvalidArgument("form expression mixes wedge degrees");
    deg = d;
  }
  return deg < 0 ? 0 : deg;
}

FormExpression parse_form_expression(std::string_view text) {
  FormExpression expr;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw InvalidArgument("form expression at offset " + std::to_string(i + 1) + ": " + msg);
  };
  skip();
  if (i == text.size()) fail("empty expression");
  bool first = true;
  while (i < text.size()) {
    Rational sign(1);
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    FormExpression::Term term{sign, {}};
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
      term.coeff *= parse_rational(text.substr(start, i - start));
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      } else {
        expr.terms.push_back(std::move(term));
        continue;  // a bare constant is a degree-0 term
      }
    }
    while (true) {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (!is_identifier(name)) fail("expected a form name");
      int power = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::size_t ps = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (ps == i) fail("expected an exponent");
        power = parse_int(text.substr(ps, i - ps));
        skip();
      }
      term.factors.emplace_back(std::move(name), power);
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        continue;
      }
      break;
    }
    expr.terms.push_back(std::move(term));
  }
  expr.degree();
  return expr;
}

}  // namespace schurhr
