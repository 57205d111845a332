#include "schurhr/ring_model.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "schurhr/schur.hpp"
#include "schurhr/symmetric.hpp"

namespace schurhr {

namespace {

std::vector<Monomial> enumerate_monomials(const std::vector<int>& caps, int grade) {
  std::vector<Monomial> out;
  Monomial current(caps.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
    if (pos + 1 == caps.size()) {
      if (remaining <= caps[pos]) {
        current[pos] = remaining;
        out.push_back(current);
      }
      return;
    }
    for (int e = std::min(remaining, caps[pos]); e >= 0; --e) {
      current[pos] = e;
      rec(pos + 1, remaining - e);
    }
  };
  if (!caps.empty()) rec(0, grade);
  return out;
}

}  // namespace

RingModel::RingModel(Kind kind, std::vector<int> dims, AbelianIntegrals integrals)
    : kind_(kind), dims_(std::move(dims)), integrals_(std::move(integrals)) {
  if (kind_ == Kind::ProjProduct) {
    dimension_ = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      dimension_ += dims_[i];
      generator_names_.push_back("x" + std::to_string(i + 1));
    }
  } else {
    dimension_ = 4;
    generator_names_ = {"theta1", "theta2", "lambdaP"};
  }
  for (int g = 0; g <= dimension_; ++g) {
    bases_.push_back(enumerate_monomials(dims_, g));
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < bases_.back().size(); ++i) idx.emplace(bases_.back()[i], i);
    index_.push_back(std::move(idx));
  }
}

ModelPtr RingModel::proj_product(std::vector<int> dims) {
  if (dims.empty()) throw InvalidArgument("proj model needs at least one factor");
  for (int n : dims)
    if (n < 1) throw InvalidArgument("proj model factor dimensions must be positive");
  return ModelPtr(new RingModel(Kind::ProjProduct, std::move(dims), AbelianIntegrals{}));
}

ModelPtr RingModel::abelian_square(AbelianIntegrals integrals) {
  return ModelPtr(new RingModel(Kind::AbelianSquare, {4, 4, 4}, std::move(integrals)));
}

ModelPtr RingModel::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "abelian_square") return abelian_square();
  if (text.starts_with("proj(") && text.ends_with(")")) {
    std::string_view inner = text.substr(5, text.size() - 6);
    std::vector<int> dims;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = inner.find(',', pos);
      std::string_view item = inner.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      int n = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), n);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw InvalidArgument("bad model '" + std::string(text) + "'");
      }
      dims.push_back(n);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return proj_product(std::move(dims));
  }
  throw InvalidArgument("unknown model '" + std::string(text) + "' (expected proj(n1,...) or abelian_square)");
}

const std::vector<Monomial>& RingModel::basis(int grade) const {
  if (grade < 0 || grade > dimension_) throw InvalidArgument("basis: grade out of range");
  return bases_[static_cast<std::size_t>(grade)];
}

std::optional<std::size_t> RingModel::index_of(int grade, const Monomial& m) const {
  if (grade < 0 || grade > dimension_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(grade)];
  auto it = idx.find(m);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

Rational RingModel::integral(const Monomial& m) const {
  int deg = 0;
  for (int e : m) deg += e;
  if (deg != dimension_) throw InvalidArgument("integral of a non-top monomial");
  if (kind_ == Kind::ProjProduct) return m == dims_ ? Rational(1) : Rational(0);
  if (m == Monomial{2, 2, 0}) return integrals_.theta1sq_theta2sq;
  if (m == Monomial{1, 1, 2}) return integrals_.theta1_theta2_lambdasq;
  if (m == Monomial{0, 0, 4}) return integrals_.lambda4;
  return Rational(0);
}

std::string RingModel::name() const {
  if (kind_ == Kind::AbelianSquare) return "abelian_square";
  std::string out = "proj(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dims_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

GradedClass::GradedClass(ModelPtr model, int grade) : model_(std::move(model)), grade_(grade) {
  if (!model_) throw InvalidArgument("GradedClass: null model");
  if (grade < 0) throw InvalidArgument("GradedClass: negative grade");
  if (grade <= model_->dimension()) coeffs_.assign(model_->basis(grade).size(), Rational(0));
}

GradedClass GradedClass::one(ModelPtr model) {
  GradedClass c(std::move(model), 0);
  c.coeffs_[0] = 1;
  return c;
}

GradedClass GradedClass::generator(ModelPtr model, int index) {
  if (index < 0 || index >= model->generator_count()) throw InvalidArgument("generator index out of range");
  Monomial m(static_cast<std::size_t>(model->generator_count()), 0);
  m[static_cast<std::size_t>(index)] = 1;
  return monomial(std::move(model), m);
}

GradedClass GradedClass::linear(ModelPtr model, std::span<const Rational> coeffs) {
  if (static_cast<int>(coeffs.size()) != model->generator_count()) {
    throw InvalidArgument("degree-1 class needs " + std::to_string(model->generator_count()) + " coefficients, got " +
                          std::to_string(coeffs.size()));
  }
  GradedClass c(model, 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c += coeffs[i] * generator(model, static_cast<int>(i));
  return c;
}

GradedClass GradedClass::monomial(ModelPtr model, const Monomial& m, const Rational& coeff) {
  if (static_cast<int>(m.size()) != model->generator_count()) throw InvalidArgument("monomial arity mismatch");
  int deg = 0;
  for (int e : m) {
    if (e < 0) throw InvalidArgument("negative exponent");
    deg += e;
  }
  GradedClass c(model, deg);
  if (auto idx = model->index_of(deg, m)) c.coeffs_[*idx] = coeff;
  return c;
}

bool GradedClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

Rational GradedClass::integrate() const {
  if (grade_ != model_->dimension()) {
    throw InvalidArgument("integrate: class has grade " + std::to_string(grade_) + ", expected " +
                          std::to_string(model_->dimension()));
  }
  Rational acc(0);
  const auto& basis = model_->basis(grade_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) acc += coeffs_[i] * model_->integral(basis[i]);
  return acc;
}

GradedClass GradedClass::pow(int k) const {
  if (k < 0) throw InvalidArgument("negative power");
  GradedClass out = one(model_);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

void GradedClass::check_same(const GradedClass& other, const char* op) const {
  if (model_ != other.model_ && !(*model_ == *other.model_)) {
    throw ModelMismatch(std::string(op) + ": classes from different models");
  }
  if (grade_ != other.grade_) {
    throw InvalidArgument(std::string(op) + ": mixed grades " + std::to_string(grade_) + " and " +
                          std::to_string(other.grade_));
  }
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  check_same(other, "sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) {
  check_same(other, "difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  if (a.model_ != b.model_ && !(*a.model_ == *b.model_)) throw ModelMismatch("product: classes from different models");
  GradedClass out(a.model_, a.grade_ + b.grade_);
  if (out.coeffs_.empty()) return out;
  const auto& ba = a.model_->basis(a.grade_);
  const auto& bb = a.model_->basis(b.grade_);
  Monomial m(ba.empty() ? 0 : ba.front().size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = ba[i][v] + bb[j][v];
      if (auto idx = a.model_->index_of(out.grade_, m)) out.coeffs_[*idx] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

GradedClass operator*(const Rational& s, GradedClass a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  if (a.grade_ != b.grade_) return false;
  if (a.model_ != b.model_ && !(*a.model_ == *b.model_)) return false;
  return a.coeffs_ == b.coeffs_;
}

std::string GradedClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (grade_ <= model_->dimension()) {
    const auto& basis = model_->basis(grade_);
    const auto& names = model_->generator_names();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      bool negative = c < 0;
      Rational mag = negative ? Rational(-c) : c;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      std::string body;
      for (std::size_t v = 0; v < basis[i].size(); ++v) {
        int e = basis[i][v];
        if (e == 0) continue;
        if (!body.empty()) body += '*';
        body += names[v];
        if (e > 1) body += '^' + std::to_string(e);
      }
      if (body.empty()) os << mag.get_str();
      else if (mag == 1) os << body;
      else os << mag.get_str() << '*' << body;
    }
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

SplitBundle::SplitBundle(ModelPtr model, std::vector<GradedClass> roots, std::optional<GradedClass> twist)
    : model_(std::move(model)), roots_(std::move(roots)), twist_(twist ? *twist : GradedClass(model_, 1)) {
  if (roots_.empty()) throw InvalidArgument("split bundle needs at least one root");
  for (const auto& r : roots_) {
    if (!(*r.model() == *model_)) throw ModelMismatch("bundle root from a different model");
    if (r.grade() != 1) throw InvalidArgument("bundle roots must have degree 1");
  }
  if (!(*twist_.model() == *model_)) throw ModelMismatch("twist from a different model");
  if (twist_.grade() != 1) throw InvalidArgument("twist must have degree 1");
}

SplitBundle SplitBundle::from_coefficients(ModelPtr model, const std::vector<RationalVector>& roots,
                                           const RationalVector& twist) {
  std::vector<GradedClass> classes;
  for (const auto& r : roots) classes.push_back(GradedClass::linear(model, r));
  std::optional<GradedClass> t;
  if (!twist.empty()) t = GradedClass::linear(model, twist);
  return SplitBundle(model, std::move(classes), std::move(t));
}

std::vector<GradedClass> SplitBundle::shifted_roots() const {
  std::vector<GradedClass> out;
  for (const auto& r : roots_) out.push_back(r + twist_);
  return out;
}

SplitBundle SplitBundle::twisted(const GradedClass& delta) const { return SplitBundle(model_, roots_, twist_ + delta); }

std::vector<GradedClass> SplitBundle::chern_classes() const {
  auto shifted = shifted_roots();
  return elementary_symmetric<GradedClass>(
      shifted, [&](std::size_t k) { return GradedClass(model_, static_cast<int>(k)); }, GradedClass::one(model_));
}

GradedClass SplitBundle::chern(int p) const {
  if (p < 0 || p > rank()) {
    throw InvalidArgument("chern: degree " + std::to_string(p) + " outside [0, " + std::to_string(rank()) + "]");
  }
  return chern_classes()[static_cast<std::size_t>(p)];
}

GradedClass SplitBundle::evaluate(const ChernPoly& p, std::span<const GradedClass> twist_values) const {
  if (p.rank() != rank()) throw InvalidArgument("evaluate: polynomial rank does not match bundle rank");
  if (static_cast<int>(twist_values.size()) != p.twist_vars()) {
    throw InvalidArgument("evaluate: wrong number of twist values");
  }
  auto cs = chern_classes();
  int g = p.grade().value_or(0);
  return p.evaluate<GradedClass>([&](int k) { return cs[static_cast<std::size_t>(k)]; },
                                 [&](int j) { return twist_values[static_cast<std::size_t>(j)]; },
                                 GradedClass(model_, g), GradedClass::one(model_));
}

GradedClass SplitBundle::schur_class(const Partition& lambda) const {
  ChernPoly p = schur(lambda, rank());
  if (p.is_zero()) return GradedClass(model_, lambda.weight());
  return evaluate(p);
}

GradedClass SplitBundle::derived_schur_class(const Partition& mu, int order) const {
  ChernPoly p = derived_schur(mu, rank(), order);
  if (p.is_zero()) return GradedClass(model_, mu.weight() - order);
  return evaluate(p);
}

std::optional<bool> is_ample_class(const GradedClass& h) {
  if (h.model()->kind() != RingModel::Kind::ProjProduct) return std::nullopt;
  if (h.grade() != 1) return false;
  return std::all_of(h.coefficients().begin(), h.coefficients().end(), [](const Rational& q) { return q > 0; });
}

std::optional<bool> SplitBundle::ample_by_criterion() const {
  if (model_->kind() != RingModel::Kind::ProjProduct) return std::nullopt;
  for (const auto& r : shifted_roots())
    if (!*is_ample_class(r)) return false;
  return true;
}

RationalMatrix gram_on_basis(const GradedClass& omega, std::span<const GradedClass> basis) {
  const std::size_t n = basis.size();
  RationalMatrix m(n, n, Rational(0));
  std::vector<GradedClass> left;
  left.reserve(n);
  for (const auto& b : basis) left.push_back(b * omega);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = (left[i] * basis[j]).integrate();
      m(j, i) = m(i, j);
    }
  return m;
}

RationalMatrix intersection_gram(const GradedClass& omega, int degree) {
  const int d = omega.model()->dimension();
  if (degree < 0 || omega.grade() + 2 * degree != d) {
    throw InvalidArgument("intersection_gram: class of grade " + std::to_string(omega.grade()) +
                          " cannot pair degree-" + std::to_string(degree) + " classes in dimension " +
                          std::to_string(d));
  }
  std::vector<GradedClass> basis;
  for (const auto& m : omega.model()->basis(degree)) basis.push_back(GradedClass::monomial(omega.model(), m));
  return gram_on_basis(omega, basis);
}

RationalMatrix gram_on_h11(const GradedClass& omega) { return intersection_gram(omega, 1); }

}  // namespace schurhr
