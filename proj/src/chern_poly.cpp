#include "schurhr/chern_poly.hpp"

#include <algorithm>
#include <sstream>

namespace schurhr {

ChernPoly::ChernPoly(int rank, int twist_vars) : rank_(rank), twist_vars_(twist_vars) {
  if (rank < 0) throw InvalidArgument("ChernPoly: negative rank");
  if (twist_vars < 0) throw InvalidArgument("ChernPoly: negative twist variable count");
}

ChernPoly ChernPoly::constant(int rank, const Rational& value, int twist_vars) {
  ChernPoly p(rank, twist_vars);
  p.add_term(Exponents(static_cast<std::size_t>(rank + twist_vars), 0), value);
  return p;
}

ChernPoly ChernPoly::chern(int rank, int k, int twist_vars) {
  if (k == 0) return constant(rank, Rational(1), twist_vars);
  ChernPoly p(rank, twist_vars);
  if (k < 0 || k > rank) return p;
  Exponents mono(static_cast<std::size_t>(rank + twist_vars), 0);
  mono[static_cast<std::size_t>(k - 1)] = 1;
  p.add_term(mono, Rational(1));
  return p;
}

ChernPoly ChernPoly::twist(int rank, int j, int twist_vars) {
  if (j < 0 || j >= twist_vars) throw InvalidArgument("ChernPoly::twist: variable index out of range");
  ChernPoly p(rank, twist_vars);
  Exponents mono(static_cast<std::size_t>(rank + twist_vars), 0);
  mono[static_cast<std::size_t>(rank + j)] = 1;
  p.add_term(mono, Rational(1));
  return p;
}

Rational ChernPoly::coefficient(const Exponents& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

int ChernPoly::monomial_grade(const Exponents& monomial) const {
  int g = 0;
  for (int v = 0; v < rank_; ++v) g += (v + 1) * monomial[static_cast<std::size_t>(v)];
  for (int j = 0; j < twist_vars_; ++j) g += monomial[static_cast<std::size_t>(rank_ + j)];
  return g;
}

std::optional<int> ChernPoly::grade() const {
  std::optional<int> g;
  for (const auto& [mono, coeff] : terms_) {
    int mg = monomial_grade(mono);
    if (g && *g != mg) throw InvalidArgument("ChernPoly is not homogeneous: " + to_string());
    g = mg;
  }
  return g;
}

bool ChernPoly::is_homogeneous() const {
  std::optional<int> g;
  for (const auto& [mono, coeff] : terms_) {
    int mg = monomial_grade(mono);
    if (g && *g != mg) return false;
    g = mg;
  }
  return true;
}

ChernPoly ChernPoly::twist_coefficient(int j, int power) const {
  if (j < 0 || j >= twist_vars_) throw InvalidArgument("twist_coefficient: variable index out of range");
  ChernPoly out(rank_, twist_vars_ - 1);
  const auto slot = static_cast<std::size_t>(rank_ + j);
  for (const auto& [mono, coeff] : terms_) {
    if (mono[slot] != power) continue;
    Exponents m = mono;
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(slot));
    out.add_term(m, coeff);
  }
  return out;
}

ChernPoly ChernPoly::with_twist_vars(int twist_vars) const {
  ChernPoly out(rank_, twist_vars);
  for (const auto& [mono, coeff] : terms_) {
    Exponents m(static_cast<std::size_t>(rank_ + twist_vars), 0);
    for (int v = 0; v < rank_ + twist_vars_; ++v) {
      int e = mono[static_cast<std::size_t>(v)];
      if (v >= rank_ + twist_vars) {
        if (e != 0) throw InvalidArgument("with_twist_vars: polynomial uses a dropped twist variable");
        continue;
      }
      m[static_cast<std::size_t>(v)] = e;
    }
    out.add_term(m, coeff);
  }
  return out;
}

void ChernPoly::check_compatible(const ChernPoly& other) const {
  if (rank_ != other.rank_ || twist_vars_ != other.twist_vars_) {
    throw InvalidArgument("ChernPoly: incompatible generator sets");
  }
}

void ChernPoly::add_term(const Exponents& monomial, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ChernPoly& ChernPoly::operator+=(const ChernPoly& other) {
  check_compatible(other);
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

ChernPoly& ChernPoly::operator-=(const ChernPoly& other) {
  check_compatible(other);
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, Rational(-coeff));
  return *this;
}

ChernPoly operator*(const ChernPoly& a, const ChernPoly& b) {
  a.check_compatible(b);
  ChernPoly out(a.rank_, a.twist_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ChernPoly::Exponents m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, Rational(ca * cb));
    }
  }
  return out;
}

ChernPoly operator*(const Rational& s, const ChernPoly& a) {
  ChernPoly out(a.rank_, a.twist_vars_);
  if (s == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, Rational(s * c));
  return out;
}

bool operator==(const ChernPoly& a, const ChernPoly& b) {
  return a.rank_ == b.rank_ && a.twist_vars_ == b.twist_vars_ && a.terms_ == b.terms_;
}

std::string ChernPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<int, const Exponents*>> order;
  for (const auto& [mono, coeff] : terms_) order.emplace_back(monomial_grade(mono), &mono);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return *x.second > *y.second;
  });

  auto var_name = [&](int v) {
    if (v < rank_) return "c" + std::to_string(v + 1);
    if (twist_vars_ == 1) return std::string("delta");
    return "delta" + std::to_string(v - rank_ + 1);
  };

  std::ostringstream os;
  bool first = true;
  for (const auto& [g, mono] : order) {
    Rational coeff = terms_.at(*mono);
    bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string body;
    for (int v = 0; v < rank_ + twist_vars_; ++v) {
      int e = (*mono)[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!body.empty()) body += '*';
      body += var_name(v);
      if (e > 1) body += '^' + std::to_string(e);
    }
    if (body.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << body;
    } else {
      os << mag.get_str() << '*' << body;
    }
  }
  return os.str();
}

}  // namespace schurhr
