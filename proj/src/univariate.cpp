#include "schurhr/univariate.hpp"

#include <sstream>

#include "schurhr/errors.hpp"

namespace schurhr {

UniPoly::UniPoly(const Rational& constant) : coeffs_{constant} { trim(); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

UniPoly UniPoly::monomial(const Rational& coeff, int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  c.back() = coeff;
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * coeffs_[k]);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + UniPoly(*it);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm(1), num_gcd(0);
  for (const auto& c : coeffs_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Rational> scaled;
  for (const auto& c : coeffs_) {
    Rational s = c * den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), s.get_num_mpz_t());
    scaled.push_back(s);
  }
  if (scaled.back() < 0) num_gcd = -num_gcd;
  for (auto& s : scaled) s /= num_gcd;
  return UniPoly(std::move(scaled));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  UniPoly rem = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0,
                          Rational(0));
  const Rational lc = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational f = rem.leading() / lc;
    q[static_cast<std::size_t>(shift)] = f;
    for (int k = 0; k <= b.degree(); ++k)
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= f * b.coeffs_[static_cast<std::size_t>(k)];
    rem.trim();
  }
  return {UniPoly(std::move(q)), rem};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string body = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (body.empty()) os << mag.get_str();
    else if (mag == 1) os << body;
    else os << mag.get_str() << '*' << body;
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = UniPoly::divmod(a, b).second;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  return UniPoly::divmod(p, gcd(p, p.derivative())).first;
}

std::vector<UniPoly> square_free_factors(const UniPoly& p) {
  std::vector<UniPoly> factors;
  if (p.degree() <= 0) return factors;
  UniPoly a = p.monic();
  UniPoly b = a.derivative();
  UniPoly c = gcd(a, b);
  UniPoly w = UniPoly::divmod(a, c).first;
  UniPoly y = UniPoly::divmod(b, c).first;
  UniPoly z = y - w.derivative();
  while (w.degree() > 0) {
    UniPoly g = gcd(w, z);
    factors.push_back(g);
    w = UniPoly::divmod(w, g).first;
    y = UniPoly::divmod(z, g).first;
    z = y - w.derivative();
  }
  return factors;
}

namespace {

// primitive() forces a positive leading coefficient; keep the sign instead
UniPoly positive_rescale(const UniPoly& q) {
  UniPoly out = q.primitive();
  return q.leading() < 0 ? UniPoly(Rational(-1)) * out : out;
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(positive_rescale(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(positive_rescale(d));
  while (true) {
    UniPoly r = UniPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(UniPoly(Rational(-1)) * positive_rescale(r));
  }
  return seq;
}

namespace {

int sign_variations_at(const std::vector<UniPoly>& seq, const Rational& x) {
  int variations = 0, last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sign_variations_at_infinity(const std::vector<UniPoly>& seq, int direction) {
  int variations = 0, last = 0;
  for (const auto& q : seq) {
    int s = sgn(q.leading());
    if (direction < 0 && q.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int count_real_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw InvalidArgument("count_real_roots of the zero polynomial");
  if (!(a < b)) return 0;
  // square-free part gives a Sturm chain valid at roots of p
  auto seq = sturm_sequence(square_free_part(p));
  return sign_variations_at(seq, a) - sign_variations_at(seq, b);
}

int count_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw InvalidArgument("count_real_roots of the zero polynomial");
  auto seq = sturm_sequence(square_free_part(p));
  return sign_variations_at_infinity(seq, -1) - sign_variations_at_infinity(seq, 1);
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  const Rational lc = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = p.coefficient(k) / lc;
    if (r < 0) r = -r;
    if (r > m) m = r;
  }
  return m + 1;
}

std::optional<RootInterval> isolate_first_root(const UniPoly& p, const Rational& a, const Rational& b,
                                               const Rational& max_width) {
  if (p.is_zero()) throw InvalidArgument("isolate_first_root of the zero polynomial");
  UniPoly sf = square_free_part(p);
  auto seq = sturm_sequence(sf);
  auto count = [&](const Rational& lo, const Rational& hi) {
    return sign_variations_at(seq, lo) - sign_variations_at(seq, hi);
  };
  Rational lo = a, hi = b;
  if (count(lo, hi) == 0) return std::nullopt;
  while (hi - lo > max_width || count(lo, hi) != 1) {
    Rational mid = (lo + hi) / 2;
    if (count(lo, mid) > 0) hi = mid;
    else lo = mid;
  }
  return RootInterval{lo, hi};
}

bool nonnegative_on_reals(const UniPoly& p) {
  if (p.is_zero()) return true;
  if (p.degree() % 2 == 1 || p.leading() < 0) return false;
  // even degree, positive leading coefficient: p changes sign iff it has a
  // real root of odd multiplicity
  auto factors = square_free_factors(p);
  for (std::size_t k = 0; k < factors.size(); k += 2) {
    if (factors[k].degree() > 0 && count_real_roots(factors[k]) > 0) return false;
  }
  return true;
}

}  // namespace schurhr
