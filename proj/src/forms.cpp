#include "schurhr/forms.hpp"

#include <bit>
#include <cctype>

#include "schurhr/errors.hpp"
#include "schurhr/schur.hpp"
#include "schurhr/symmetric.hpp"

namespace schurhr {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// parity of #{(a, b) in A x B : a > b}
int shuffle_parity(PQForm::Mask a, PQForm::Mask b) {
  int inversions = 0;
  while (b != 0) {
    int low = std::countr_zero(b);
    b &= b - 1;
    PQForm::Mask above = low + 1 >= 32 ? 0 : (a >> (low + 1));
    inversions += std::popcount(above);
  }
  return inversions & 1;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
  std::string s = trim(text);
  std::string compact;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) throw InvalidArgument("empty complex literal");
  if (compact.back() != 'i') return {parse_rational(compact), Rational(0)};
  compact.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = compact.size(); k-- > 1;)
    if (compact[k] == '+' || compact[k] == '-') {
      split = k;
      break;
    }
  std::string real_text = split == std::string::npos ? "" : compact.substr(0, split);
  std::string imag_text = split == std::string::npos ? compact : compact.substr(split);
  Rational im;
  if (imag_text.empty() || imag_text == "+") im = 1;
  else if (imag_text == "-") im = -1;
  else im = parse_rational(imag_text[0] == '+' ? imag_text.substr(1) : imag_text);
  Rational re = real_text.empty() ? Rational(0) : parse_rational(real_text);
  return {re, im};
}

GaussianRational GaussianRational::inverse() const {
  Rational norm = re * re + im * im;
  if (norm == 0) throw InvalidArgument("division by zero");
  return {re / norm, -im / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = r;
  im = i;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im == 0) return schurhr::to_string(re);
  std::string imag;
  if (im == 1) imag = "i";
  else if (im == -1) imag = "-i";
  else imag = schurhr::to_string(im) + "i";
  if (re == 0) return imag;
  return schurhr::to_string(re) + (im > 0 ? "+" : "") + imag;
}

PQForm::PQForm(int d, int p, int q) : d_(d), p_(p), q_(q) {
  if (d < 1 || d > kMaxDimension) throw InvalidArgument("form dimension must be in [1, 16]");
  if (p < 0 || q < 0) throw InvalidArgument("negative bidegree");
}

PQForm PQForm::one(int d) {
  PQForm f(d, 0, 0);
  f.add(0, 0, GaussianRational(1));
  return f;
}

PQForm PQForm::term(int d, Mask holomorphic, Mask antiholomorphic, const GaussianRational& c) {
  PQForm f(d, std::popcount(holomorphic), std::popcount(antiholomorphic));
  f.add(holomorphic, antiholomorphic, c);
  return f;
}

GaussianRational PQForm::coefficient(Mask holomorphic, Mask antiholomorphic) const {
  auto it = terms_.find({holomorphic, antiholomorphic});
  return it == terms_.end() ? GaussianRational() : it->second;
}

void PQForm::add(Mask holomorphic, Mask antiholomorphic, const GaussianRational& c) {
  if (std::popcount(holomorphic) != p_ || std::popcount(antiholomorphic) != q_)
    throw InvalidArgument("index sets do not match the bidegree");
  const Mask full = d_ >= 32 ? ~Mask{0} : ((Mask{1} << d_) - 1);
  if ((holomorphic & ~full) != 0 || (antiholomorphic & ~full) != 0)
    throw InvalidArgument("index out of range for the form dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({holomorphic, antiholomorphic}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PQForm PQForm::conj() const {
  PQForm out(d_, q_, p_);
  const bool flip = (p_ * q_) % 2 == 1;
  for (const auto& [key, c] : terms_) {
    GaussianRational v = c.conj();
    out.add(key.second, key.first, flip ? -v : v);
  }
  return out;
}

Rational PQForm::integrate_top() const {
  if (p_ != d_ || q_ != d_) throw InvalidArgument("integrate_top needs a (d,d)-form");
  if (!is_real()) throw InvalidArgument("integrate_top needs a real form");
  const Mask full = (Mask{1} << d_) - 1;
  GaussianRational r = coefficient(full, full) / volume_coefficient(d_);
  return r.re;
}

void PQForm::check_compatible(const PQForm& o) const {
  if (d_ != o.d_) throw InvalidArgument("forms on different dimensions");
  if (p_ != o.p_ || q_ != o.q_) throw InvalidArgument("adding forms of different bidegree");
}

PQForm& PQForm::operator+=(const PQForm& o) {
  check_compatible(o);
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

PQForm& PQForm::operator-=(const PQForm& o) {
  check_compatible(o);
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

PQForm operator*(const PQForm& a, const PQForm& b) {
  if (a.d_ != b.d_) throw InvalidArgument("wedge of forms on different dimensions");
  PQForm out(a.d_, a.p_ + b.p_, a.q_ + b.q_);
  if (out.p_ > out.d_ || out.q_ > out.d_) return out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if ((ka.first & kb.first) != 0 || (ka.second & kb.second) != 0) continue;
      // move dz_K past dzb_J, then sort I u K and J u L
      int parity = (a.q_ * b.p_) & 1;
      parity ^= shuffle_parity(ka.first, kb.first);
      parity ^= shuffle_parity(ka.second, kb.second);
      GaussianRational c = ca * cb;
      out.add(ka.first | kb.first, ka.second | kb.second, parity != 0 ? -c : c);
    }
  }
  return out;
}

PQForm operator*(const GaussianRational& c, const PQForm& a) {
  PQForm out(a.d_, a.p_, a.q_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : a.terms_) out.add(key.first, key.second, c * v);
  return out;
}

std::string PQForm::to_string() const {
  if (terms_.empty()) return "0";
  auto indices = [](Mask m, const char* prefix) {
    std::string s;
    for (int j = 0; m != 0; ++j, m >>= 1)
      if (m & 1U) s += (s.empty() ? "" : "^") + std::string(prefix) + std::to_string(j + 1);
    return s;
  };
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string basis = indices(key.first, "dz");
    std::string bar = indices(key.second, "dzb");
    if (!basis.empty() && !bar.empty()) basis += "^";
    basis += bar;
    std::string coeff = c.to_string();
    if (c.re != 0 && c.im != 0) coeff = "(" + coeff + ")";
    if (!out.empty()) out += " + ";
    if (basis.empty()) out += coeff;
    else if (c == GaussianRational(1)) out += basis;
    else out += coeff + "*" + basis;
  }
  return out;
}

PQForm wedge(const PQForm& a, const PQForm& b) { return a * b; }

PQForm wedge_power(const PQForm& a, int k) {
  if (k < 0) throw InvalidArgument("negative wedge power");
  PQForm out = PQForm::one(a.dimension());
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

GaussianRational volume_coefficient(int d) {
  GaussianRational c(1);
  for (int j = 0; j < d; ++j) c *= GaussianRational::i();
  if ((d * (d - 1) / 2) % 2 == 1) c = -c;
  return c;
}

HermitianOneOne::HermitianOneOne(Matrix<GaussianRational> h) : h_(std::move(h)) {
  if (!h_.is_square() || h_.rows() == 0) throw InvalidArgument("Hermitian matrix must be square and nonempty");
  if (h_.rows() > static_cast<std::size_t>(PQForm::kMaxDimension))
    throw InvalidArgument("Hermitian matrix larger than 16x16");
  for (std::size_t j = 0; j < h_.rows(); ++j)
    for (std::size_t k = j; k < h_.cols(); ++k)
      if (!(h_(j, k) == h_(k, j).conj())) throw InvalidArgument("matrix is not Hermitian");
}

HermitianOneOne HermitianOneOne::identity(int d) {
  return diagonal(std::vector<Rational>(static_cast<std::size_t>(d), Rational(1)));
}

HermitianOneOne HermitianOneOne::diagonal(const std::vector<Rational>& entries) {
  Matrix<GaussianRational> h(entries.size(), entries.size(), GaussianRational());
  for (std::size_t j = 0; j < entries.size(); ++j) h(j, j) = GaussianRational(entries[j]);
  return HermitianOneOne(std::move(h));
}

HermitianOneOne HermitianOneOne::parse(const std::vector<std::vector<std::string>>& rows) {
  Matrix<GaussianRational> h(rows.size(), rows.size(), GaussianRational());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != rows.size()) throw InvalidArgument("Hermitian matrix rows must have equal length");
    for (std::size_t k = 0; k < rows.size(); ++k) h(j, k) = GaussianRational::parse(rows[j][k]);
  }
  return HermitianOneOne(std::move(h));
}

PQForm HermitianOneOne::to_form() const {
  const int d = dimension();
  PQForm f(d, 1, 1);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      f.add(PQForm::Mask{1} << j, PQForm::Mask{1} << k,
            GaussianRational::i() * h_(static_cast<std::size_t>(j), static_cast<std::size_t>(k)));
  return f;
}

bool kahler_check(const HermitianOneOne& h) {
  const auto& m = h.matrix();
  for (std::size_t n = 1; n <= m.rows(); ++n) {
    Matrix<GaussianRational> minor(n, n, GaussianRational());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) minor(j, k) = m(j, k);
    if (laplace_determinant(minor, GaussianRational(), GaussianRational(1)).re <= 0) return false;
  }
  return true;
}

PQForm schur_form(const Partition& lambda, std::span<const HermitianOneOne> omegas) {
  if (omegas.empty()) throw InvalidArgument("schur_form needs at least one (1,1)-form");
  const int d = omegas.front().dimension();
  const int e = static_cast<int>(omegas.size());
  std::vector<PQForm> forms;
  for (const auto& w : omegas) {
    if (w.dimension() != d) throw InvalidArgument("(1,1)-forms on different dimensions");
    forms.push_back(w.to_form());
  }
  if (lambda.weight() > d) throw InvalidArgument("Schur form degree exceeds the dimension");
  ChernPoly s = schur(lambda, e);
  auto e_k = elementary_symmetric<PQForm>(
      std::span<const PQForm>(forms),
      [d](std::size_t k) { return PQForm(d, static_cast<int>(k), static_cast<int>(k)); }, PQForm::one(d));
  const int n = lambda.weight();
  return s.evaluate<PQForm>([&](int k) { return e_k[static_cast<std::size_t>(k)]; },
                            [d](int) -> PQForm { throw InvalidArgument("unexpected twist variable"); },
                            PQForm(d, n, n), PQForm::one(d));
}

std::vector<PQForm> real_one_one_basis(int d) {
  using Mask = PQForm::Mask;
  std::vector<PQForm> basis;
  const GaussianRational i = GaussianRational::i();
  for (int j = 0; j < d; ++j) basis.push_back(PQForm::term(d, Mask{1} << j, Mask{1} << j, i));
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      PQForm f = PQForm::term(d, Mask{1} << j, Mask{1} << k, i);
      f.add(Mask{1} << k, Mask{1} << j, i);
      basis.push_back(f);
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      PQForm f = PQForm::term(d, Mask{1} << j, Mask{1} << k, GaussianRational(1));
      f.add(Mask{1} << k, Mask{1} << j, GaussianRational(-1));
      basis.push_back(f);
    }
  return basis;
}

RationalMatrix hr_gram(const PQForm& omega) {
  const int d = omega.dimension();
  if (d < 2 || omega.p() != d - 2 || omega.q() != d - 2) throw InvalidArgument("hr_gram needs a (d-2,d-2)-form");
  if (!omega.is_real()) throw InvalidArgument("hr_gram needs a real form");
  auto basis = real_one_one_basis(d);
  const std::size_t n = basis.size();
  RationalMatrix g(n, n, Rational(0));
  for (std::size_t b = 0; b < n; ++b) {
    PQForm right = omega * basis[b];
    for (std::size_t a = 0; a <= b; ++a) g(a, b) = g(b, a) = (basis[a] * right).integrate_top();
  }
  return g;
}

InertiaReport hodge_riemann_verdict(const PQForm& omega, const HermitianOneOne& reference) {
  if (!kahler_check(reference)) throw PreconditionError("reference (1,1)-form is not Kahler");
  if (reference.dimension() != omega.dimension()) throw InvalidArgument("forms on different dimensions");
  RationalMatrix g = hr_gram(omega);
  PQForm w = reference.to_form();
  return hodge_riemann_report(g, (omega * w * w).integrate_top());
}

}  // namespace schurhr
