#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "siegel/error.hpp"
#include "siegel/poly.hpp"

namespace siegel {

// ---------------------------------------------------------------------------
// ComplexRational

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  if (o.is_zero()) fail(ErrorKind::Precondition, "division by zero");
  const mpq_class d = o.norm2();
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class m = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string rational_to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) fail(ErrorKind::Parse, "empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/')) {
      fail(ErrorKind::Parse, "rational literal must be decimal-free p/q: '" + s + "'");
    }
  }
  std::string body = s;
  if (body.front() == '+') body.erase(0, 1);
  mpq_class q;
  if (q.set_str(body, 10) != 0) fail(ErrorKind::Parse, "malformed rational '" + s + "'");
  if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

ComplexRational ComplexRational::parse(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

std::string ComplexRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string s = "(" + re_.get_str();
  s += sgn(im_) > 0 ? "+" : "-";
  s += mpq_class(abs(im_)).get_str() + "i)";
  return s;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.size() != beta.size()) fail(ErrorKind::Dimension, "monomial: alpha/beta length mismatch");
  exps_.reserve(alpha.size() * 2);
  for (int a : alpha) {
    if (a < 0) fail(ErrorKind::Precondition, "monomial: negative exponent");
    exps_.push_back(static_cast<std::uint16_t>(a));
  }
  for (int b : beta) {
    if (b < 0) fail(ErrorKind::Precondition, "monomial: negative exponent");
    exps_.push_back(static_cast<std::uint16_t>(b));
  }
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Monomial Monomial::conj() const {
  Monomial m(n());
  for (int j = 0; j < n(); ++j) {
    m.z(j) = zbar(j);
    m.zbar(j) = z(j);
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) m.exps_[k] = static_cast<std::uint16_t>(m.exps_[k] + o.exps_[k]);
  return m;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(int n, Terms terms) : n_(n) {
  for (auto& [m, c] : terms) {
    if (m.n() != n) fail(ErrorKind::Dimension, "poly: monomial dimension mismatch");
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

Poly Poly::constant(int n, const ComplexRational& c) {
  Poly p(n);
  p.add_term(Monomial(n), c);
  return p;
}

Poly Poly::z(int n, int j) {
  if (j < 1 || j > n) fail(ErrorKind::Precondition, "variable index out of range");
  Monomial m(n);
  m.z(j - 1) = 1;
  Poly p(n);
  p.add_term(m, 1);
  return p;
}

Poly Poly::zbar(int n, int j) {
  if (j < 1 || j > n) fail(ErrorKind::Precondition, "variable index out of range");
  Monomial m(n);
  m.zbar(j - 1) = 1;
  Poly p(n);
  p.add_term(m, 1);
  return p;
}

Poly Poly::monomial(int n, const MultiIndex& alpha, const MultiIndex& beta, const ComplexRational& c) {
  if (static_cast<int>(alpha.size()) != n) fail(ErrorKind::Dimension, "monomial: wrong multi-index length");
  Poly p(n);
  p.add_term(Monomial(alpha, beta), c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Poly::low_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

ComplexRational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ComplexRational{} : it->second;
}

ComplexRational Poly::coefficient(const MultiIndex& alpha, const MultiIndex& beta) const {
  if (static_cast<int>(alpha.size()) != n_ || static_cast<int>(beta.size()) != n_) {
    fail(ErrorKind::Dimension, "coefficient: multi-index length differs from n");
  }
  return coefficient(Monomial(alpha, beta));
}

ComplexRational Poly::constant_term() const { return coefficient(Monomial(n_)); }

void Poly::add_term(const Monomial& m, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_dim(n_, o.n_, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_dim(n_, o.n_, "sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) { return mul_truncated(a, b, -1); }

Poly Poly::conj() const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.conj(), c.conj());
  return r;
}

Poly Poly::truncated(int k) const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() <= k) r.terms_.emplace(m, c);
  }
  return r;
}

ComplexRational Poly::evaluate(std::span<const ComplexRational> z) const {
  if (static_cast<int>(z.size()) != n_) fail(ErrorKind::Dimension, "evaluate: point dimension mismatch");
  std::vector<ComplexRational> zb(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) zb[j] = z[j].conj();
  ComplexRational total;
  for (const auto& [m, c] : terms_) {
    ComplexRational t = c;
    for (int j = 0; j < n_; ++j) {
      for (int e = 0; e < m.z(j); ++e) t *= z[j];
      for (int e = 0; e < m.zbar(j); ++e) t *= zb[j];
    }
    total += t;
  }
  return total;
}

std::complex<double> Poly::evaluate(std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != n_) fail(ErrorKind::Dimension, "evaluate: point dimension mismatch");
  std::complex<double> total = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int j = 0; j < n_; ++j) {
      for (int e = 0; e < m.z(j); ++e) t *= z[j];
      for (int e = 0; e < m.zbar(j); ++e) t *= std::conj(z[j]);
    }
    total += t;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool is_const = m.degree() == 0;
    if (is_const || c != ComplexRational(1)) {
      os << c;
      if (!is_const) os << "*";
    }
    bool first_var = true;
    for (int j = 0; j < n_; ++j) {
      for (int pass = 0; pass < 2; ++pass) {
        const int e = pass == 0 ? m.z(j) : m.zbar(j);
        if (e == 0) continue;
        if (!first_var) os << "*";
        first_var = false;
        os << (pass == 0 ? "z" : "zb") << (j + 1);
        if (e > 1) os << "^" << e;
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// free functions

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Poly& p, const ComplexRational& c) { return p * c; }
Poly conj(const Poly& p) { return p.conj(); }

Poly mul_truncated(const Poly& p, const Poly& q, int k) {
  require_same_dim(p.n(), q.n(), "mul");
  Poly::Terms acc;
  for (const auto& [ma, ca] : p.terms()) {
    const int da = ma.degree();
    for (const auto& [mb, cb] : q.terms()) {
      if (k >= 0 && da + mb.degree() > k) continue;
      auto [it, inserted] = acc.try_emplace(ma * mb, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  return Poly(p.n(), std::move(acc));
}

Poly pow(const Poly& p, int e) {
  if (e < 0) fail(ErrorKind::Precondition, "pow: negative exponent");
  Poly r = Poly::constant(p.n(), 1);
  Poly base = p;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

namespace {

Poly derivative(const Poly& p, int slot) {
  Poly::Terms out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m[slot];
    if (e == 0) continue;
    Monomial dm = m;
    dm[slot] = e - 1;
    out.emplace(dm, c * ComplexRational(e));
  }
  return Poly(p.n(), std::move(out));
}

}  // namespace

Poly d_z(const Poly& p, int j) {
  if (j < 1 || j > p.n()) fail(ErrorKind::Precondition, "d_z: index out of range");
  return derivative(p, j - 1);
}

Poly d_zbar(const Poly& p, int j) {
  if (j < 1 || j > p.n()) fail(ErrorKind::Precondition, "d_zbar: index out of range");
  return derivative(p, p.n() + j - 1);
}

Poly substitute_vars(const Poly& p, std::span<const Poly> images, std::optional<int> degree_bound) {
  const int n = p.n();
  if (static_cast<int>(images.size()) != 2 * n) fail(ErrorKind::Dimension, "substitute: need 2n images");
  const int m = images.empty() ? 0 : images[0].n();
  for (const auto& im : images) require_same_dim(m, im.n(), "substitute");
  const int bound = degree_bound.value_or(-1);

  // powers[v][e] = images[v]^e, built lazily
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, int e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(m, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(mul_truncated(cache.back(), images[v], bound));
    return cache[e];
  };

  Poly result(m);
  for (const auto& [mono, c] : p.terms()) {
    Poly term = Poly::constant(m, c);
    for (std::size_t v = 0; v < mono.size() && !term.is_zero(); ++v) {
      if (mono[v] == 0) continue;
      term = mul_truncated(term, power(v, mono[v]), bound);
    }
    result += term;
  }
  return result;
}

Poly substitute(const Poly& p, std::span<const Poly> images, std::optional<int> degree_bound) {
  if (static_cast<int>(images.size()) != p.n()) fail(ErrorKind::Dimension, "substitute: need n images");
  std::vector<Poly> all(images.begin(), images.end());
  for (const auto& im : images) all.push_back(im.conj());
  return substitute_vars(p, all, degree_bound);
}

Point conj(const Point& p) {
  Point r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(x.conj());
  return r;
}

}  // namespace siegel
