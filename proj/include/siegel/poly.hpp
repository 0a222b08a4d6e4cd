#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "siegel/complex_rational.hpp"

namespace siegel {

using Point = std::vector<ComplexRational>;
using MultiIndex = std::vector<int>;

/// Exponent pair (alpha, beta) of a monomial z^alpha zbar^beta, stored flat as
/// [alpha_1..alpha_n, beta_1..beta_n].
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : exps_(2 * static_cast<std::size_t>(n), 0) {}
  Monomial(const MultiIndex& alpha, const MultiIndex& beta);

  int n() const { return static_cast<int>(exps_.size() / 2); }
  int z(int j) const { return exps_[j]; }  // 0-based
  int zbar(int j) const { return exps_[n() + j]; }
  std::uint16_t& z(int j) { return exps_[j]; }
  std::uint16_t& zbar(int j) { return exps_[n() + j]; }
  int operator[](std::size_t k) const { return exps_[k]; }
  std::uint16_t& operator[](std::size_t k) { return exps_[k]; }
  std::size_t size() const { return exps_.size(); }

  int degree() const;
  MultiIndex alpha() const { return {exps_.begin(), exps_.begin() + n()}; }
  MultiIndex beta() const { return {exps_.begin() + n(), exps_.end()}; }
  Monomial conj() const;
  Monomial operator*(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint16_t> exps_;
};

/// Polynomial in z_1..z_n, zbar_1..zbar_n with exact coefficients.
/// Zero coefficients are never stored, so equality is structural.
class Poly {
 public:
  using Terms = std::map<Monomial, ComplexRational>;

  Poly() = default;
  explicit Poly(int n) : n_(n) {}
  Poly(int n, Terms terms);

  static Poly constant(int n, const ComplexRational& c);
  /// z_j, 1-based index as in the usual coordinate notation.
  static Poly z(int n, int j);
  static Poly zbar(int n, int j);
  static Poly monomial(int n, const MultiIndex& alpha, const MultiIndex& beta, const ComplexRational& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Max total degree over terms; -1 for the zero polynomial.
  int degree() const;
  /// Smallest total degree over terms; -1 for the zero polynomial.
  int low_degree() const;

  ComplexRational coefficient(const MultiIndex& alpha, const MultiIndex& beta) const;
  ComplexRational coefficient(const Monomial& m) const;
  ComplexRational constant_term() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const ComplexRational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const ComplexRational& c) { return a *= c; }
  friend Poly operator*(const ComplexRational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Coefficientwise conjugation combined with z <-> zbar exchange.
  Poly conj() const;
  bool is_real() const { return conj() == *this; }

  /// Drops every term of total degree > k.
  Poly truncated(int k) const;

  ComplexRational evaluate(std::span<const ComplexRational> z) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const ComplexRational& c);

  int n_ = 0;
  Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const ComplexRational& c);
Poly conj(const Poly& p);
/// Product with every term above degree k discarded during accumulation.
Poly mul_truncated(const Poly& p, const Poly& q, int k);
Poly pow(const Poly& p, int e);

/// Formal partial derivatives treating z_j and zbar_j as independent; j is 1-based.
Poly d_z(const Poly& p, int j);
Poly d_zbar(const Poly& p, int j);

/// Replaces every variable (z_1..z_n, zbar_1..zbar_n, in that order) by an
/// arbitrary polynomial. The images may live in a different dimension.
Poly substitute_vars(const Poly& p, std::span<const Poly> images, std::optional<int> degree_bound = std::nullopt);

/// Composition p(w(z), conj(w(z))): z_j -> images[j], zbar_j -> conj(images[j]).
Poly substitute(const Poly& p, std::span<const Poly> images, std::optional<int> degree_bound = std::nullopt);

Point conj(const Point& p);

}  // namespace siegel
