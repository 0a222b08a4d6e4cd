#include "siegel/autgroup.hpp"

#include <cmath>

#include "siegel/boundary.hpp"
#include "siegel/error.hpp"

namespace siegel {

namespace {

// B(z', w') = sum b_{jk} z_j w_k
ComplexRational bilinear(const Matrix& b, std::span<const ComplexRational> z, std::span<const ComplexRational> w) {
  ComplexRational s;
  for (int j = 0; j < b.rows(); ++j)
    for (int k = 0; k < b.cols(); ++k)
      if (!b(j, k).is_zero()) s += b(j, k) * z[j] * w[k];
  return s;
}

Point translate(const Matrix& b, const Point& zeta, const Point& w) {
  const std::size_t m = zeta.size() - 1;
  Point out(zeta.size());
  ComplexRational herm;
  for (std::size_t j = 0; j < m; ++j) {
    out[j] = w[j] + zeta[j];
    herm += w[j] * zeta[j].conj();
  }
  const ComplexRational bz = bilinear(b, std::span(w).first(m), std::span(zeta).first(m));
  out[m] = w[m] + zeta[m] - ComplexRational(2) * herm + ComplexRational::i() * ComplexRational(bz.re());
  return out;
}

}  // namespace

std::vector<std::string> automorphism_violations(const SimpleModelStructure& b, const Matrix& a, const mpq_class& c,
                                                 const Point& zeta) {
  const int n = b.n();
  std::vector<std::string> v;
  if (a.rows() != n - 1 || a.cols() != n - 1) {
    v.push_back("A must be (n-1)x(n-1)");
    return v;
  }
  if (static_cast<int>(zeta.size()) != n) {
    v.push_back("zeta must have n coordinates");
    return v;
  }
  if (sgn(c) <= 0) v.push_back("c must be positive");
  if (a.transpose() * a.conj() != Matrix::scalar(n - 1, ComplexRational(c))) v.push_back("A^t conj(A) = c I fails");
  if (a.transpose() * b.b() * a != ComplexRational(c) * b.b()) v.push_back("A^t B A = c B fails");
  if (!on_boundary(zeta)) v.push_back("rho(zeta) = 0 fails");
  return v;
}

Automorphism::Automorphism(SimpleModelStructure b, Matrix a, mpq_class c, Point zeta)
    : b_(std::move(b)), a_(std::move(a)), c_(std::move(c)), zeta_(std::move(zeta)) {
  c_.canonicalize();
  const auto v = automorphism_violations(b_, a_, c_, zeta_);
  if (!v.empty()) {
    std::string msg = "automorphism:";
    for (const auto& s : v) msg += " " + s + ";";
    fail(ErrorKind::Validation, msg);
  }
}

Automorphism Automorphism::identity(const SimpleModelStructure& b) {
  return Automorphism(b, Matrix::identity(b.n() - 1), 1, Point(b.n()));
}

Point Automorphism::apply(const Point& z) const {
  const int n = this->n();
  require_same_dim(n, static_cast<int>(z.size()), "automorphism apply");
  std::vector<ComplexRational> zp(z.begin(), z.end() - 1);
  Point w = a_.apply(zp);
  w.push_back(ComplexRational(c_) * z[n - 1]);
  return translate(b_.b(), zeta_, w);
}

std::vector<std::complex<double>> Automorphism::apply(std::span<const std::complex<double>> z) const {
  const int n = this->n();
  require_same_dim(n, static_cast<int>(z.size()), "automorphism apply");
  const int m = n - 1;
  std::vector<std::complex<double>> w(n), zeta(n);
  for (int j = 0; j < n; ++j) zeta[j] = zeta_[j].to_complex();
  for (int r = 0; r < m; ++r)
    for (int k = 0; k < m; ++k) w[r] += a_(r, k).to_complex() * z[k];
  w[m] = c_.get_d() * z[m];
  std::vector<std::complex<double>> out(n);
  std::complex<double> herm = 0, bz = 0;
  for (int j = 0; j < m; ++j) {
    out[j] = w[j] + zeta[j];
    herm += w[j] * std::conj(zeta[j]);
    for (int k = 0; k < m; ++k) bz += b_.b()(j, k).to_complex() * w[j] * zeta[k];
  }
  out[m] = w[m] + zeta[m] - 2.0 * herm + std::complex<double>(0, 1) * bz.real();
  return out;
}

PolyMap Automorphism::as_polymap() const {
  const int n = this->n();
  const int m = n - 1;
  const ComplexRational half(mpq_class(1, 2));
  std::vector<Poly> w;
  for (int r = 0; r < m; ++r) {
    Poly p(n);
    for (int k = 0; k < m; ++k)
      if (!a_(r, k).is_zero()) p += Poly::z(n, k + 1) * a_(r, k);
    w.push_back(std::move(p));
  }
  Poly wn = Poly::z(n, n) * ComplexRational(c_);
  // i Re B(w', zeta') = (i/2) (B(w', zeta') + conj(B(w', zeta')))
  Poly bw(n);
  Poly herm(n);
  for (int j = 0; j < m; ++j) {
    herm += w[j] * zeta_[j].conj();
    for (int k = 0; k < m; ++k)
      if (!b_.b()(j, k).is_zero()) bw += w[j] * (b_.b()(j, k) * zeta_[k]);
  }
  std::vector<Poly> comps;
  for (int j = 0; j < m; ++j) comps.push_back(w[j] + Poly::constant(n, zeta_[j]));
  comps.push_back(wn + Poly::constant(n, zeta_[m]) - herm * ComplexRational(2) +
                  (bw + bw.conj()) * (ComplexRational::i() * half));
  return PolyMap(n, std::move(comps));
}

Automorphism make_dilation(const mpq_class& s, const SimpleModelStructure& b) {
  if (sgn(s) <= 0) fail(ErrorKind::Precondition, "make_dilation: s must be positive");
  const mpq_class inv = 1 / s;
  return Automorphism(b, Matrix::scalar(b.n() - 1, ComplexRational(inv)), inv * inv, Point(b.n()));
}

Automorphism make_translation(const Point& zeta, const SimpleModelStructure& b) {
  require_same_dim(b.n(), static_cast<int>(zeta.size()), "make_translation");
  if (!on_boundary(zeta)) fail(ErrorKind::Precondition, "make_translation: zeta is not on the boundary");
  return Automorphism(b, Matrix::identity(b.n() - 1), 1, zeta);
}

Automorphism make_isotropy(const Matrix& a_unit, const SimpleModelStructure& b) {
  const int m = b.n() - 1;
  if (a_unit.rows() != m || a_unit.cols() != m) fail(ErrorKind::Dimension, "make_isotropy: A must be (n-1)x(n-1)");
  if (a_unit.transpose() * a_unit.conj() != Matrix::identity(m)) {
    fail(ErrorKind::Validation, "make_isotropy: A^t conj(A) = I fails, got " +
                                    (a_unit.transpose() * a_unit.conj()).to_string());
  }
  if (a_unit.transpose() * b.b() * a_unit != b.b()) {
    fail(ErrorKind::Validation, "make_isotropy: A^t B A = B fails, got " + (a_unit.transpose() * b.b() * a_unit).to_string());
  }
  return Automorphism(b, a_unit, 1, Point(b.n()));
}

Automorphism compose(const Automorphism& g1, const Automorphism& g2) {
  if (!(g1.structure() == g2.structure())) fail(ErrorKind::Precondition, "compose: automorphisms of different J^B");
  // Psi_z1 L1 Psi_z2 L2 = Psi_z1 Psi_{L1 z2} L1 L2 = Psi_{g1(z2)} (L1 L2)
  return Automorphism(g1.structure(), g1.a() * g2.a(), g1.c() * g2.c(), g1.apply(g2.zeta()));
}

Automorphism invert(const Automorphism& g) {
  const int n = g.n();
  const mpq_class inv_c = 1 / g.c();
  const Matrix a_inv = ComplexRational(inv_c) * g.a().adjoint();
  // Psi_zeta^{-1} = Psi_eta with eta = (-zeta', conj(zeta_n)); then move the linear part across.
  Point eta(n);
  for (int j = 0; j < n - 1; ++j) eta[j] = -g.zeta()[j];
  eta[n - 1] = g.zeta()[n - 1].conj();
  Point shifted = a_inv.apply(std::vector<ComplexRational>(eta.begin(), eta.end() - 1));
  shifted.push_back(ComplexRational(inv_c) * eta[n - 1]);
  return Automorphism(g.structure(), a_inv, inv_c, shifted);
}

Automorphism transitivity_witness(const Point& p, const Point& q, const SimpleModelStructure& b) {
  return compose(make_translation(q, b), invert(make_translation(p, b)));
}

bool fixes_minus_one(const Automorphism& g) {
  if (nijenhuis_vanishes(g.structure().to_model())) {
    fail(ErrorKind::Precondition, "isotropy characterization is only available for non-integrable J^B");
  }
  if (g.c() != 1) return false;
  for (const auto& x : g.zeta())
    if (!x.is_zero()) return false;
  return true;
}

FactoredView factored_view(const Automorphism& g) {
  FactoredView v;
  v.tau = 1 / g.c();
  v.sqrt_c_approx = std::sqrt(g.c().get_d());
  const mpz_class& num = g.c().get_num();
  const mpz_class& den = g.c().get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpq_class s(sqrt(num), sqrt(den));
    s.canonicalize();
    v.sqrt_c = s;
    v.a_unit = ComplexRational(1 / s) * g.a();
  }
  return v;
}

}  // namespace siegel
