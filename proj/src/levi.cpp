#include "siegel/levi.hpp"

#include <sstream>

#include "siegel/boundary.hpp"
#include "siegel/error.hpp"

namespace siegel {

// ---------------------------------------------------------------------------
// PolyMatrix / VectorField

PolyMatrix::PolyMatrix(int size, int n) : size_(size), n_(n), data_(static_cast<std::size_t>(size) * size, Poly(n)) {}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_dim(a.size_, b.size_, "poly matrix product");
  PolyMatrix r(a.size_, a.n_);
  for (int i = 0; i < a.size_; ++i)
    for (int k = 0; k < a.size_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.size_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

VectorField::VectorField(int n) : n_(n), comps_(2 * static_cast<std::size_t>(n), Poly(n)) {}

VectorField::VectorField(int n, std::vector<Poly> components) : n_(n), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != 2 * n) fail(ErrorKind::Dimension, "vector field: need 2n components");
  for (const auto& c : comps_) require_same_dim(n, c.n(), "vector field component");
  refresh();
}

void VectorField::refresh() {
  real_ = true;
  for (int k = 1; k <= n_ && real_; ++k) real_ = dzbar(k) == dz(k).conj();
}

VectorField VectorField::coordinate(int n, int k, bool bar) {
  VectorField x(n);
  x.comps_[frame_slot(k, bar)] = Poly::constant(n, 1);
  x.refresh();
  return x;
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::conj() const {
  VectorField r(n_);
  for (int k = 1; k <= n_; ++k) {
    r.comps_[frame_slot(k, false)] = dzbar(k).conj();
    r.comps_[frame_slot(k, true)] = dz(k).conj();
  }
  r.refresh();
  return r;
}

Poly VectorField::apply(const Poly& f) const {
  require_same_dim(n_, f.n(), "vector field apply");
  Poly r(n_);
  for (int k = 1; k <= n_; ++k) {
    if (!dz(k).is_zero()) r += dz(k) * d_z(f, k);
    if (!dzbar(k).is_zero()) r += dzbar(k) * d_zbar(f, k);
  }
  return r;
}

std::vector<ComplexRational> VectorField::at(const Point& p) const {
  std::vector<ComplexRational> v;
  v.reserve(comps_.size());
  for (const auto& c : comps_) v.push_back(c.evaluate(p));
  return v;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same_dim(n_, o.n_, "vector field sum");
  for (std::size_t s = 0; s < comps_.size(); ++s) comps_[s] += o.comps_[s];
  refresh();
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same_dim(n_, o.n_, "vector field difference");
  for (std::size_t s = 0; s < comps_.size(); ++s) comps_[s] -= o.comps_[s];
  refresh();
  return *this;
}

VectorField operator*(const Poly& f, const VectorField& x) {
  require_same_dim(f.n(), x.n_, "vector field scaling");
  std::vector<Poly> c;
  for (const auto& p : x.comps_) c.push_back(f * p);
  return VectorField(x.n_, std::move(c));
}

VectorField operator*(const ComplexRational& s, const VectorField& x) {
  std::vector<Poly> c;
  for (const auto& p : x.comps_) c.push_back(p * s);
  return VectorField(x.n_, std::move(c));
}

std::string VectorField::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 1; k <= n_; ++k)
    for (int bar = 0; bar < 2; ++bar) {
      const Poly& c = comps_[frame_slot(k, bar == 1)];
      if (c.is_zero()) continue;
      os << (first ? "" : " + ") << "(" << c.to_string() << ")" << (bar ? " d/dzb" : " d/dz") << k;
      first = false;
    }
  return first ? "0" : os.str();
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_dim(x.n(), y.n(), "lie_bracket");
  std::vector<Poly> c;
  c.reserve(x.components().size());
  for (std::size_t s = 0; s < x.components().size(); ++s) c.push_back(x.apply(y[s]) - y.apply(x[s]));
  return VectorField(x.n(), std::move(c));
}

VectorField apply_matrix(const PolyMatrix& m, const VectorField& x) {
  require_same_dim(m.n(), x.n(), "apply_matrix");
  std::vector<Poly> c(m.size(), Poly(x.n()));
  for (int r = 0; r < m.size(); ++r)
    for (int k = 0; k < m.size(); ++k)
      if (!m(r, k).is_zero() && !x[k].is_zero()) c[r] += m(r, k) * x[k];
  return VectorField(x.n(), std::move(c));
}

// ---------------------------------------------------------------------------
// Levi form

bool in_complex_tangent(const ModelStructure& j, const VectorField& x) {
  if (!x.is_real()) return false;
  const Poly r = rho(j.n());
  return reduce_mod_boundary(x.apply(r)).is_zero() && reduce_mod_boundary(apply_J(j, x).apply(r)).is_zero();
}

mpq_class levi_form(const ModelStructure& j, const VectorField& x, const Point& p) {
  require_same_dim(j.n(), x.n(), "levi_form");
  require_same_dim(j.n(), static_cast<int>(p.size()), "levi_form point");
  if (!on_boundary(p)) fail(ErrorKind::Precondition, "levi_form: base point is not on the boundary");
  if (!x.is_real()) fail(ErrorKind::Precondition, "levi_form: field is not real");
  if (!in_complex_tangent(j, x)) fail(ErrorKind::Precondition, "levi_form: field is not in the complex tangent space");
  const VectorField jx = apply_J(j, x);
  const VectorField v = apply_J(j, lie_bracket(x, jx));
  const ComplexRational value = v.apply(rho(j.n())).evaluate(p);
  if (!value.is_real()) fail(ErrorKind::Internal, "levi_form: non-real value " + value.to_string());
  return value.re();
}

VectorField real_frame_field(const TangentFrame& frame, const std::vector<ComplexRational>& v) {
  if (v.size() != frame.l.size()) fail(ErrorKind::Dimension, "real_frame_field: coefficient count");
  const int n = frame.t.n();
  VectorField z(n);
  for (std::size_t k = 0; k < v.size(); ++k) z += v[k] * frame.l[k];
  return z + z.conj();
}

LeviReport levi_matrix(const ModelStructure& j, const Point& p) {
  const int n = j.n();
  require_same_dim(n, static_cast<int>(p.size()), "levi_matrix point");
  if (!on_boundary(p)) fail(ErrorKind::Precondition, "levi_matrix: base point is not on the boundary");
  const TangentFrame frame = tangent_frame(j);
  const int m = n - 1;
  std::vector<VectorField> real(m);
  for (int k = 0; k < m; ++k) real[k] = frame.l[k] + frame.l[k].conj();

  std::vector<mpq_class> diag(m);
  for (int k = 0; k < m; ++k) diag[k] = levi_form(j, real[k], p);

  LeviReport rep;
  rep.point = p;
  rep.matrix = Matrix(m, m);
  for (int a = 0; a < m; ++a) {
    rep.matrix(a, a) = ComplexRational(diag[a]);
    for (int b = a + 1; b < m; ++b) {
      // H(e_a + e_b) = H_aa + H_bb + 2 Re H_ab,  H(e_a + i e_b) = H_aa + H_bb + 2 Im H_ab
      const mpq_class sum_re = levi_form(j, real[a] + real[b], p);
      const mpq_class sum_im = levi_form(j, real[a] + apply_J(j, real[b]), p);
      const mpq_class re = (sum_re - diag[a] - diag[b]) / 2;
      const mpq_class im = (sum_im - diag[a] - diag[b]) / 2;
      rep.matrix(a, b) = ComplexRational(re, im);
      rep.matrix(b, a) = ComplexRational(re, -im);
    }
  }
  if (!rep.matrix.is_hermitian()) fail(ErrorKind::Internal, "levi_matrix: not Hermitian");

  rep.positive = true;
  for (const auto& minor : leading_minors(rep.matrix)) {
    if (!minor.is_real()) fail(ErrorKind::Internal, "levi_matrix: non-real principal minor");
    rep.minors.push_back(minor.re());
  }
  for (int k = 0; k < m; ++k) {
    if (sgn(rep.minors[k]) > 0) continue;
    rep.positive = false;
    // w = (-M^{-1} b, 1, 0, ...) gives w* H w = minor_k / minor_{k-1} <= 0
    std::vector<ComplexRational> w(m);
    w[k] = 1;
    if (k > 0) {
      Matrix lead(k, k);
      std::vector<ComplexRational> col(k);
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) lead(r, c) = rep.matrix(r, c);
        col[r] = -rep.matrix(r, k);
      }
      auto x = solve(lead, col);
      if (!x) fail(ErrorKind::Internal, "levi_matrix: singular leading block");
      for (int r = 0; r < k; ++r) w[r] = (*x)[r];
    }
    // H(v) = v^T H conj(v); the frame coefficients are v = conj(w)
    rep.witness = conj(w);
    rep.witness_value = levi_form(j, real_frame_field(frame, *rep.witness), p);
    break;
  }
  return rep;
}

}  // namespace siegel
