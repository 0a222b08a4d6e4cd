#include "siegel/maps.hpp"

#include "siegel/error.hpp"

namespace siegel {

namespace {

const ComplexRational kI = ComplexRational::i();

std::string slot_name(int slot) {
  return std::string(slot % 2 ? "zb" : "z") + std::to_string(slot / 2 + 1);
}

Offender lowest_term(const std::string& label, const Poly& p) {
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || m.degree() < best->degree()) best = &m;
  return {label, *best, p.coefficient(*best)};
}

// Collects nonzero residuals, truncating at `order` when set.
void record(ResidualReport& rep, std::string label, Poly value, std::optional<int> order) {
  ++rep.identities_checked;
  if (order) value = value.truncated(*order);
  if (value.is_zero()) return;
  if (!rep.first_offender) rep.first_offender = lowest_term(label, value);
  rep.verdict = Verdict::Fail;
  rep.residuals.push_back({std::move(label), std::move(value)});
}

// Valid degree of a first-derivative expression of a truncated map.
std::optional<int> derivative_order(const PolyMap& f) {
  if (!f.truncated()) return std::nullopt;
  return *f.truncation_order() - 1;
}

bool undecidable(ResidualReport& rep, std::optional<int> order) {
  rep.decided_to_degree = order;
  if (order && *order < 0) {
    rep.verdict = Verdict::Undecided;
    rep.note = "truncation order too low to decide any coefficient";
    return true;
  }
  return false;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

PolyMap::PolyMap(int n, std::vector<Poly> components, std::optional<int> truncation_order)
    : n_(n), comps_(std::move(components)), order_(truncation_order) {
  if (n < 1) fail(ErrorKind::Precondition, "map: n must be positive");
  if (static_cast<int>(comps_.size()) != n) fail(ErrorKind::Dimension, "map: need n components");
  for (auto& c : comps_) {
    require_same_dim(n, c.n(), "map component");
    if (order_) {
      if (*order_ < 0) fail(ErrorKind::Precondition, "map: negative truncation order");
      c = c.truncated(*order_);
    }
  }
}

PolyMap PolyMap::identity(int n) {
  std::vector<Poly> c;
  for (int j = 1; j <= n; ++j) c.push_back(Poly::z(n, j));
  return PolyMap(n, std::move(c));
}

PolyMap PolyMap::truncated_to(int k) const {
  const int order = order_ ? std::min(*order_, k) : k;
  return PolyMap(n_, comps_, order);
}

Point PolyMap::evaluate(const Point& z) const {
  Point w;
  for (const auto& c : comps_) w.push_back(c.evaluate(z));
  return w;
}

std::vector<std::complex<double>> PolyMap::evaluate(std::span<const std::complex<double>> z) const {
  std::vector<std::complex<double>> w;
  for (const auto& c : comps_) w.push_back(c.evaluate(z));
  return w;
}

bool PolyMap::fixes_origin() const {
  for (const auto& c : comps_)
    if (!c.constant_term().is_zero()) return false;
  return true;
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  require_same_dim(f.n(), g.n(), "compose");
  std::optional<int> order = g.truncation_order();
  if (f.truncated()) {
    if (!g.fixes_origin()) {
      fail(ErrorKind::Precondition, "compose: truncated outer map needs an inner map fixing the origin");
    }
    order = order ? std::min(*order, *f.truncation_order()) : *f.truncation_order();
  }
  std::vector<Poly> c;
  for (const auto& fk : f.components()) c.push_back(substitute(fk, g.components(), order));
  return PolyMap(f.n(), std::move(c), order);
}

PolyMatrix jacobian(const PolyMap& f) {
  const int n = f.n();
  PolyMatrix m(2 * n, n);
  for (int k = 1; k <= n; ++k) {
    const Poly& fk = f[k - 1];
    for (int j = 1; j <= n; ++j) {
      const Poly dz = d_z(fk, j), dzb = d_zbar(fk, j);
      m(frame_slot(k, false), frame_slot(j, false)) = dz;
      m(frame_slot(k, false), frame_slot(j, true)) = dzb;
      m(frame_slot(k, true), frame_slot(j, false)) = dzb.conj();
      m(frame_slot(k, true), frame_slot(j, true)) = dz.conj();
    }
  }
  return m;
}

namespace {

PolyMatrix substitute_matrix(const PolyMatrix& m, const PolyMap& f) {
  PolyMatrix r(m.size(), f.n());
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      if (!m(a, b).is_zero()) r(a, b) = substitute(m(a, b), f.components(), f.truncation_order());
  return r;
}

}  // namespace

ResidualReport check_pseudoholomorphic(const ModelStructure& j, const ModelStructure& jp, const PolyMap& f) {
  require_same_dim(j.n(), f.n(), "check_pseudoholomorphic");
  require_same_dim(jp.n(), f.n(), "check_pseudoholomorphic");
  ResidualReport rep;
  rep.check = "pseudoholomorphic";
  const auto order = derivative_order(f);
  if (undecidable(rep, order)) return rep;
  const PolyMatrix df = jacobian(f);
  const PolyMatrix lhs = df * complexify(j);
  const PolyMatrix rhs = substitute_matrix(complexify(jp), f) * df;
  for (int a = 0; a < lhs.size(); ++a)
    for (int b = 0; b < lhs.size(); ++b)
      record(rep, "row " + slot_name(a) + ", col " + slot_name(b), lhs(a, b) - rhs(a, b), order);
  return rep;
}

std::vector<Poly> component_system_residuals(const SimpleModelStructure& jb, const PolyMap& f) {
  const int n = f.n();
  require_same_dim(jb.n(), n, "check_component_system");
  const Matrix& b = jb.b();
  std::vector<Poly> lt_of_f;  // Lt_l(F) = sum_k b_{lk} F_k
  for (int l = 1; l < n; ++l) {
    Poly p(n);
    for (int k = 1; k < n; ++k)
      if (!b(l - 1, k - 1).is_zero()) p += f[k - 1] * b(l - 1, k - 1);
    lt_of_f.push_back(std::move(p));
  }
  const Poly dfn_bar_dzbar_n = d_z(f[n - 1], n).conj();
  std::vector<Poly> out;
  for (int j = 1; j < n; ++j) {
    Poly lt_z(n);
    for (int k = 1; k < n; ++k)
      if (!b(j - 1, k - 1).is_zero()) lt_z += Poly::z(n, k) * b(j - 1, k - 1);
    Poly e(n);
    for (int l = 1; l < n; ++l)
      if (!lt_of_f[l - 1].is_zero()) e += lt_of_f[l - 1] * d_z(f[l - 1], j);
    e -= d_zbar(f[n - 1], j).conj() * ComplexRational(0, 2);
    e -= lt_z * dfn_bar_dzbar_n;
    out.push_back(std::move(e));
  }
  return out;
}

ResidualReport check_component_system(const SimpleModelStructure& jb, const PolyMap& f) {
  ResidualReport rep;
  rep.check = "component_system";
  const auto order = derivative_order(f);
  if (undecidable(rep, order)) return rep;
  const auto res = component_system_residuals(jb, f);
  for (std::size_t j = 0; j < res.size(); ++j) record(rep, "equation j=" + std::to_string(j + 1), res[j], order);
  return rep;
}

ResidualReport check_boundary_invariance(const PolyMap& f) {
  ResidualReport rep;
  rep.check = "boundary_invariance";
  const auto order = f.truncation_order();
  if (undecidable(rep, order)) return rep;
  const Poly composed = substitute(rho(f.n()), f.components(), order);
  const BoundaryPoly reduced = reduce_mod_boundary(composed, order);
  record(rep, "rho(F) on Gamma", reduced.representative(), order);
  return rep;
}

ResidualReport check_cr_on_boundary(const ModelStructure& j, const ModelStructure& jp, const PolyMap& f) {
  const int n = f.n();
  require_same_dim(j.n(), n, "check_cr_on_boundary");
  require_same_dim(jp.n(), n, "check_cr_on_boundary");
  if (!check_boundary_invariance(f).passed()) {
    fail(ErrorKind::Precondition, "check_cr_on_boundary: F does not map Gamma into Gamma");
  }
  ResidualReport rep;
  rep.check = "cr_on_boundary";
  const auto order = derivative_order(f);
  if (undecidable(rep, order)) return rep;

  const PolyMatrix df = jacobian(f);
  const PolyMatrix jpf = substitute_matrix(complexify(jp), f);
  const Poly r = rho(n);
  std::vector<Poly> drho_at_f;  // d rho / d(slot) evaluated at F
  for (int k = 1; k <= n; ++k) {
    drho_at_f.push_back(substitute(d_z(r, k), f.components(), f.truncation_order()));
    drho_at_f.push_back(substitute(d_zbar(r, k), f.components(), f.truncation_order()));
  }
  const TangentFrame frame = tangent_frame(j);
  for (int jj = 0; jj < n - 1; ++jj) {
    const VectorField z = apply_matrix(df, frame.l[jj]);
    const std::string tag = "L" + std::to_string(jj + 1);
    Poly tangency(n);
    for (int s = 0; s < 2 * n; ++s)
      if (!z[s].is_zero()) tangency += z[s] * drho_at_f[s];
    record(rep, tag + ": tangency", reduce_mod_boundary(tangency, order).representative(), order);
    const VectorField eig = apply_matrix(jpf, z) - kI * z;
    for (int s = 0; s < 2 * n; ++s) {
      record(rep, tag + ": J'Z - iZ at " + slot_name(s), reduce_mod_boundary(eig[s], order).representative(), order);
    }
  }
  return rep;
}

FormResult check_form(const PolyMap& f) {
  const int n = f.n();
  FormResult res;
  res.up_to_degree = f.truncation_order();
  auto offend = [&](int comp, const Monomial& m, const ComplexRational& c, std::string why) {
    res.pass = false;
    res.offender = Offender{"F" + std::to_string(comp), m, c};
    res.reason = std::move(why);
    return res;
  };
  for (int j = 1; j < n; ++j) {
    for (const auto& [m, c] : f[j - 1].terms()) {
      bool ok = m.z(n - 1) == 0;
      for (int k = 0; k < n && ok; ++k) ok = m.zbar(k) == 0;
      if (!ok) return offend(j, m, c, "component must be a holomorphic function of z'");
    }
    res.holomorphic_part.push_back(f[j - 1]);
  }
  Monomial zn(n);
  zn.z(n - 1) = 1;
  ComplexRational c_coeff;
  Poly phi(n);
  Poly::Terms phi_terms;
  for (const auto& [m, c] : f[n - 1].terms()) {
    if (m == zn) {
      c_coeff = c;
      continue;
    }
    bool ok = m.zbar(n - 1) == 0;
    for (int k = 0; k < n && ok; ++k) ok = m.z(k) == 0;
    if (!ok) return offend(n, m, c, "last component must be c z_n plus an antiholomorphic function of z'");
    phi_terms.emplace(m, c);
  }
  if (!c_coeff.is_real()) return offend(n, zn, c_coeff, "coefficient of z_n must be real");
  res.c = c_coeff.re();
  res.antiholomorphic_part = Poly(n, std::move(phi_terms));
  res.pass = true;
  return res;
}

}  // namespace siegel
