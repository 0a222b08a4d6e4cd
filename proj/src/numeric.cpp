#include "siegel/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "siegel/error.hpp"

namespace siegel::numeric {

namespace {

using cd = std::complex<double>;

std::vector<cd> eval_matrix(const PolyMatrix& m, const CPoint& z) {
  std::vector<cd> out(static_cast<std::size_t>(m.size()) * m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) {
      const Poly& p = m(r, c);
      if (!p.is_zero()) out[static_cast<std::size_t>(r) * m.size() + c] = p.evaluate(z);
    }
  return out;
}

std::vector<cd> matmul(const std::vector<cd>& a, const std::vector<cd>& b, int size) {
  std::vector<cd> out(a.size());
  for (int r = 0; r < size; ++r)
    for (int k = 0; k < size; ++k) {
      const cd x = a[static_cast<std::size_t>(r) * size + k];
      if (x == cd{}) continue;
      for (int c = 0; c < size; ++c) out[static_cast<std::size_t>(r) * size + c] += x * b[static_cast<std::size_t>(k) * size + c];
    }
  return out;
}

}  // namespace

CPoint to_complex(const Point& p) {
  CPoint out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(x.to_complex());
  return out;
}

double rho(const CPoint& z) {
  double r = z.back().real();
  for (std::size_t j = 0; j + 1 < z.size(); ++j) r += std::norm(z[j]);
  return r;
}

CPoint random_point(int n, Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  CPoint z(n);
  for (auto& x : z) x = {u(rng), u(rng)};
  return z;
}

CPoint random_boundary_point(int n, Rng& rng, double radius) {
  CPoint z = random_point(n, rng, radius);
  double s = 0;
  for (int j = 0; j < n - 1; ++j) s += std::norm(z[j]);
  z[n - 1] = {-s, z[n - 1].imag()};
  return z;
}

std::vector<CPoint> boundary_samples(int n, int count, std::uint64_t seed, double radius) {
  Rng rng(seed);
  std::vector<CPoint> out;
  for (int k = 0; k < count; ++k) out.push_back(random_boundary_point(n, rng, radius));
  return out;
}

std::vector<CPoint> samples(int n, int count, std::uint64_t seed, double radius) {
  Rng rng(seed);
  std::vector<CPoint> out;
  for (int k = 0; k < count; ++k) out.push_back(random_point(n, rng, radius));
  return out;
}

std::vector<cd> complexified_at(const PolyMatrix& jc, const CPoint& z) { return eval_matrix(jc, z); }

PseudoholomorphicProbe::PseudoholomorphicProbe(const ModelStructure& j, const ModelStructure& jp, const PolyMap& f)
    : f_(f), jac_(jacobian(f)), jc_(complexify(j)), jcp_(complexify(jp)) {
  require_same_dim(j.n(), f.n(), "pseudoholomorphic probe");
  require_same_dim(jp.n(), f.n(), "pseudoholomorphic probe");
}

double PseudoholomorphicProbe::operator()(const CPoint& z) const {
  const int size = jac_.size();
  const CPoint w = f_.evaluate(std::span<const cd>(z));
  const auto df = eval_matrix(jac_, z);
  const auto lhs = matmul(df, eval_matrix(jc_, z), size);
  const auto rhs = matmul(eval_matrix(jcp_, w), df, size);
  double m = 0;
  for (std::size_t k = 0; k < lhs.size(); ++k) m = std::max(m, std::abs(lhs[k] - rhs[k]));
  return m;
}

ComponentSystemProbe::ComponentSystemProbe(const SimpleModelStructure& jb, const PolyMap& f)
    : jb_(jb), f_(f), jac_(jacobian(f)) {
  require_same_dim(jb.n(), f.n(), "component system probe");
}

double ComponentSystemProbe::operator()(const CPoint& z) const {
  const int n = f_.n();
  const Matrix& b = jb_.b();
  const CPoint w = f_.evaluate(std::span<const cd>(z));
  auto lt = [&](const CPoint& p, int l) {
    cd s = 0;
    for (int k = 0; k < n - 1; ++k) s += b(l, k).to_complex() * p[k];
    return s;
  };
  auto d = [&](int comp, int var, bool bar) {
    return jac_(frame_slot(comp, false), frame_slot(var, bar)).evaluate(z);
  };
  const cd dfn_dzn = d(n, n, false);
  double m = 0;
  for (int j = 1; j < n; ++j) {
    cd e = 0;
    for (int l = 1; l < n; ++l) e += lt(w, l - 1) * d(l, j, false);
    e -= cd(0, 2) * std::conj(d(n, j, true));
    e -= lt(z, j - 1) * std::conj(dfn_dzn);
    m = std::max(m, std::abs(e));
  }
  return m;
}

double boundary_defect(const PolyMap& f, const CPoint& z) {
  return std::abs(rho(f.evaluate(std::span<const cd>(z))));
}

double automorphism_rho_defect(const Automorphism& g, const CPoint& z) {
  return std::abs(rho(g.apply(std::span<const cd>(z))) - g.c().get_d() * rho(z));
}

double frame_defect(const ModelStructure& j, const TangentFrame& frame, const CPoint& z) {
  const int n = j.n();
  const int size = 2 * n;
  const auto jz = eval_matrix(complexify(j), z);
  double m = 0;
  for (const auto& l : frame.l) {
    std::vector<cd> v(size);
    for (int s = 0; s < size; ++s) v[s] = l[s].is_zero() ? cd{} : l[s].evaluate(z);
    cd lrho = 0.5 * (v[frame_slot(n, false)] + v[frame_slot(n, true)]);
    for (int k = 1; k < n; ++k) lrho += v[frame_slot(k, false)] * std::conj(z[k - 1]) + v[frame_slot(k, true)] * z[k - 1];
    m = std::max(m, std::abs(lrho));
    for (int r = 0; r < size; ++r) {
      cd jv = 0;
      for (int c = 0; c < size; ++c) jv += jz[static_cast<std::size_t>(r) * size + c] * v[c];
      m = std::max(m, std::abs(jv - cd(0, 1) * v[r]));
    }
  }
  return m;
}

}  // namespace siegel::numeric
