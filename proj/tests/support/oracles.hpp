#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "siegel/autgroup.hpp"
#include "siegel/maps.hpp"
#include "siegel/structures.hpp"

namespace siegel::testing {

// Independent reference computations, written against real coordinates
// x = (x_1, y_1, ..., x_n, y_n) and plain floating point.

/// Real 2n x 2n matrix of J = J_st + L(z) at x. Column 2k is J d/dx_k, column 2k+1 is J d/dy_k.
inline std::vector<double> real_structure(const ModelStructure& j, const std::vector<double>& x) {
  const int n = j.n();
  const int size = 2 * n;
  std::vector<double> m(static_cast<std::size_t>(size) * size, 0.0);
  auto at = [&](int r, int c) -> double& { return m[static_cast<std::size_t>(r) * size + c]; };
  for (int k = 0; k < n; ++k) {
    at(2 * k + 1, 2 * k) = 1;   // J d/dx = d/dy
    at(2 * k, 2 * k + 1) = -1;  // J d/dy = -d/dx
  }
  std::vector<std::complex<double>> z(n);
  for (int k = 0; k < n; ++k) z[k] = {x[2 * k], x[2 * k + 1]};
  for (int i = 0; i < n - 1; ++i) {
    std::complex<double> lt = 0;
    const auto& row = j.rows()[i];
    for (int l = 0; l < n - 1; ++l) lt += row.alpha[l].to_complex() * z[l] + row.beta[l].to_complex() * std::conj(z[l]);
    const int xn = 2 * (n - 1), yn = xn + 1;
    at(xn, 2 * i) += lt.real();
    at(yn, 2 * i) -= lt.imag();
    at(xn, 2 * i + 1) -= lt.imag();
    at(yn, 2 * i + 1) -= lt.real();
  }
  return m;
}

/// theta = J^t grad rho for rho = x_n + sum_{j<n} (x_j^2 + y_j^2).
inline std::vector<double> levi_theta(const ModelStructure& j, const std::vector<double>& x) {
  const int size = 2 * j.n();
  std::vector<double> grad(size, 0.0);
  for (int k = 0; k < size - 2; ++k) grad[k] = 2 * x[k];
  grad[size - 2] = 1;
  const auto m = real_structure(j, x);
  std::vector<double> theta(size, 0.0);
  for (int b = 0; b < size; ++b)
    for (int a = 0; a < size; ++a) theta[b] += grad[a] * m[static_cast<std::size_t>(a) * size + b];
  return theta;
}

/// Levi form of the real tangent vector u at x by central differences:
///   L(u) = -d theta(u, J u).
inline double levi_fd(const ModelStructure& j, const std::vector<double>& x, const std::vector<double>& u,
                      double h = 1e-5) {
  const int size = 2 * j.n();
  std::vector<std::vector<double>> dtheta(size);  // dtheta[a][b] = d_a theta_b
  for (int a = 0; a < size; ++a) {
    auto xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    const auto tp = levi_theta(j, xp), tm = levi_theta(j, xm);
    dtheta[a].resize(size);
    for (int b = 0; b < size; ++b) dtheta[a][b] = (tp[b] - tm[b]) / (2 * h);
  }
  const auto m = real_structure(j, x);
  std::vector<double> ju(size, 0.0);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) ju[r] += m[static_cast<std::size_t>(r) * size + c] * u[c];
  double s = 0;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) s += (dtheta[a][b] - dtheta[b][a]) * u[a] * ju[b];
  return -s;
}

/// Levi matrix at the origin on the basis d/dx_k (the frame L_k + conj L_k there), by polarization.
inline std::vector<std::complex<double>> levi_matrix_fd_origin(const ModelStructure& j) {
  const int n = j.n(), m = n - 1, size = 2 * n;
  const std::vector<double> x(size, 0.0);
  auto ex = [&](int k) {
    std::vector<double> u(size, 0.0);
    u[2 * k] = 1;
    return u;
  };
  auto ey = [&](int k) {
    std::vector<double> u(size, 0.0);
    u[2 * k + 1] = 1;
    return u;
  };
  std::vector<std::complex<double>> out(static_cast<std::size_t>(m) * m);
  std::vector<double> diag(m);
  for (int a = 0; a < m; ++a) diag[a] = levi_fd(j, x, ex(a));
  for (int a = 0; a < m; ++a) {
    out[static_cast<std::size_t>(a) * m + a] = diag[a];
    for (int b = a + 1; b < m; ++b) {
      auto u = ex(a), v = ex(b), w = ey(b);
      for (int k = 0; k < size; ++k) {
        u[k] += v[k];
        v[k] = ex(a)[k] + w[k];
      }
      const double re = (levi_fd(j, x, u) - diag[a] - diag[b]) / 2;
      const double im = (levi_fd(j, x, v) - diag[a] - diag[b]) / 2;
      out[static_cast<std::size_t>(a) * m + b] = {re, im};
      out[static_cast<std::size_t>(b) * m + a] = {re, -im};
    }
  }
  return out;
}

struct JetMatch {
  bool exists = false;
  std::string reason;
};

/// Exhaustive search for an automorphism with the 2-jet of F at 0. The unknowns
/// (zeta, A, c) of a candidate are pinned by the coefficients of F of order <= 1
/// (zeta = F(0), A = d F'/dz', c = dF_n/dz_n), so the search space is a single
/// point; the remaining order-1 and order-2 coefficients and the invariants then
/// decide existence.
inline JetMatch brute_force_jet_match(const PolyMap& f, const SimpleModelStructure& b) {
  const int n = f.n(), m = n - 1;
  Point zeta(n);
  for (int j = 0; j < n; ++j) zeta[j] = f[j].constant_term();
  Matrix a(m, m);
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < m; ++l) a(j, l) = d_z(f[j], l + 1).constant_term();
  const ComplexRational c = d_z(f[n - 1], n).constant_term();
  if (!c.is_real()) return {false, "dF_n/dz_n(0) is not real"};

  // candidate map Psi_zeta(A z', c z_n), built without validation
  std::vector<Poly> az(m, Poly(n));
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < m; ++l) az[j] += a(j, l) * Poly::z(n, l + 1);
  std::vector<Poly> g;
  for (int j = 0; j < m; ++j) g.push_back(az[j] + Poly::constant(n, zeta[j]));
  Poly gn = c * Poly::z(n, n) + Poly::constant(n, zeta[n - 1]);
  Poly bz(n);
  for (int j = 0; j < m; ++j) {
    gn -= ComplexRational(2) * zeta[j].conj() * az[j];
    for (int k = 0; k < m; ++k) bz += b.b()(j, k) * zeta[k] * az[j];
  }
  gn += ComplexRational(mpq_class(1, 2)) * ComplexRational::i() * (bz + bz.conj());
  g.push_back(gn);
  for (int j = 0; j < n; ++j)
    if (f[j].truncated(2) != g[j].truncated(2))
      return {false, "2-jet of F differs from the only candidate in component " + std::to_string(j + 1)};
  const auto v = automorphism_violations(b, a, c.re(), zeta);
  if (!v.empty()) return {false, "only candidate violates: " + v.front()};
  return {true, ""};
}

}  // namespace siegel::testing
