#include "siegel/boundary.hpp"

#include "siegel/error.hpp"

namespace siegel {

Poly rho(int n) {
  if (n < 1) fail(ErrorKind::Precondition, "rho: n must be positive");
  const ComplexRational half(mpq_class(1, 2));
  Poly r = (Poly::z(n, n) + Poly::zbar(n, n)) * half;
  for (int j = 1; j < n; ++j) r += Poly::z(n, j) * Poly::zbar(n, j);
  return r;
}

bool on_boundary(const Point& p) {
  if (p.empty()) fail(ErrorKind::Precondition, "on_boundary: empty point");
  return rho(static_cast<int>(p.size())).evaluate(p).is_zero();
}

BoundaryPoly::BoundaryPoly(Poly representative) : rep_(std::move(representative)) {
  const int n = rep_.n();
  for (const auto& [m, c] : rep_.terms()) {
    if (m.zbar(n - 1) != 0) fail(ErrorKind::Internal, "boundary normal form must not contain zbar_n");
  }
}

ComplexRational BoundaryPoly::coefficient(const MultiIndex& alpha_prime, const MultiIndex& beta_prime,
                                          int s_power) const {
  const int n = rep_.n();
  if (static_cast<int>(alpha_prime.size()) != n - 1 || static_cast<int>(beta_prime.size()) != n - 1) {
    fail(ErrorKind::Dimension, "boundary coefficient: expected multi-indices of length n-1");
  }
  MultiIndex a = alpha_prime, b = beta_prime;
  a.push_back(s_power);
  b.push_back(0);
  return rep_.coefficient(a, b);
}

Poly BoundaryPoly::to_poly() const {
  const int n = rep_.n();
  std::vector<Poly> images;
  for (int j = 1; j <= n; ++j) images.push_back(j < n ? Poly::z(n, j) : Poly::z(n, n) - Poly::zbar(n, n));
  for (int j = 1; j <= n; ++j) images.push_back(Poly::zbar(n, j));
  return substitute_vars(rep_, images);
}

BoundaryPoly reduce_mod_boundary(const Poly& p, std::optional<int> degree_bound) {
  // z_n -> s/2 - |z'|^2 and zbar_n -> -s/2 - |z'|^2, with s held in the z_n slot.
  const int n = p.n();
  const ComplexRational half(mpq_class(1, 2));
  Poly norm(n);
  for (int j = 1; j < n; ++j) norm += Poly::z(n, j) * Poly::zbar(n, j);
  const Poly s = Poly::z(n, n);
  std::vector<Poly> images;
  for (int j = 1; j <= n; ++j) images.push_back(j < n ? Poly::z(n, j) : s * half - norm);
  for (int j = 1; j <= n; ++j) images.push_back(j < n ? Poly::zbar(n, j) : -(s * half) - norm);
  return BoundaryPoly(substitute_vars(p, images, degree_bound));
}

}  // namespace siegel
