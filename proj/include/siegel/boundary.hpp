#pragma once

#include "siegel/poly.hpp"

namespace siegel {

/// Defining function of the Siegel half-plane: Re z_n + |z'|^2,
/// written as (z_n + zbar_n)/2 + sum_{j<n} z_j zbar_j.
Poly rho(int n);

/// True iff rho(p) == 0 exactly.
bool on_boundary(const Point& p);

/// A polynomial restricted to Gamma = {rho = 0}, in normal form.
///
/// Re z_n is eliminated through z_n + zbar_n = -2|z'|^2. The representative is a
/// Poly in z', zbar' and s = z_n - zbar_n, with s stored in the z_n slot (the
/// zbar_n slot is always empty). Two polynomials agree on Gamma iff their
/// normal forms are equal.
class BoundaryPoly {
 public:
  explicit BoundaryPoly(Poly representative);

  int n() const { return rep_.n(); }
  const Poly& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  /// Coefficient of z'^alpha' zbar'^beta' s^k.
  ComplexRational coefficient(const MultiIndex& alpha_prime, const MultiIndex& beta_prime, int s_power = 0) const;

  /// Back to an ordinary polynomial in (z, zbar) by s -> z_n - zbar_n; it agrees
  /// with the reduced input on Gamma.
  Poly to_poly() const;
  BoundaryPoly truncated(int k) const { return BoundaryPoly(rep_.truncated(k)); }

  friend bool operator==(const BoundaryPoly& a, const BoundaryPoly& b) { return a.rep_ == b.rep_; }

 private:
  Poly rep_;
};

BoundaryPoly reduce_mod_boundary(const Poly& p, std::optional<int> degree_bound = std::nullopt);

}  // namespace siegel
