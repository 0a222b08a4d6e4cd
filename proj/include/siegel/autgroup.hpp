#pragma once

#include <optional>
#include <string>

#include "siegel/linalg.hpp"
#include "siegel/maps.hpp"
#include "siegel/structures.hpp"

namespace siegel {

/// Element of Aut(H, J^B) in rational normal form
///   G(z) = Psi_zeta( A z', c z_n ),
/// where Psi_zeta(w) = (w' + zeta', w_n + zeta_n - 2<w', zeta'> + i Re B(w', zeta')).
/// Invariants: A^t conj(A) = c I, A^t B A = c B, c > 0, rho(zeta) = 0.
class Automorphism {
 public:
  /// Validates all invariants; throws Error(Validation) naming the failed identity.
  Automorphism(SimpleModelStructure b, Matrix a, mpq_class c, Point zeta);

  static Automorphism identity(const SimpleModelStructure& b);

  int n() const { return b_.n(); }
  const SimpleModelStructure& structure() const { return b_; }
  const Matrix& a() const { return a_; }
  const mpq_class& c() const { return c_; }
  const Point& zeta() const { return zeta_; }

  Point apply(const Point& z) const;
  std::vector<std::complex<double>> apply(std::span<const std::complex<double>> z) const;
  PolyMap as_polymap() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  SimpleModelStructure b_;
  Matrix a_;
  mpq_class c_;
  Point zeta_;
};

/// Returns the list of violated invariants (empty when valid).
std::vector<std::string> automorphism_violations(const SimpleModelStructure& b, const Matrix& a, const mpq_class& c,
                                                 const Point& zeta);

/// Lambda_tau with tau = s^2: z -> (z'/s, z_n/s^2).
Automorphism make_dilation(const mpq_class& s, const SimpleModelStructure& b);
Automorphism make_translation(const Point& zeta, const SimpleModelStructure& b);
/// Phi_A for A^t conj(A) = I, A^t B A = B.
Automorphism make_isotropy(const Matrix& a_unit, const SimpleModelStructure& b);

/// Composite g1 o g2 (apply g2 first).
Automorphism compose(const Automorphism& g1, const Automorphism& g2);
Automorphism invert(const Automorphism& g);

/// G with G(p) = q, built as Psi_q o Psi_p^{-1}.
Automorphism transitivity_witness(const Point& p, const Point& q, const SimpleModelStructure& b);

/// Membership in the isotropy group of -1 = (0, ..., 0, -1). Refused (Precondition)
/// for integrable J^B, where the group is larger than the rational normal form shows.
bool fixes_minus_one(const Automorphism& g);

/// Display of G as Phi_{A'} o Lambda_{1/c} o Psi: A' = A / sqrt(c), tau = 1/c.
struct FactoredView {
  std::optional<mpq_class> sqrt_c;   // present iff sqrt(c) is rational
  std::optional<Matrix> a_unit;      // A / sqrt(c), present iff sqrt_c
  mpq_class tau;                     // 1 / c
  double sqrt_c_approx = 0;
};
FactoredView factored_view(const Automorphism& g);

}  // namespace siegel
