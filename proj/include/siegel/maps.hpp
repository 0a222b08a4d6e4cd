#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siegel/boundary.hpp"
#include "siegel/poly.hpp"
#include "siegel/structures.hpp"

namespace siegel {

/// Map F = (F_1, ..., F_n) with components in (z, zbar). With a truncation
/// order k every statement about the map holds modulo terms of degree > k.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(int n, std::vector<Poly> components, std::optional<int> truncation_order = std::nullopt);

  static PolyMap identity(int n);

  int n() const { return n_; }
  const std::vector<Poly>& components() const { return comps_; }
  const Poly& operator[](int j) const { return comps_[j]; }  // 0-based
  std::optional<int> truncation_order() const { return order_; }
  bool truncated() const { return order_.has_value(); }

  PolyMap truncated_to(int k) const;
  Point evaluate(const Point& z) const;
  std::vector<std::complex<double>> evaluate(std::span<const std::complex<double>> z) const;
  bool fixes_origin() const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  int n_ = 0;
  std::vector<Poly> comps_;
  std::optional<int> order_;
};

/// f o g. A truncated inner map must fix the origin when the outer map is truncated.
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// Complexified Jacobian: rows are target slots (w_k, wbar_k), columns source slots.
PolyMatrix jacobian(const PolyMap& f);

enum class Verdict { Pass, Fail, Undecided };
const char* to_string(Verdict v);

struct Residual {
  std::string label;
  Poly value;
};

struct Offender {
  std::string label;
  Monomial monomial;
  ComplexRational coefficient;
};

/// Residual polynomials of one family of identities; the verdict is Pass iff all
/// of them vanish (up to the decided degree for truncated inputs).
struct ResidualReport {
  std::string check;
  Verdict verdict = Verdict::Pass;
  std::vector<Residual> residuals;        // nonzero residuals only
  std::optional<Offender> first_offender;
  std::optional<int> decided_to_degree;   // set for truncated inputs
  std::string note;
  std::size_t identities_checked = 0;
  bool passed() const { return verdict == Verdict::Pass; }
};

/// dF o J(z) - J'(F(z)) o dF entrywise.
ResidualReport check_pseudoholomorphic(const ModelStructure& j, const ModelStructure& jp, const PolyMap& f);

/// The n-1 scalar equations of the zbar_n-row / z_j-column block for J^B on both sides:
///   sum_l Lt_l(F) dF_l/dz_j - 2i d(conj F_n)/dz_j - Lt_j(z) d(conj F_n)/dzbar_n.
ResidualReport check_component_system(const SimpleModelStructure& jb, const PolyMap& f);
/// The residual polynomials themselves, in order j = 1..n-1 (not truncated).
std::vector<Poly> component_system_residuals(const SimpleModelStructure& jb, const PolyMap& f);

/// rho o F reduced modulo rho = 0.
ResidualReport check_boundary_invariance(const PolyMap& f);

/// For each frame field L_j of (Gamma, J): Z = dF(L_j) must be tangent to Gamma
/// and satisfy J'(F) Z = i Z, both modulo rho = 0.
ResidualReport check_cr_on_boundary(const ModelStructure& j, const ModelStructure& jp, const PolyMap& f);

struct FormResult {
  bool pass = false;
  std::vector<Poly> holomorphic_part;  // F' = (F_1..F_{n-1}), functions of z'
  mpq_class c;                         // coefficient of z_n in F_n
  std::optional<Poly> antiholomorphic_part;  // phi(zbar')
  std::optional<Offender> offender;
  std::string reason;
  std::optional<int> up_to_degree;
};

/// Shape test F = (F'(z'), c z_n + phi(zbar')) with c real.
FormResult check_form(const PolyMap& f);

}  // namespace siegel
