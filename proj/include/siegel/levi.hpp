#pragma once

#include <optional>
#include <vector>

#include "siegel/linalg.hpp"
#include "siegel/structures.hpp"
#include "siegel/vector_field.hpp"

namespace siegel {

/// Levi form J* d rho [X, JX] at p for a real field X lying in H^J Gamma.
/// The value is real; it is returned as a rational.
mpq_class levi_form(const ModelStructure& j, const VectorField& x, const Point& p);

/// Checks that X is real and that X rho and (JX) rho vanish on Gamma.
bool in_complex_tangent(const ModelStructure& j, const VectorField& x);

struct LeviReport {
  Point point;
  Matrix matrix;                    // Hermitian, in the basis L_1..L_{n-1}
  std::vector<mpq_class> minors;    // leading principal minors
  bool positive = false;
  /// Frame coefficients v with L(Re sum v_j L_j) <= 0; present iff !positive.
  std::optional<std::vector<ComplexRational>> witness;
  std::optional<mpq_class> witness_value;
};

/// Hermitian Levi matrix on the frame at p, assembled by polarization of the
/// real-field Levi form, with an exact Sylvester positivity verdict.
LeviReport levi_matrix(const ModelStructure& j, const Point& p);

/// Real field v_j L_j + conj(v_j L_j) summed over j.
VectorField real_frame_field(const TangentFrame& frame, const std::vector<ComplexRational>& v);

}  // namespace siegel
