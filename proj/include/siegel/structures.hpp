#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siegel/linalg.hpp"
#include "siegel/poly.hpp"
#include "siegel/vector_field.hpp"

namespace siegel {

/// Coefficients of one bottom-row entry
///   Ltilde_{2n,2i-1}(z) = sum_l (alpha_l z_l + beta_l zbar_l),  l = 1..n-1.
struct LtildeRow {
  std::vector<ComplexRational> alpha;
  std::vector<ComplexRational> beta;
  friend bool operator==(const LtildeRow&, const LtildeRow&) = default;
};

/// J = J_st + L(z) with L supported on the last two real rows and linear in
/// (z', zbar'). Stored through the complexified bottom-row coefficients.
class ModelStructure {
 public:
  ModelStructure(int n, std::vector<LtildeRow> rows);
  static ModelStructure standard(int n);

  int n() const { return n_; }
  const std::vector<LtildeRow>& rows() const { return rows_; }
  /// Entry of the z̄_n row at column z_i (1-based i < n).
  Poly ltilde(int i) const;

  friend bool operator==(const ModelStructure&, const ModelStructure&) = default;

 private:
  int n_;
  std::vector<LtildeRow> rows_;
};

/// J^B for an antisymmetric (n-1)x(n-1) matrix B:
///   J^B(d/dz_j) = i d/dz_j + sum_k b_{jk} z_k d/dzbar_n.
class SimpleModelStructure {
 public:
  SimpleModelStructure(int n, Matrix b);

  int n() const { return n_; }
  const Matrix& b() const { return b_; }
  ModelStructure to_model() const;
  bool integrable() const { return b_.is_zero(); }

  friend bool operator==(const SimpleModelStructure&, const SimpleModelStructure&) = default;

 private:
  int n_;
  Matrix b_;
};

/// Complexified matrix of J in the frame ordering (z_1, zbar_1, ..., z_n, zbar_n).
PolyMatrix complexify(const ModelStructure& j);

struct EntryFailure {
  int row;  // 1-based, as in the matrix display
  int col;
  std::string what;
  std::string found;
};

struct StructureReport {
  bool pass = true;
  std::vector<EntryFailure> failures;
};

/// Shape, conjugation symmetry and J^2 = -I for a complexified model matrix.
StructureReport verify_complexified(const PolyMatrix& jc);
StructureReport verify_structure(const ModelStructure& j);

/// Holomorphic tangent frame of Gamma: L_j = d/dz_j + dzn_coeff_j d/dz_n + dzbarn_coeff_j d/dzbar_n,
/// and the transverse field T = i(d/dz_n - d/dzbar_n).
struct TangentFrame {
  std::vector<VectorField> l;
  VectorField t;
  std::vector<Poly> dzn_coeff;     // -2 zbar_j - dzbarn_coeff_j
  std::vector<Poly> dzbarn_coeff;  // -(i/2) Ltilde_{2n,2j-1}
};

TangentFrame tangent_frame(const ModelStructure& j);

bool is_simple(const ModelStructure& j);
/// Fails when some beta coefficient is nonzero or the alpha block is not antisymmetric.
SimpleModelStructure as_simple(const ModelStructure& j);

VectorField apply_J(const ModelStructure& j, const VectorField& x);

struct NijenhuisEntry {
  int slot_x;
  int slot_y;
  VectorField value;
};

/// N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y] on all pairs of complexified
/// coordinate fields; returns only the nonzero values.
std::vector<NijenhuisEntry> nijenhuis_tensor(const ModelStructure& j);
bool nijenhuis_vanishes(const ModelStructure& j);

}  // namespace siegel
