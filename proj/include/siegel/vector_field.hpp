#pragma once

#include <vector>

#include "siegel/poly.hpp"

namespace siegel {

/// Slot of d/dz_k (bar = false) or d/dzbar_k (bar = true) in the complexified
/// frame ordering (z_1, zbar_1, z_2, zbar_2, ..., z_n, zbar_n); k is 1-based.
inline int frame_slot(int k, bool bar) { return 2 * (k - 1) + (bar ? 1 : 0); }

/// 2n x 2n matrix with polynomial entries, indexed by frame slots.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int size, int n);

  int size() const { return size_; }
  int n() const { return n_; }
  Poly& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * size_ + c]; }
  const Poly& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * size_ + c]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.size_ == b.size_ && a.data_ == b.data_;
  }

 private:
  int size_ = 0;
  int n_ = 0;
  std::vector<Poly> data_;
};

/// Polynomial vector field sum_k X^k d/dz_k + X^{kbar} d/dzbar_k.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int n);
  VectorField(int n, std::vector<Poly> components);

  static VectorField coordinate(int n, int k, bool bar);

  int n() const { return n_; }
  const Poly& operator[](int slot) const { return comps_[slot]; }
  const Poly& dz(int k) const { return comps_[frame_slot(k, false)]; }
  const Poly& dzbar(int k) const { return comps_[frame_slot(k, true)]; }
  const std::vector<Poly>& components() const { return comps_; }

  bool is_zero() const;
  /// Real iff the zbar-block is the conjugate of the z-block.
  bool is_real() const { return real_; }
  VectorField conj() const;

  /// Derivation X(f).
  Poly apply(const Poly& f) const;
  std::vector<ComplexRational> at(const Point& p) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Poly& f, const VectorField& x);
  friend VectorField operator*(const ComplexRational& c, const VectorField& x);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.comps_ == b.comps_; }

  std::string to_string() const;

 private:
  void refresh();

  int n_ = 0;
  std::vector<Poly> comps_;
  bool real_ = true;
};

/// [X, Y] f = X(Y f) - Y(X f).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// Pointwise action of a 2n x 2n matrix field on a vector field.
VectorField apply_matrix(const PolyMatrix& m, const VectorField& x);

}  // namespace siegel
