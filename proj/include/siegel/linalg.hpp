#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siegel/complex_rational.hpp"

namespace siegel {

/// Small dense matrix over the Gaussian rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<ComplexRational>> rows);

  static Matrix identity(int n);
  static Matrix scalar(int n, const ComplexRational& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  ComplexRational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const ComplexRational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix transpose() const;
  Matrix conj() const;
  Matrix adjoint() const { return transpose().conj(); }
  bool is_zero() const;
  bool is_antisymmetric() const;
  bool is_hermitian() const { return *this == adjoint(); }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const ComplexRational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<ComplexRational> apply(const std::vector<ComplexRational>& v) const;
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<ComplexRational> data_;
};

ComplexRational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Solves m x = b; nullopt when m is singular.
std::optional<std::vector<ComplexRational>> solve(const Matrix& m, const std::vector<ComplexRational>& b);
/// Rank by exact elimination.
int rank(const Matrix& m);
/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
std::vector<ComplexRational> leading_minors(const Matrix& m);

}  // namespace siegel
