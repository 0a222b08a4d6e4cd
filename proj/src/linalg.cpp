#include "siegel/linalg.hpp"

#include <sstream>

#include "siegel/error.hpp"

namespace siegel {

Matrix::Matrix(std::initializer_list<std::initializer_list<ComplexRational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) fail(ErrorKind::Dimension, "matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(int n) { return scalar(n, 1); }

Matrix Matrix::scalar(int n, const ComplexRational& c) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t = *this;
  for (auto& x : t.data_) x = x.conj();
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_antisymmetric() const { return square() && (transpose() + *this).is_zero(); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a.cols_, b.rows_, "matrix product");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a.rows_, b.rows_, "matrix sum");
  require_same_dim(a.cols_, b.cols_, "matrix sum");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + ComplexRational(-1) * b; }

Matrix operator*(const ComplexRational& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

std::vector<ComplexRational> Matrix::apply(const std::vector<ComplexRational>& v) const {
  require_same_dim(cols_, static_cast<int>(v.size()), "matrix apply");
  std::vector<ComplexRational> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

namespace {

// Row-reduces m in place; returns rank and accumulates det sign/product.
int eliminate(Matrix& m, ComplexRational* det) {
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  ComplexRational d = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      d = 0;
      continue;
    }
    if (pivot != rank) {
      for (int k = 0; k < cols; ++k) std::swap(m(pivot, k), m(rank, k));
      d = -d;
    }
    const ComplexRational p = m(rank, c);
    d *= p;
    for (int r = rank + 1; r < rows; ++r) {
      if (m(r, c).is_zero()) continue;
      const ComplexRational f = m(r, c) / p;
      for (int k = c; k < cols; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  if (det) *det = rank == rows ? d : ComplexRational(0);
  return rank;
}

}  // namespace

ComplexRational determinant(const Matrix& m) {
  if (!m.square()) fail(ErrorKind::Dimension, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Matrix w = m;
  ComplexRational d;
  eliminate(w, &d);
  return d;
}

int rank(const Matrix& m) {
  Matrix w = m;
  return eliminate(w, nullptr);
}

std::optional<std::vector<ComplexRational>> solve(const Matrix& m, const std::vector<ComplexRational>& b) {
  if (!m.square()) fail(ErrorKind::Dimension, "solve: non-square system");
  require_same_dim(m.rows(), static_cast<int>(b.size()), "solve");
  const int n = m.rows();
  Matrix aug(n, n + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!aug(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != c)
      for (int k = 0; k <= n; ++k) std::swap(aug(pivot, k), aug(c, k));
    const ComplexRational p = aug(c, c);
    for (int k = c; k <= n; ++k) aug(c, k) /= p;
    for (int r = 0; r < n; ++r) {
      if (r == c || aug(r, c).is_zero()) continue;
      const ComplexRational f = aug(r, c);
      for (int k = c; k <= n; ++k) aug(r, k) -= f * aug(c, k);
    }
  }
  std::vector<ComplexRational> x(n);
  for (int r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) fail(ErrorKind::Dimension, "inverse of non-square matrix");
  const int n = m.rows();
  Matrix inv(n, n);
  for (int c = 0; c < n; ++c) {
    std::vector<ComplexRational> e(n);
    e[c] = 1;
    auto x = solve(m, e);
    if (!x) return std::nullopt;
    for (int r = 0; r < n; ++r) inv(r, c) = (*x)[r];
  }
  return inv;
}

std::vector<ComplexRational> leading_minors(const Matrix& m) {
  if (!m.square()) fail(ErrorKind::Dimension, "leading minors of non-square matrix");
  std::vector<ComplexRational> out;
  for (int k = 1; k <= m.rows(); ++k) {
    Matrix sub(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub(r, c) = m(r, c);
    out.push_back(determinant(sub));
  }
  return out;
}

}  // namespace siegel
