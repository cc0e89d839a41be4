#pragma once

// Dense matrices over a ring descriptor (IntegerRing, RationalField,
// PrimeField). At n = 56 dense storage is cheap; products skip zeros.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "e7/numeric.hpp"

namespace e7 {

template <class Ring>
class Matrix {
 public:
  using T = typename Ring::value_type;

  Matrix() = default;
  Matrix(Ring ring, int rows, int cols) : ring_(ring), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, ring.from_int(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  static Matrix identity(Ring ring, int n) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ring.from_int(1);
    return m;
  }

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix out(x.ring_, x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (is_zero(xik)) continue;
        for (int j = 0; j < y.cols_; ++j) {
          const T& ykj = y(k, j);
          if (!is_zero(ykj)) out(i, j) += xik * ykj;
        }
      }
    return out;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    x.require_same_shape(y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    x.require_same_shape(y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  Matrix scaled(const T& s) const {
    Matrix out = *this;
    for (auto& v : out.a_) v *= s;
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_; }

  Matrix transpose() const {
    Matrix out(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != ring_.from_int(i == j ? 1 : 0)) return false;
    return true;
  }

  /// Count of nonzero entries off the diagonal.
  int off_diagonal_nonzeros() const {
    int k = 0;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != j && !is_zero((*this)(i, j))) ++k;
    return k;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix apply: dimension mismatch");
    std::vector<T> out(rows_, ring_.from_int(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j)) && !is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  void require_same_shape(const Matrix& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  Ring ring_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

/// Exact determinant: Bareiss over the integers, Gaussian elimination over fields.
template <class Ring>
typename Ring::value_type determinant(const Matrix<Ring>& m) {
  using T = typename Ring::value_type;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const int n = m.rows();
  Matrix<Ring> a = m;
  const Ring& R = m.ring();
  T sign = R.from_int(1);
  if constexpr (Ring::is_field) {
    T det = R.from_int(1);
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (p < n && is_zero(a(p, c))) ++p;
      if (p == n) return R.from_int(0);
      if (p != c) {
        for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
        sign = -sign;
      }
      det *= a(c, c);
      T inv = inverse(a(c, c));
      for (int r = c + 1; r < n; ++r) {
        if (is_zero(a(r, c))) continue;
        T f = a(r, c) * inv;
        for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
      }
    }
    return sign * det;
  } else {
    T prev = R.from_int(1);
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (p < n && is_zero(a(p, c))) ++p;
      if (p == n) return R.from_int(0);
      if (p != c) {
        for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
        sign = -sign;
      }
      for (int r = c + 1; r < n; ++r) {
        for (int j = c + 1; j < n; ++j) {
          T v = a(r, j) * a(c, c) - a(r, c) * a(c, j);
          a(r, j) = v / prev;  // exact
        }
        a(r, c) = R.from_int(0);
      }
      prev = a(c, c);
    }
    return sign * a(n - 1, n - 1);
  }
}

/// Inverse over a field; throws std::domain_error when singular.
template <class Ring>
Matrix<Ring> inverse(const Matrix<Ring>& m) {
  static_assert(Ring::is_field, "inverse requires a field");
  using T = typename Ring::value_type;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const int n = m.rows();
  const Ring& R = m.ring();
  Matrix<Ring> a = m;
  Matrix<Ring> b = Matrix<Ring>::identity(R, n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) throw std::domain_error("inverse: matrix is singular");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(b(p, j), b(c, j));
      }
    T inv = inverse(a(c, c));
    for (int j = 0; j < n; ++j) {
      a(c, j) *= inv;
      b(c, j) *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      T f = a(r, c);
      for (int j = 0; j < n; ++j) {
        if (!is_zero(a(c, j))) a(r, j) -= f * a(c, j);
        if (!is_zero(b(c, j))) b(r, j) -= f * b(c, j);
      }
    }
  }
  return b;
}

template <class Ring>
Matrix<Ring> power(Matrix<Ring> m, unsigned k) {
  Matrix<Ring> acc = Matrix<Ring>::identity(m.ring(), m.rows());
  while (k) {
    if (k & 1) acc = acc * m;
    m = m * m;
    k >>= 1;
  }
  return acc;
}

}  // namespace e7
