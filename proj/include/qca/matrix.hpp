/**
 * @file matrix.hpp
 * @brief Dense matrices over an exact field, with elimination-based solvers.
 *
 * The entry type F needs value-initialized zero, ring arithmetic, equality,
 * and an ADL-visible invert_elem(F) for the solver routines.  Everything is
 * exact: pivoting just takes the first nonzero entry, and a vanishing pivot
 * column raises SingularMatrixError rather than ever approximating.
 */
#pragma once

#include <string>
#include <vector>

#include "qca/common.hpp"
#include "qca/rational.hpp"  // declares invert_elem(Rational) for the solvers

namespace qca {

template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("Matrix: negative dimension");
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), F());
  }

  static Matrix identity(int n, const F& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& operator()(int i, int j) { return a_[index(i, j)]; }
  const F& operator()(int i, int j) const { return a_[index(i, j)]; }

  bool is_zero() const {
    const F zero{};
    for (const auto& x : a_)
      if (!(x == zero)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o, "+");
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o, "-");
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw DimensionError("Matrix: product shape mismatch " + shape_str() + " * " +
                           o.shape_str());
    const F zero{};
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const F& aik = (*this)(i, k);
        if (aik == zero) continue;  // operand order preserved: entries may not commute
        for (int j = 0; j < o.cols_; ++j) {
          const F& bkj = o(k, j);
          if (bkj == zero) continue;
          r(i, j) += aik * bkj;
        }
      }
    }
    return r;
  }

  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
  Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

  /// Entrywise s * M and M * s (kept separate for noncommutative F).
  Matrix scaled_left(const F& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = s * x;
    return r;
  }
  Matrix scaled_right(const F& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  F trace() const {
    require_square("trace");
    F t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Rows [r0, r1) and columns [c0, c1) as a new matrix.
  Matrix block(int r0, int r1, int c0, int c1) const {
    if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
      throw DimensionError("Matrix::block: bad range");
    Matrix r(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
      for (int j = c0; j < c1; ++j) r(i - r0, j - c0) = (*this)(i, j);
    return r;
  }

  void set_block(int r0, int c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_ || r0 < 0 || c0 < 0)
      throw DimensionError("Matrix::set_block: out of range");
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }

  template <class Fn>
  auto map(Fn&& f) const {
    using G = std::decay_t<decltype(f(a_.front()))>;
    Matrix<G> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  /// Solve A X = B by Gauss-Jordan elimination; A must be square and
  /// invertible (SingularMatrixError otherwise, reporting the failing pivot).
  Matrix solve(Matrix b) const {
    require_square("solve");
    if (b.rows_ != rows_) throw DimensionError("Matrix::solve: rhs row mismatch");
    Matrix a = *this;
    const F zero{};
    for (int col = 0; col < cols_; ++col) {
      int piv = -1;
      for (int i = col; i < rows_; ++i)
        if (!(a(i, col) == zero)) {
          piv = i;
          break;
        }
      if (piv < 0) throw SingularMatrixError("matrix is singular", col);
      if (piv != col) {
        a.swap_rows(piv, col);
        b.swap_rows(piv, col);
      }
      const F pinv = invert_elem(a(col, col));
      a.scale_row(col, pinv);
      b.scale_row(col, pinv);
      for (int i = 0; i < rows_; ++i) {
        if (i == col) continue;
        const F f = a(i, col);
        if (f == zero) continue;
        a.add_scaled_row(i, col, f);
        b.add_scaled_row(i, col, f);
      }
    }
    return b;
  }

  Matrix inverse() const {
    require_square("inverse");
    F one{};
    bool found = false;
    // Identity needs a multiplicative unit; derive it from a pivot inverse so
    // shaped entry types (if any) keep working.
    for (int i = 0; i < rows_ && !found; ++i)
      for (int j = 0; j < cols_ && !found; ++j)
        if (!((*this)(i, j) == F())) {
          one = invert_elem((*this)(i, j)) * (*this)(i, j);
          found = true;
        }
    if (!found) throw SingularMatrixError("matrix is singular", 0);
    return solve(identity(rows_, one));
  }

  int rank() const {
    Matrix a = *this;
    const F zero{};
    int rk = 0;
    for (int col = 0; col < cols_ && rk < rows_; ++col) {
      int piv = -1;
      for (int i = rk; i < rows_; ++i)
        if (!(a(i, col) == zero)) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      a.swap_rows(piv, rk);
      const F pinv = invert_elem(a(rk, col));
      a.scale_row(rk, pinv);
      for (int i = rk + 1; i < rows_; ++i) {
        const F f = a(i, col);
        if (!(f == zero)) a.add_scaled_row(i, rk, f);
      }
      ++rk;
    }
    return rk;
  }

 private:
  size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw IndexError("Matrix: index (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") outside " + shape_str());
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }

  void check_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string("Matrix: shape mismatch for ") + op + ": " +
                           shape_str() + " vs " + o.shape_str());
  }

  void require_square(const char* op) const {
    if (!is_square())
      throw DimensionError(std::string("Matrix::") + op + ": not square: " + shape_str());
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  void swap_rows(int i, int j) {
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void scale_row(int i, const F& s) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = s * (*this)(i, k);
  }
  /// row i -= f * row j
  void add_scaled_row(int i, int j, const F& f) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) -= f * (*this)(j, k);
  }

  int rows_, cols_;
  std::vector<F> a_;
};

/// Kronecker product; row (i,k) column (j,l) gets a(i,j) * b(k,l).
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> r(a.rows() * b.rows(), a.cols() * b.cols());
  const F zero{};
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == zero) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          if (b(k, l) == zero) continue;
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    }
  return r;
}

/// Zero matrix of the same shape (Laurent-series customization point).
template <class F>
Matrix<F> zero_like(const Matrix<F>& m) {
  return Matrix<F>(m.rows(), m.cols());
}

/// Matrix inverse (Laurent-series customization point).
template <class F>
Matrix<F> invert_elem(const Matrix<F>& m) {
  return m.inverse();
}

/// Entrywise scaling by a coefficient (Laurent-series customization point).
template <class F, class S>
Matrix<F> scale_elem(const Matrix<F>& m, const S& s) {
  return m.map([&](const F& x) { return x * F(s); });
}

}  // namespace qca
