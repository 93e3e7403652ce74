/**
 * @file sparse.hpp
 * @brief Row-sparse matrices for the cleared-numerator verification path.
 *
 * The braid/exchange checks multiply operators whose matrices have only a few
 * entries per row, on spaces of dimension in the hundreds.  This container
 * keeps each row as a sorted (column, value) list; multiplication uses a
 * dense scratch row so the cost is proportional to the number of elementary
 * products actually performed.  Works for any value type with value-
 * initialized zero, +, *, and ==; with LPoly values the entries may be
 * noncommutative-safe too (operand order is preserved).
 */
#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "qca/common.hpp"
#include "qca/matrix.hpp"
#include "qca/shape.hpp"

namespace qca {

template <class T>
class SparseMat {
 public:
  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("SparseMat: negative dimension");
    r_.resize(static_cast<size_t>(rows));
  }

  static SparseMat identity(int n, const T& one) {
    SparseMat m(n, n);
    if (one == T()) return m;  // keep the no-stored-zeros invariant
    for (int i = 0; i < n; ++i) m.r_[static_cast<size_t>(i)].emplace_back(i, one);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long nnz() const {
    long long n = 0;
    for (const auto& row : r_) n += static_cast<long long>(row.size());
    return n;
  }

  /// Accumulate v into entry (i, j), keeping the row sorted.
  void add(int i, int j, const T& v) {
    check(i, j);
    if (v == T()) return;
    auto& row = r_[static_cast<size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) {
      it->second = it->second + v;
      if (it->second == T()) row.erase(it);
    } else {
      row.insert(it, {j, v});
    }
  }

  T at(int i, int j) const {
    check(i, j);
    const auto& row = r_[static_cast<size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) return it->second;
    return T();
  }

  const std::vector<std::pair<int, T>>& row(int i) const {
    if (i < 0 || i >= rows_) throw IndexError("SparseMat::row: out of range");
    return r_[static_cast<size_t>(i)];
  }

  SparseMat operator*(const SparseMat& o) const {
    if (cols_ != o.rows_) throw DimensionError("SparseMat: product shape mismatch");
    SparseMat out(rows_, o.cols_);
    std::vector<T> scratch(static_cast<size_t>(o.cols_));
    std::vector<int> touched;
    std::vector<char> seen(static_cast<size_t>(o.cols_), 0);
    for (int i = 0; i < rows_; ++i) {
      touched.clear();
      for (const auto& [k, a] : r_[static_cast<size_t>(i)]) {
        for (const auto& [j, b] : o.r_[static_cast<size_t>(k)]) {
          if (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            touched.push_back(j);
            scratch[static_cast<size_t>(j)] = a * b;
          } else {
            scratch[static_cast<size_t>(j)] = scratch[static_cast<size_t>(j)] + a * b;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& orow = out.r_[static_cast<size_t>(i)];
      for (int j : touched) {
        if (!(scratch[static_cast<size_t>(j)] == T()))
          orow.emplace_back(j, std::move(scratch[static_cast<size_t>(j)]));
        scratch[static_cast<size_t>(j)] = T();
        seen[static_cast<size_t>(j)] = 0;
      }
    }
    return out;
  }

  SparseMat operator+(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("SparseMat: sum shape mismatch");
    SparseMat out = *this;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : o.r_[static_cast<size_t>(i)]) out.add(i, j, v);
    return out;
  }

  SparseMat operator-() const {
    SparseMat out = *this;
    for (auto& row : out.r_)
      for (auto& [j, v] : row) v = -v;
    return out;
  }

  SparseMat operator-(const SparseMat& o) const { return *this + (-o); }

  /// First entry where the two matrices differ: (row, col, lhs, rhs).
  std::optional<std::tuple<int, int, T, T>> first_diff(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("SparseMat: comparison shape mismatch");
    for (int i = 0; i < rows_; ++i) {
      const auto& ra = r_[static_cast<size_t>(i)];
      const auto& rb = o.r_[static_cast<size_t>(i)];
      size_t x = 0, y = 0;
      while (x < ra.size() || y < rb.size()) {
        const int ca = x < ra.size() ? ra[x].first : cols_;
        const int cb = y < rb.size() ? rb[y].first : cols_;
        if (ca < cb) {
          return std::make_tuple(i, ca, ra[x].second, T());
        } else if (cb < ca) {
          return std::make_tuple(i, cb, T(), rb[y].second);
        } else {
          if (!(ra[x].second == rb[y].second))
            return std::make_tuple(i, ca, ra[x].second, rb[y].second);
          ++x;
          ++y;
        }
      }
    }
    return std::nullopt;
  }

  bool operator==(const SparseMat& o) const { return !first_diff(o).has_value(); }
  bool operator!=(const SparseMat& o) const { return first_diff(o).has_value(); }

  Matrix<T> to_dense() const {
    Matrix<T> m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : r_[static_cast<size_t>(i)]) m(i, j) = v;
    return m;
  }

  static SparseMat from_dense(const Matrix<T>& m) {
    SparseMat s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!(m(i, j) == T())) s.r_[static_cast<size_t>(i)].emplace_back(j, m(i, j));
    return s;
  }

  template <class Fn>
  auto map(Fn&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    SparseMat<U> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : r_[static_cast<size_t>(i)]) out.add(i, j, f(v));
    return out;
  }

 private:
  void check(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw IndexError("SparseMat: index out of range");
  }

  int rows_, cols_;
  std::vector<std::vector<std::pair<int, T>>> r_;
};

/// Embed an operator given on a sublist of sites (in that order) into the
/// full product space, acting as the identity on the remaining sites.  Same
/// semantics as the dense TensorOp::embed, but nonzero entries only.
template <class T>
SparseMat<T> sparse_embed(const SiteShape& shape, const std::vector<int>& sites,
                          const SparseMat<T>& m) {
  std::vector<int> subdims;
  std::vector<char> used(static_cast<size_t>(shape.sites()), 0);
  for (int s : sites) {
    if (s < 0 || s >= shape.sites()) throw IndexError("sparse_embed: bad site");
    if (used[static_cast<size_t>(s)]) throw IndexError("sparse_embed: repeated site");
    used[static_cast<size_t>(s)] = 1;
    subdims.push_back(shape.dim(s));
  }
  const SiteShape sub(subdims);
  if (m.rows() != sub.size() || m.cols() != sub.size())
    throw DimensionError("sparse_embed: operator does not match sites " + sub.str());

  std::vector<int> rest_sites;
  for (int s = 0; s < shape.sites(); ++s)
    if (!used[static_cast<size_t>(s)]) rest_sites.push_back(s);
  std::vector<int> restdims;
  for (int s : rest_sites) restdims.push_back(shape.dim(s));
  const SiteShape rest(restdims);

  SparseMat<T> out(static_cast<int>(shape.size()), static_cast<int>(shape.size()));
  std::vector<int> row(static_cast<size_t>(shape.sites()));
  std::vector<int> col(static_cast<size_t>(shape.sites()));
  for (int a = 0; a < sub.size(); ++a) {
    const auto am = sub.unflatten(a);
    for (const auto& [b, v] : m.row(a)) {
      const auto bm = sub.unflatten(b);
      for (int e = 0; e < rest.size(); ++e) {
        const auto em = rest.sites() ? rest.unflatten(e) : std::vector<int>{};
        for (size_t k = 0; k < sites.size(); ++k) {
          row[static_cast<size_t>(sites[k])] = am[k];
          col[static_cast<size_t>(sites[k])] = bm[k];
        }
        for (size_t k = 0; k < rest_sites.size(); ++k) {
          row[static_cast<size_t>(rest_sites[k])] = em[k];
          col[static_cast<size_t>(rest_sites[k])] = em[k];
        }
        out.add(shape.flatten(row), shape.flatten(col), v);
      }
    }
  }
  return out;
}

}  // namespace qca
