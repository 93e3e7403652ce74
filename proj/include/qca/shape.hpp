/**
 * @file shape.hpp
 * @brief Multi-site index bookkeeping for tensor-product spaces, and the
 *        combinatorial data attached to the 2n-dimensional base space.
 *
 * Sites are numbered 0..sites()-1; the basis index on each site is 1-based
 * (1..dim) to match the conventions used throughout the algebra.  Flattening
 * is row-major in site order.
 *
 * IndexData packages the involution i -> i', the sign eps_i, and the weight
 * bar(i) on the index set {1, ..., 2n}:
 *
 *   i'      = 2n - i + 1
 *   eps_i   = +1 for i <= n, -1 for i > n
 *   bar(i)  = (n, n-1, ..., 1, -1, ..., -n) at position i
 */
#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "qca/common.hpp"

namespace qca {

class SiteShape {
 public:
  SiteShape() = default;
  explicit SiteShape(std::vector<int> dims) : dims_(std::move(dims)) {
    for (int d : dims_)
      if (d <= 0) throw DimensionError("SiteShape: nonpositive site dimension");
  }
  /// `sites` sites of equal dimension `dim`.
  static SiteShape uniform(int sites, int dim) {
    return SiteShape(std::vector<int>(static_cast<size_t>(sites), dim));
  }

  int sites() const { return static_cast<int>(dims_.size()); }
  int dim(int site) const { return dims_.at(static_cast<size_t>(site)); }
  const std::vector<int>& dims() const { return dims_; }

  /// Total dimension of the tensor product.
  long long size() const {
    long long s = 1;
    for (int d : dims_) s *= d;
    return s;
  }

  /// Row-major linear index of a 1-based multi-index.
  int flatten(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != sites())
      throw IndexError("SiteShape::flatten: wrong arity");
    long long lin = 0;
    for (int s = 0; s < sites(); ++s) {
      const int i = idx[static_cast<size_t>(s)];
      if (i < 1 || i > dims_[static_cast<size_t>(s)])
        throw IndexError("SiteShape::flatten: index " + std::to_string(i) +
                         " out of range on site " + std::to_string(s));
      lin = lin * dims_[static_cast<size_t>(s)] + (i - 1);
    }
    return static_cast<int>(lin);
  }

  /// Inverse of flatten.
  std::vector<int> unflatten(int linear) const {
    if (linear < 0 || linear >= size())
      throw IndexError("SiteShape::unflatten: linear index out of range");
    std::vector<int> idx(static_cast<size_t>(sites()));
    for (int s = sites() - 1; s >= 0; --s) {
      idx[static_cast<size_t>(s)] = linear % dims_[static_cast<size_t>(s)] + 1;
      linear /= dims_[static_cast<size_t>(s)];
    }
    return idx;
  }

  /// Shape with one site removed.
  SiteShape drop(int site) const {
    std::vector<int> d = dims_;
    if (site < 0 || site >= sites()) throw IndexError("SiteShape::drop: bad site");
    d.erase(d.begin() + site);
    return SiteShape(std::move(d));
  }

  bool operator==(const SiteShape& o) const { return dims_ == o.dims_; }
  bool operator!=(const SiteShape& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < sites(); ++i) {
      if (i) s += ",";
      s += std::to_string(dims_[static_cast<size_t>(i)]);
    }
    return s + "]";
  }

 private:
  std::vector<int> dims_;
};

class IndexData {
 public:
  explicit IndexData(int n) : n_(n) {
    if (n < 1) throw DimensionError("IndexData: n must be positive");
  }

  int n() const { return n_; }
  /// Dimension of the base space.
  int N() const { return 2 * n_; }

  /// The involution i' = 2n - i + 1.
  int prime(int i) const {
    check(i);
    return 2 * n_ - i + 1;
  }

  /// eps_i = +1 below the fold, -1 above it.
  int eps(int i) const {
    check(i);
    return i <= n_ ? 1 : -1;
  }

  /// bar(i), the exponent weight: (n, ..., 1, -1, ..., -n).
  int bar(int i) const {
    check(i);
    return i <= n_ ? n_ - i + 1 : n_ - i;
  }

 private:
  void check(int i) const {
    if (i < 1 || i > 2 * n_)
      throw IndexError("IndexData: index " + std::to_string(i) + " outside 1.." +
                       std::to_string(2 * n_));
  }
  int n_;
};

}  // namespace qca
