/**
 * @file tensor.hpp
 * @brief Operators on tensor-product spaces with per-leg manipulations.
 *
 * A TensorOp is a square matrix on the product space described by a
 * SiteShape, together with the shape itself so individual legs can be
 * addressed: embedding a small operator into chosen sites, transposing one
 * leg with respect to the invariant bilinear form (e_ij -> eps_i eps_j
 * e_{j'i'}), and reading matrix elements by multi-index.
 */
#pragma once

#include <vector>

#include "qca/matrix.hpp"
#include "qca/shape.hpp"

namespace qca {

template <class F>
class TensorOp {
 public:
  TensorOp() = default;
  TensorOp(SiteShape shape, Matrix<F> mat) : shape_(std::move(shape)), mat_(std::move(mat)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() != shape_.size())
      throw DimensionError("TensorOp: matrix does not match shape " + shape_.str());
  }

  static TensorOp zero(const SiteShape& shape) {
    return TensorOp(shape, Matrix<F>(static_cast<int>(shape.size()),
                                     static_cast<int>(shape.size())));
  }

  static TensorOp identity(const SiteShape& shape, const F& one) {
    return TensorOp(shape, Matrix<F>::identity(static_cast<int>(shape.size()), one));
  }

  /// Embed an operator given on a sublist of sites (in that order), acting as
  /// the identity on the rest.  `m` is indexed by the flattening of the
  /// selected sites' sub-shape.
  static TensorOp embed(const SiteShape& shape, const std::vector<int>& sites,
                        const Matrix<F>& m) {
    std::vector<int> subdims;
    std::vector<char> used(static_cast<size_t>(shape.sites()), 0);
    for (int s : sites) {
      if (s < 0 || s >= shape.sites()) throw IndexError("TensorOp::embed: bad site");
      if (used[static_cast<size_t>(s)]) throw IndexError("TensorOp::embed: repeated site");
      used[static_cast<size_t>(s)] = 1;
      subdims.push_back(shape.dim(s));
    }
    const SiteShape sub(subdims);
    if (m.rows() != sub.size() || m.cols() != sub.size())
      throw DimensionError("TensorOp::embed: operator does not match sites " + sub.str());

    TensorOp out = zero(shape);
    const F zero{};
    // For every nonzero entry of the small matrix and every configuration of
    // the untouched sites, set one entry of the big matrix.
    std::vector<int> rest_sites;
    for (int s = 0; s < shape.sites(); ++s)
      if (!used[static_cast<size_t>(s)]) rest_sites.push_back(s);
    std::vector<int> restdims;
    for (int s : rest_sites) restdims.push_back(shape.dim(s));
    const SiteShape rest(restdims);

    std::vector<int> row(static_cast<size_t>(shape.sites()));
    std::vector<int> col(static_cast<size_t>(shape.sites()));
    for (int a = 0; a < sub.size(); ++a) {
      const auto am = sub.unflatten(a);
      for (int b = 0; b < sub.size(); ++b) {
        if (m(a, b) == zero) continue;
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
          out.mat_(shape.flatten(row), shape.flatten(col)) = m(a, b);
        }
      }
    }
    return out;
  }

  const SiteShape& shape() const { return shape_; }
  const Matrix<F>& mat() const { return mat_; }
  Matrix<F>& mat() { return mat_; }

  TensorOp operator+(const TensorOp& o) const {
    check_shape(o);
    return TensorOp(shape_, mat_ + o.mat_);
  }
  TensorOp operator-(const TensorOp& o) const {
    check_shape(o);
    return TensorOp(shape_, mat_ - o.mat_);
  }
  TensorOp operator*(const TensorOp& o) const {
    check_shape(o);
    return TensorOp(shape_, mat_ * o.mat_);
  }
  TensorOp operator-() const { return TensorOp(shape_, -mat_); }
  TensorOp scaled(const F& s) const { return TensorOp(shape_, mat_.scaled_left(s)); }
  bool operator==(const TensorOp& o) const { return shape_ == o.shape_ && mat_ == o.mat_; }
  bool operator!=(const TensorOp& o) const { return !(*this == o); }

  /// <row| this |col> with 1-based multi-indices.
  const F& matrix_element(const std::vector<int>& row, const std::vector<int>& col) const {
    return mat_(shape_.flatten(row), shape_.flatten(col));
  }

  /// Transpose one leg with respect to the bilinear form: on that site,
  /// e_ij -> eps_i eps_j e_{j'i'}.  The site dimension must equal id.N().
  TensorOp partial_transpose(int site, const IndexData& id) const {
    if (site < 0 || site >= shape_.sites())
      throw IndexError("TensorOp::partial_transpose: bad site");
    if (shape_.dim(site) != id.N())
      throw DimensionError("TensorOp::partial_transpose: site dimension mismatch");
    TensorOp out = zero(shape_);
    const int total = static_cast<int>(shape_.size());
    const F zero{};
    for (int r = 0; r < total; ++r) {
      auto rm = shape_.unflatten(r);
      for (int c = 0; c < total; ++c) {
        auto cm = shape_.unflatten(c);
        // out[a at site, b at site] = eps_a eps_b * in[b' at site, a' at site]
        const int a = rm[static_cast<size_t>(site)];
        const int b = cm[static_cast<size_t>(site)];
        auto rs = rm, cs = cm;
        rs[static_cast<size_t>(site)] = id.prime(b);
        cs[static_cast<size_t>(site)] = id.prime(a);
        const F& src = mat_(shape_.flatten(rs), shape_.flatten(cs));
        if (src == zero) continue;
        if (id.eps(a) * id.eps(b) > 0)
          out.mat_(r, c) = src;
        else
          out.mat_(r, c) = -src;
      }
    }
    return out;
  }

  /// Trace out one leg, returning an operator on the remaining sites.
  TensorOp partial_trace(int site) const {
    if (site < 0 || site >= shape_.sites())
      throw IndexError("TensorOp::partial_trace: bad site");
    const SiteShape rest = shape_.drop(site);
    TensorOp out = zero(rest);
    const int total = static_cast<int>(rest.size());
    for (int r = 0; r < total; ++r) {
      auto rm = rest.sites() ? rest.unflatten(r) : std::vector<int>{};
      for (int c = 0; c < total; ++c) {
        auto cm = rest.sites() ? rest.unflatten(c) : std::vector<int>{};
        F acc{};
        for (int k = 1; k <= shape_.dim(site); ++k) {
          auto rf = rm, cf = cm;
          rf.insert(rf.begin() + site, k);
          cf.insert(cf.begin() + site, k);
          acc += mat_(shape_.flatten(rf), shape_.flatten(cf));
        }
        out.mat_(r, c) = acc;
      }
    }
    return out;
  }

  template <class Fn>
  auto map(Fn&& f) const {
    auto m = mat_.map(f);
    return TensorOp<std::decay_t<decltype(m(0, 0))>>(shape_, std::move(m));
  }

 private:
  void check_shape(const TensorOp& o) const {
    if (shape_ != o.shape_)
      throw DimensionError("TensorOp: shape mismatch " + shape_.str() + " vs " +
                           o.shape_.str());
  }

  SiteShape shape_;
  Matrix<F> mat_;
};

}  // namespace qca
