/**
 * @file laurent.hpp
 * @brief Truncated Laurent series over an arbitrary coefficient ring.
 *
 * A LaurentSeries<T> holds exact coefficients of u^k for k in a window
 * [lo, hi]; coefficients below lo are exactly zero, coefficients above hi are
 * unknown (truncated).  Arithmetic tracks the window honestly:
 *
 *   add:  [min(lo1,lo2), min(hi1,hi2)]
 *   mul:  [lo1+lo2,      min(hi1+lo2, hi2+lo1)]
 *
 * so a result coefficient is stored only when it is fully determined by the
 * inputs.  Reading outside the window throws WindowError: a verification can
 * fail because a window was too small, but it can never silently compare
 * garbage.
 *
 * The coefficient ring is a template parameter because the same machinery
 * runs over Q(q) (scalar series) and over matrices with Q(q) entries
 * (operator-valued series).  Customization points, found by ADL:
 *   zero_like(t)        zero of the same shape as t
 *   invert_elem(t)      multiplicative inverse (throws if not invertible)
 *   scale_elem(t, s)    t scaled by a Scalar s
 * Multiplication preserves operand order, so noncommutative T is fine.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "qca/common.hpp"

namespace qca {

/// Default zero: value-initialized T.  Shaped types overload this.
template <class T>
T zero_like(const T&) {
  return T();
}

template <class T>
class LaurentSeries {
 public:
  /// Window [lo, lo + coeffs.size() - 1]; coeffs must be nonempty.
  LaurentSeries(int lo, std::vector<T> coeffs) : lo_(lo), c_(std::move(coeffs)) {
    if (c_.empty()) throw WindowError("LaurentSeries: empty window");
  }

  /// The zero series known exactly on [lo, hi], shaped like `sample`.
  static LaurentSeries zeros(int lo, int hi, const T& sample) {
    check_window(lo, hi);
    return LaurentSeries(lo, std::vector<T>(static_cast<size_t>(hi - lo) + 1,
                                            zero_like(sample)));
  }
  /// c * u^k exactly, truncated at hi.
  static LaurentSeries monomial(T c, int k, int hi) {
    check_window(k, hi);
    auto s = zeros(k, hi, c);
    s.c_[0] = std::move(c);
    return s;
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }

  /// Coefficient of u^k; zero below the window, WindowError above it.
  T at(int k) const {
    if (k > hi())
      throw WindowError("LaurentSeries: coefficient " + std::to_string(k) +
                        " above window top " + std::to_string(hi()));
    if (k < lo_) return zero_like(c_.front());
    return c_[static_cast<size_t>(k - lo_)];
  }

  /// True when every stored coefficient equals zero_like of itself.
  bool window_is_zero() const {
    for (const auto& x : c_)
      if (!(x == zero_like(x))) return false;
    return true;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  LaurentSeries operator+(const LaurentSeries& o) const {
    const int lo = std::min(lo_, o.lo_);
    const int hi2 = std::min(hi(), o.hi());
    check_window(lo, hi2);
    std::vector<T> out;
    out.reserve(static_cast<size_t>(hi2 - lo) + 1);
    for (int k = lo; k <= hi2; ++k) out.push_back(at(k) + o.at(k));
    return LaurentSeries(lo, std::move(out));
  }

  LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }

  LaurentSeries operator*(const LaurentSeries& o) const {
    const int lo = lo_ + o.lo_;
    const int hi2 = std::min(hi() + o.lo_, o.hi() + lo_);
    check_window(lo, hi2);
    std::vector<T> out;
    out.reserve(static_cast<size_t>(hi2 - lo) + 1);
    for (int k = lo; k <= hi2; ++k) {
      T acc = zero_like(c_.front()) * zero_like(o.c_.front());
      // sum over i + j = k with i, j inside the exact-known ranges
      const int imin = std::max(lo_, k - o.hi());
      const int imax = std::min(hi(), k - o.lo_);
      for (int i = imin; i <= imax; ++i) acc = acc + at(i) * o.at(k - i);
      out.push_back(std::move(acc));
    }
    return LaurentSeries(lo, std::move(out));
  }

  /// Multiplicative inverse assuming the bottom coefficient a_lo is
  /// invertible; window becomes [-lo, -lo + (hi - lo)].  From a * b = 1:
  ///   b_{-lo} = a_lo^{-1},
  ///   b_{-lo+k} = -a_lo^{-1} * sum_{j=1..k} a_{lo+j} b_{-lo+k-j}.
  /// Works over noncommutative T (this is a genuine two-sided inverse when
  /// a_lo is, e.g., an invertible matrix).
  LaurentSeries inverse() const {
    const T lead_inv = invert_elem(c_.front());
    const int depth = static_cast<int>(c_.size()) - 1;
    std::vector<T> b;
    b.reserve(c_.size());
    b.push_back(lead_inv);
    for (int k = 1; k <= depth; ++k) {
      T acc = zero_like(c_.front());
      for (int j = 1; j <= k; ++j)
        acc = acc + c_[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
      b.push_back(-(lead_inv * acc));
    }
    return LaurentSeries(-lo_, std::move(b));
  }

  /// Multiply by u^m.
  LaurentSeries shifted(int m) const {
    LaurentSeries r = *this;
    r.lo_ += m;
    return r;
  }

  /// Drop coefficients above new_hi (must stay inside the window).
  LaurentSeries truncated(int new_hi) const {
    if (new_hi > hi() || new_hi < lo_)
      throw WindowError("LaurentSeries::truncated: bad new top");
    LaurentSeries r = *this;
    r.c_.resize(static_cast<size_t>(new_hi - lo_) + 1);
    return r;
  }

  /// Substitute u -> a*u for a Scalar-like a (needs a.pow(k)).
  template <class S>
  LaurentSeries dilate(const S& a) const {
    LaurentSeries r = *this;
    for (int k = lo_; k <= hi(); ++k)
      r.c_[static_cast<size_t>(k - lo_)] =
          scale_elem(r.c_[static_cast<size_t>(k - lo_)], a.pow(k));
    return r;
  }

  /// Apply f to every stored coefficient.
  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(c_.front()))>;
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return LaurentSeries<U>(lo_, std::move(out));
  }

 private:
  static void check_window(int lo, int hi) {
    if (hi < lo)
      throw WindowError("LaurentSeries: window [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "] is empty");
  }

  int lo_;
  std::vector<T> c_;
};

/// First exponent (within the jointly determined window) where the two series
/// differ, or nullopt if they agree there.  Coefficients below a window are
/// treated as exact zeros.
template <class T>
std::optional<int> series_mismatch(const LaurentSeries<T>& a, const LaurentSeries<T>& b) {
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::min(a.hi(), b.hi());
  if (hi < lo) throw WindowError("series_mismatch: windows do not overlap");
  for (int k = lo; k <= hi; ++k)
    if (!(a.at(k) == b.at(k))) return k;
  return std::nullopt;
}

}  // namespace qca
