/**
 * @file lpoly.hpp
 * @brief Dense Laurent polynomials in q over a fast integer coefficient type.
 *
 * The heavy verification loops clear all denominators first, so both sides of
 * an identity become matrices of integer Laurent polynomials in q and the
 * comparison needs no rational arithmetic at all.  LPoly<int64_t> is the fast
 * path: products accumulate in __int128 and every store is range-checked, so
 * an overflow raises OverflowError instead of wrapping, and the caller can
 * redo the same computation with LPoly<Integer> (GMP) coefficients.
 *
 * Inputs of a multiplication are rejected above 2^55 in magnitude and 2^9 in
 * length, which makes the __int128 accumulator provably overflow-free:
 * 2^55 * 2^55 * 2^9 = 2^119 < 2^126.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qca/common.hpp"
#include "qca/rational.hpp"
#include "qca/scalar.hpp"

namespace qca {

namespace lpoly_detail {

inline void store_check(std::int64_t) {}

/// int64 path: multiply through a checked __int128 accumulator.
void mul_into(std::vector<std::int64_t>& out, const std::vector<std::int64_t>& a,
              const std::vector<std::int64_t>& b);
/// GMP path: plain exact arithmetic.
void mul_into(std::vector<Integer>& out, const std::vector<Integer>& a,
              const std::vector<Integer>& b);

std::int64_t checked_add(std::int64_t x, std::int64_t y);
inline Integer checked_add(const Integer& x, const Integer& y) { return x + y; }

std::int64_t checked_neg(std::int64_t x);
inline Integer checked_neg(const Integer& x) { return -x; }

std::string coeff_str(std::int64_t c);
std::string coeff_str(const Integer& c);

}  // namespace lpoly_detail

template <class C>
class LPoly {
 public:
  LPoly() = default;
  /// c * q^e
  static LPoly term(C c, int e) {
    LPoly p;
    if (!(c == C(0))) {
      p.lo_ = e;
      p.c_.push_back(std::move(c));
    }
    return p;
  }
  static LPoly from_coeffs(int lo, std::vector<C> coeffs) {
    LPoly p;
    p.lo_ = lo;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }                                  // valid when nonzero
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }  // valid when nonzero
  const std::vector<C>& coeffs() const { return c_; }

  C coeff(int e) const {
    if (is_zero() || e < lo_ || e > hi()) return C(0);
    return c_[static_cast<size_t>(e - lo_)];
  }

  bool operator==(const LPoly& o) const {
    return (is_zero() && o.is_zero()) || (lo_ == o.lo_ && c_ == o.c_);
  }
  bool operator!=(const LPoly& o) const { return !(*this == o); }

  LPoly operator-() const {
    LPoly r = *this;
    for (auto& x : r.c_) x = lpoly_detail::checked_neg(x);
    return r;
  }

  LPoly operator+(const LPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const int lo = std::min(lo_, o.lo_);
    const int hi2 = std::max(hi(), o.hi());
    LPoly r;
    r.lo_ = lo;
    r.c_.assign(static_cast<size_t>(hi2 - lo) + 1, C(0));
    for (int e = lo_; e <= hi(); ++e) r.c_[static_cast<size_t>(e - lo)] = coeff(e);
    for (int e = o.lo_; e <= o.hi(); ++e)
      r.c_[static_cast<size_t>(e - lo)] =
          lpoly_detail::checked_add(r.c_[static_cast<size_t>(e - lo)], o.coeff(e));
    r.trim();
    return r;
  }

  LPoly operator-(const LPoly& o) const { return *this + (-o); }

  LPoly operator*(const LPoly& o) const {
    if (is_zero() || o.is_zero()) return LPoly();
    LPoly r;
    r.lo_ = lo_ + o.lo_;
    lpoly_detail::mul_into(r.c_, c_, o.c_);
    r.trim();
    return r;
  }

  LPoly& operator+=(const LPoly& o) { return *this = *this + o; }
  LPoly& operator-=(const LPoly& o) { return *this = *this - o; }
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }

  LPoly shifted(int e) const {
    LPoly r = *this;
    if (!r.is_zero()) r.lo_ += e;
    return r;
  }

  /// "3*q^-2 + 1 - q" rendering for witnesses.
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int e = lo_; e <= hi(); ++e) {
      const C& c = c_[static_cast<size_t>(e - lo_)];
      if (c == C(0)) continue;
      const std::string cs = lpoly_detail::coeff_str(c);
      const bool neg = cs.size() && cs[0] == '-';
      const std::string mag = neg ? cs.substr(1) : cs;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (e == 0) {
        s += mag;
      } else {
        if (mag != "1") s += mag + "*";
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void trim() {
    size_t front = 0;
    while (front < c_.size() && c_[front] == C(0)) ++front;
    if (front == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    size_t back = c_.size();
    while (back > 0 && c_[back - 1] == C(0)) --back;
    if (front > 0 || back < c_.size()) {
      std::vector<C> out(c_.begin() + static_cast<long>(front),
                         c_.begin() + static_cast<long>(back));
      c_ = std::move(out);
      lo_ += static_cast<int>(front);
    }
  }

  int lo_ = 0;
  std::vector<C> c_;
};

using LPolyFast = LPoly<std::int64_t>;
using LPolyBig = LPoly<Integer>;

/// Widen the fast representation to GMP coefficients.
LPolyBig widen(const LPolyFast& p);

/// Exact bridge to the canonical field representation (for cross-checks and
/// witness rendering).
template <class C>
Scalar to_scalar(const LPoly<C>& p);

/// Inverse bridge: requires an integer Laurent polynomial (unit denominator,
/// integer content); throws Error otherwise.
LPolyBig lpoly_from_scalar(const Scalar& s);

}  // namespace qca
