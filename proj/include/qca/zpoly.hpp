/**
 * @file zpoly.hpp
 * @brief Dense univariate polynomials over arbitrary-precision integers.
 *
 * This is the workhorse under the symbolic-q scalar field: a reduced fraction
 * of two primitive integer polynomials (plus a rational content and a power
 * of the variable) represents an element of Q(q) canonically.  GCDs use the
 * subresultant polynomial remainder sequence, which keeps intermediate
 * coefficient growth polynomial instead of the exponential blowup of naive
 * Euclid over Q.
 *
 * Representation: coefficient vector in increasing degree, invariant-trimmed
 * (no trailing zeros); the empty vector is the zero polynomial.
 */
#pragma once

#include <string>
#include <vector>

#include "qca/rational.hpp"

namespace qca {

class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(Integer constant);
  explicit ZPoly(std::vector<Integer> coeffs);  // trims trailing zeros

  static ZPoly zero() { return ZPoly(); }
  static ZPoly one() { return ZPoly(Integer(1)); }
  /// c * x^k
  static ZPoly monomial(Integer c, int k);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  const Integer& lc() const;  // leading coefficient; throws on zero poly
  /// Coefficient of x^k (0 outside the stored range).
  const Integer& coeff(int k) const;
  const std::vector<Integer>& coeffs() const { return c_; }

  ZPoly operator-() const;
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }
  bool operator!=(const ZPoly& o) const { return !(*this == o); }

  ZPoly mul_integer(const Integer& k) const;
  /// Multiply by x^k (k >= 0).
  ZPoly mul_pow_x(int k) const;
  /// Divide by x^k; requires valuation() >= k.
  ZPoly div_pow_x(int k) const;
  /// Exact division by a nonzero divisor; throws Error if not exact.
  ZPoly divexact(const ZPoly& d) const;
  /// Exact division of every coefficient by k.
  ZPoly divexact_integer(const Integer& k) const;

  /// GCD of all coefficients (positive; 0 for the zero polynomial).
  Integer content() const;
  /// this == sign * content * primitive_part, lc(primitive_part) > 0.
  ZPoly primitive_part() const;
  /// Sign of the leading coefficient (0 for zero polynomial).
  int sign() const;

  /// Subresultant GCD, returned primitive with positive leading coefficient.
  static ZPoly gcd(const ZPoly& a, const ZPoly& b);

  /// p(r) for rational r.
  Rational eval(const Rational& r) const;

  /// "c0 + c1*x + c2*x^2" with the given variable name (zero poly -> "0").
  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, deg r < deg b.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);

}  // namespace qca
