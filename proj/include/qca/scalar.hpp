/**
 * @file scalar.hpp
 * @brief Exact arithmetic in the field Q(q) of rational functions in q.
 *
 * A Scalar is kept in the canonical form
 *
 *     c * q^e * num(q) / den(q)
 *
 * with c a nonzero rational (c == 0 encodes the zero element), e an integer,
 * and num, den primitive integer polynomials with positive leading
 * coefficient, nonzero constant term, and gcd(num, den) = 1.  This form is
 * unique, so equality is structural and every comparison is exact.
 *
 * Deformation-parameter handling is factored into QMode: in symbolic mode the
 * helpers below build genuine rational functions of q; in pinned mode they
 * substitute a fixed rational value of q immediately, so every Scalar
 * produced downstream is a plain rational constant and arithmetic is cheap.
 * All consuming code is identical in both modes.
 */
#pragma once

#include <string>

#include "qca/rational.hpp"
#include "qca/zpoly.hpp"

namespace qca {

class Scalar {
 public:
  /// Zero.
  Scalar() : c_(0), e_(0), num_(ZPoly::one()), den_(ZPoly::one()) {}
  Scalar(const Rational& c)  // NOLINT: implicit by design
      : c_(c), e_(0), num_(ZPoly::one()), den_(ZPoly::one()) {}
  Scalar(long c) : Scalar(Rational(c)) {}  // NOLINT: implicit by design
  Scalar(int c) : Scalar(Rational(c)) {}   // NOLINT: implicit by design

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  /// c * q^e * num/den, canonicalized from arbitrary inputs.
  static Scalar make(const Rational& c, int e, ZPoly num, ZPoly den);

  bool is_zero() const { return c_ == 0; }
  bool is_one() const;
  /// True when the value does not involve q.
  bool is_constant() const;
  /// The value as a rational; throws Error unless is_constant().
  Rational rational_value() const;

  const Rational& c() const { return c_; }
  int e() const { return e_; }
  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Multiplicative inverse; throws ZeroDivisionError on zero.
  Scalar inverse() const;
  /// Integer power (negative exponents allowed; 0 to a negative power throws).
  Scalar pow(long k) const;

  /// Substitute a rational value for q; throws ZeroDivisionError if the
  /// denominator vanishes there.
  Rational eval(const Rational& q0) const;

  /// Total degree in q of the numerator minus denominator (with the q^e
  /// factor counted); the zero scalar returns 0.
  int degree_balance() const;

  /// Canonical single-fraction display, e.g. "(q^2 + 1)/(3*q)".
  std::string str() const;

  /// Parse an expression over integers, 'q', + - * / ^ and parentheses.
  /// Inverse of str() up to canonicalization; throws ParseError.
  static Scalar parse(const std::string& text);

 private:
  Rational c_;
  int e_;
  ZPoly num_, den_;
};

/// Customization points used by the generic Laurent-series machinery.
inline Scalar invert_elem(const Scalar& s) { return s.inverse(); }
inline Scalar scale_elem(const Scalar& t, const Scalar& s) { return t * s; }

/// Deformation-parameter context: symbolic q, or q pinned to a rational.
class QMode {
 public:
  static QMode symbolic() { return QMode(true, Rational(0)); }
  /// q0 must be nonzero and not +-1 (those collapse the deformation).
  static QMode pinned(const Rational& q0);

  bool is_symbolic() const { return symbolic_; }
  /// The pinned value; throws Error in symbolic mode.
  const Rational& q_value() const;

  /// q^k.
  Scalar q_power(long k) const;
  /// Quantum integer [m] at q^r (r >= 1):  [m] = (q^{rm}-q^{-rm})/(q^r-q^{-r}).
  /// Satisfies [0] = 0 and [-m] = -[m].
  Scalar q_int(long m, long r = 1) const;
  /// [m]! at q^r.
  Scalar q_factorial(long m, long r = 1) const;
  /// Gaussian binomial [m choose k] at q^r; zero outside 0 <= k <= m.
  Scalar q_binomial(long m, long k, long r = 1) const;

  /// Human-readable tag for reports: "symbolic" or "pinned:p/q".
  std::string tag() const;

  bool operator==(const QMode& o) const {
    return symbolic_ == o.symbolic_ && (symbolic_ || q_ == o.q_);
  }

 private:
  QMode(bool symbolic, Rational q) : symbolic_(symbolic), q_(std::move(q)) {}
  bool symbolic_;
  Rational q_;
};

}  // namespace qca
