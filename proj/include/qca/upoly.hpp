/**
 * @file upoly.hpp
 * @brief Polynomials and rational functions in a spectral parameter u, with
 *        coefficients in the exact field Q(q).
 *
 * UPoly is a dense polynomial over Scalar.  RatU is a reduced fraction of two
 * UPoly with monic denominator, giving a canonical representative of each
 * element of Q(q)(u); equality is therefore structural and exact.
 *
 * The substitutions that appear throughout the verification suites are
 * multiplicative, so alongside ring arithmetic both types support
 * dilate (u -> a*u) and variable inversion (u -> 1/u), and RatU can be
 * expanded as a truncated Laurent series around u = 0 or u = infinity.
 */
#pragma once

#include <string>
#include <vector>

#include "qca/laurent.hpp"
#include "qca/scalar.hpp"

namespace qca {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Scalar constant);
  explicit UPoly(std::vector<Scalar> coeffs);  // trims trailing zeros

  static UPoly zero() { return UPoly(); }
  static UPoly one() { return UPoly(Scalar(1)); }
  /// c * u^k
  static UPoly monomial(Scalar c, int k);
  /// The variable u itself.
  static UPoly var() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int valuation() const;
  const Scalar& lc() const;
  const Scalar& coeff(int k) const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly mul_scalar(const Scalar& s) const;
  UPoly mul_pow_u(int k) const;
  UPoly div_pow_u(int k) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  /// Quotient and remainder over the coefficient field.
  std::pair<UPoly, UPoly> divrem(const UPoly& d) const;
  /// Monic gcd over Q(q)[u] (1 for coprime inputs, 0 only for gcd(0,0)).
  static UPoly gcd(const UPoly& a, const UPoly& b);

  /// p(a*u).
  UPoly dilate(const Scalar& a) const;
  /// u^{degree} * p(1/u)  (the reversed coefficient sequence).
  UPoly reversed() const;
  /// p(u0).
  Scalar eval(const Scalar& u0) const;

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

class RatU {
 public:
  /// Zero.
  RatU() : num_(), den_(UPoly::one()) {}
  RatU(Scalar constant)  // NOLINT: implicit by design
      : num_(UPoly(std::move(constant))), den_(UPoly::one()) {}
  /// num/den, reduced and with monic denominator; throws on zero den.
  RatU(UPoly num, UPoly den);
  explicit RatU(UPoly num) : num_(std::move(num)), den_(UPoly::one()) {}

  static RatU var() { return RatU(UPoly::var()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value does not involve u.
  bool is_constant() const { return den_.is_one() && num_.degree() <= 0; }
  /// The value as a Scalar; throws Error unless is_constant().
  Scalar scalar_value() const;

  RatU operator-() const;
  RatU operator+(const RatU& o) const;
  RatU operator-(const RatU& o) const;
  RatU operator*(const RatU& o) const;
  RatU operator/(const RatU& o) const;
  RatU& operator+=(const RatU& o) { return *this = *this + o; }
  RatU& operator-=(const RatU& o) { return *this = *this - o; }
  RatU& operator*=(const RatU& o) { return *this = *this * o; }
  bool operator==(const RatU& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatU& o) const { return !(*this == o); }

  RatU inverse() const;
  RatU pow(long k) const;

  /// f(a*u).
  RatU dilate(const Scalar& a) const;
  /// f(1/u).
  RatU invert_var() const;
  /// f(u0); throws ZeroDivisionError where the denominator vanishes.
  Scalar eval(const Scalar& u0) const;

  /// Laurent expansion around u = 0, with coefficients for u^k up to k = hi.
  /// The lowest exponent is val(num) - val(den).
  LaurentSeries<Scalar> expand_at_zero(int hi) const;
  /// Laurent expansion around u = infinity, with coefficients for u^k down to
  /// k = lo.  The highest exponent is deg(num) - deg(den).
  LaurentSeries<Scalar> expand_at_infinity(int lo) const;

  std::string str(const std::string& var = "u") const;

 private:
  UPoly num_, den_;  // den monic, gcd(num, den) = 1
};

/// Customization points used by the generic matrix/series machinery.
inline RatU invert_elem(const RatU& f) { return f.inverse(); }
inline RatU scale_elem(const RatU& f, const Scalar& s) { return f * RatU(s); }

}  // namespace qca
