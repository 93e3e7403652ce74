#include "qca/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "qca/common.hpp"

namespace qca {

namespace {
const Scalar kZeroScalar;
}

UPoly::UPoly(Scalar constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(Scalar c, int k) {
  if (k < 0) throw Error("UPoly::monomial: negative exponent");
  if (c.is_zero()) return UPoly();
  UPoly p;
  p.c_.assign(static_cast<size_t>(k) + 1, Scalar());
  p.c_.back() = std::move(c);
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int UPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return 0;
}

const Scalar& UPoly::lc() const {
  if (c_.empty()) throw Error("UPoly::lc: zero polynomial");
  return c_.back();
}

const Scalar& UPoly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return kZeroScalar;
  return c_[static_cast<size_t>(k)];
}

UPoly UPoly::operator-() const {
  UPoly r;
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(-x);
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r;
  r.c_.assign(std::max(c_.size(), o.c_.size()), Scalar());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  UPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

UPoly UPoly::mul_scalar(const Scalar& s) const {
  if (s.is_zero()) return UPoly();
  UPoly r;
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(x * s);
  return r;
}

UPoly UPoly::mul_pow_u(int k) const {
  if (k < 0) throw Error("UPoly::mul_pow_u: negative shift");
  if (is_zero() || k == 0) return *this;
  UPoly r;
  r.c_.assign(static_cast<size_t>(k), Scalar());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

UPoly UPoly::div_pow_u(int k) const {
  if (k < 0) throw Error("UPoly::div_pow_u: negative shift");
  if (k == 0 || is_zero()) return *this;
  if (valuation() < k) throw Error("UPoly::div_pow_u: valuation too small");
  UPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& d) const {
  if (d.is_zero()) throw ZeroDivisionError("UPoly::divrem: division by zero polynomial");
  if (degree() < d.degree()) return {UPoly(), *this};
  std::vector<Scalar> rem = c_;
  std::vector<Scalar> quot(c_.size() - d.c_.size() + 1, Scalar());
  const Scalar dl_inv = d.lc().inverse();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const Scalar& top = rem[static_cast<size_t>(k) + d.c_.size() - 1];
    if (top.is_zero()) continue;
    const Scalar f = top * dl_inv;
    for (size_t j = 0; j < d.c_.size(); ++j)
      rem[static_cast<size_t>(k) + j] -= f * d.c_[j];
    quot[static_cast<size_t>(k)] = f;
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divrem(y).second;
    // Renormalize to monic each round to keep coefficient sizes in check.
    if (!r.is_zero()) r = r.mul_scalar(r.lc().inverse());
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero()) x = x.mul_scalar(x.lc().inverse());
  return x;
}

UPoly UPoly::dilate(const Scalar& a) const {
  UPoly r = *this;
  Scalar p(1);
  for (size_t k = 0; k < r.c_.size(); ++k) {
    if (k > 0) p *= a;
    r.c_[k] *= p;
  }
  r.trim();  // a == 0 collapses everything above the constant term
  return r;
}

UPoly UPoly::reversed() const {
  UPoly r = *this;
  std::reverse(r.c_.begin(), r.c_.end());
  r.trim();
  return r;
}

Scalar UPoly::eval(const Scalar& u0) const {
  Scalar acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= u0;
    acc += c_[i];
  }
  return acc;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c_[k].str();
      continue;
    }
    if (!c_[k].is_one()) os << "(" << c_[k].str() << ")*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatU
// ---------------------------------------------------------------------------

RatU::RatU(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDivisionError("RatU: zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly::one();
    return;
  }
  const UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  if (!den_.lc().is_one()) {
    const Scalar inv = den_.lc().inverse();
    num_ = num_.mul_scalar(inv);
    den_ = den_.mul_scalar(inv);
  }
}

Scalar RatU::scalar_value() const {
  if (!is_constant()) throw Error("RatU::scalar_value: depends on u: " + str());
  return num_.coeff(0);
}

RatU RatU::operator-() const {
  RatU r = *this;
  r.num_ = -r.num_;
  return r;
}

RatU RatU::operator+(const RatU& o) const {
  return RatU(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatU RatU::operator-(const RatU& o) const { return *this + (-o); }

RatU RatU::operator*(const RatU& o) const { return RatU(num_ * o.num_, den_ * o.den_); }

RatU RatU::operator/(const RatU& o) const { return *this * o.inverse(); }

RatU RatU::inverse() const {
  if (is_zero()) throw ZeroDivisionError("RatU::inverse: zero");
  return RatU(den_, num_);
}

RatU RatU::pow(long k) const {
  if (k == 0) return RatU(Scalar(1));
  RatU base = k < 0 ? inverse() : *this;
  unsigned long m = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1UL
                          : static_cast<unsigned long>(k);
  RatU acc{Scalar(1)};
  while (m > 0) {
    if (m & 1UL) acc *= base;
    base *= base;
    m >>= 1UL;
  }
  return acc;
}

RatU RatU::dilate(const Scalar& a) const { return RatU(num_.dilate(a), den_.dilate(a)); }

RatU RatU::invert_var() const {
  // num(1/u)/den(1/u) = rev(num) * u^{deg den} / (rev(den) * u^{deg num}).
  return RatU(num_.reversed().mul_pow_u(den_.degree()),
              den_.reversed().mul_pow_u(num_.degree()));
}

Scalar RatU::eval(const Scalar& u0) const {
  const Scalar dv = den_.eval(u0);
  if (dv.is_zero())
    throw ZeroDivisionError("RatU::eval: denominator vanishes at u0 = " + u0.str());
  return num_.eval(u0) * dv.inverse();
}

LaurentSeries<Scalar> RatU::expand_at_zero(int hi) const {
  if (is_zero()) return LaurentSeries<Scalar>::zeros(hi, hi, Scalar());
  const int vn = num_.valuation(), vd = den_.valuation();
  const int shift = vn - vd;  // exact order of the pole/zero at u = 0
  if (hi < shift) throw WindowError("RatU::expand_at_zero: window ends below the leading term");
  const UPoly n = num_.div_pow_u(vn);
  const UPoly d = den_.div_pow_u(vd);
  const Scalar d0_inv = d.coeff(0).inverse();
  const int depth = hi - shift;
  std::vector<Scalar> c(static_cast<size_t>(depth) + 1);
  for (int k = 0; k <= depth; ++k) {
    Scalar acc = n.coeff(k);
    for (int j = 1; j <= std::min(k, d.degree()); ++j)
      acc -= d.coeff(j) * c[static_cast<size_t>(k - j)];
    c[static_cast<size_t>(k)] = acc * d0_inv;
  }
  return LaurentSeries<Scalar>(shift, std::move(c));
}

LaurentSeries<Scalar> RatU::expand_at_infinity(int lo) const {
  if (is_zero()) return LaurentSeries<Scalar>::zeros(lo, lo, Scalar());
  // Expand f(1/w) around w = 0 and flip w^k -> u^{-k}.
  const LaurentSeries<Scalar> s = invert_var().expand_at_zero(-lo);
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(s.hi() - s.lo()) + 1);
  for (int k = s.hi(); k >= s.lo(); --k) c.push_back(s.at(k));
  return LaurentSeries<Scalar>(-s.hi(), std::move(c));
}

std::string RatU::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace qca
