#include "qca/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

#include "qca/common.hpp"

namespace qca {

namespace {

ZPoly zpoly_pow(const ZPoly& base, unsigned long k) {
  ZPoly acc = ZPoly::one();
  ZPoly b = base;
  while (k > 0) {
    if (k & 1UL) acc = acc * b;
    b = b * b;
    k >>= 1UL;
  }
  return acc;
}

}  // namespace

Scalar Scalar::make(const Rational& c, int e, ZPoly num, ZPoly den) {
  if (den.is_zero()) throw ZeroDivisionError("Scalar: zero denominator");
  if (c == 0 || num.is_zero()) return Scalar();
  // Move powers of q out of the polynomials into the exponent.
  const int vn = num.valuation();
  const int vd = den.valuation();
  e += vn - vd;
  if (vn > 0) num = num.div_pow_x(vn);
  if (vd > 0) den = den.div_pow_x(vd);
  // Strip rational content; force positive leading coefficients.
  Rational cc = c;
  Integer cn = num.content();
  if (num.sign() < 0) cn = -cn;
  num = num.divexact_integer(cn);
  cc *= Rational(cn);
  Integer cd = den.content();
  if (den.sign() < 0) cd = -cd;
  den = den.divexact_integer(cd);
  cc /= Rational(cd);
  // Reduce the fraction.
  ZPoly g = ZPoly::gcd(num, den);
  if (!g.is_one()) {
    num = num.divexact(g);
    den = den.divexact(g);
  }
  Scalar s;
  s.c_ = cc;
  s.e_ = e;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  return s;
}

bool Scalar::is_one() const {
  return c_ == 1 && e_ == 0 && num_.is_one() && den_.is_one();
}

bool Scalar::is_constant() const {
  return is_zero() || (e_ == 0 && num_.is_one() && den_.is_one());
}

Rational Scalar::rational_value() const {
  if (!is_constant()) throw Error("Scalar::rational_value: depends on q: " + str());
  return c_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.c_ = -r.c_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  // Cross-cancel before multiplying so the gcd inputs stay small.
  ZPoly g1 = ZPoly::gcd(num_, o.den_);
  ZPoly g2 = ZPoly::gcd(o.num_, den_);
  Scalar r;
  r.c_ = c_ * o.c_;
  r.e_ = e_ + o.e_;
  r.num_ = (g1.is_one() ? num_ : num_.divexact(g1)) *
           (g2.is_one() ? o.num_ : o.num_.divexact(g2));
  r.den_ = (g2.is_one() ? den_ : den_.divexact(g2)) *
           (g1.is_one() ? o.den_ : o.den_.divexact(g1));
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDivisionError("Scalar::inverse: zero");
  Scalar r;
  r.c_ = Rational(1) / c_;
  r.e_ = -e_;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Common denominator D1*D2/g; combine numerators over a common integer
  // denominator and a common power of q, then re-canonicalize via make().
  ZPoly g = ZPoly::gcd(den_, o.den_);
  ZPoly d1r = g.is_one() ? den_ : den_.divexact(g);    // den_/g
  ZPoly d2r = g.is_one() ? o.den_ : o.den_.divexact(g);  // o.den_/g
  const int e = std::min(e_, o.e_);
  // c_ = a1/b1, o.c_ = a2/b2; scale both terms by b = lcm(b1,b2).
  Integer b;
  mpz_lcm(b.get_mpz_t(), c_.get_den().get_mpz_t(), o.c_.get_den().get_mpz_t());
  Integer s1 = c_.get_num() * (b / c_.get_den());
  Integer s2 = o.c_.get_num() * (b / o.c_.get_den());
  ZPoly t1 = num_.mul_integer(s1).mul_pow_x(e_ - e) * d2r;
  ZPoly t2 = o.num_.mul_integer(s2).mul_pow_x(o.e_ - e) * d1r;
  return make(Rational(1, b), e, t1 + t2, d1r * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

bool Scalar::operator==(const Scalar& o) const {
  return c_ == o.c_ && e_ == o.e_ && num_ == o.num_ && den_ == o.den_;
}

Scalar Scalar::pow(long k) const {
  if (k == 0) return Scalar(1);
  if (is_zero()) {
    if (k < 0) throw ZeroDivisionError("Scalar::pow: zero to a negative power");
    return Scalar();
  }
  const Scalar base = k < 0 ? inverse() : *this;
  const unsigned long m = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1UL
                                : static_cast<unsigned long>(k);
  // Canonical form is preserved by componentwise powers.
  Scalar r;
  r.c_ = pow_rational(base.c_, static_cast<long>(m));
  if (m > static_cast<unsigned long>(std::numeric_limits<int>::max()) / 64UL)
    throw Error("Scalar::pow: exponent too large");
  r.e_ = base.e_ * static_cast<int>(m);
  r.num_ = zpoly_pow(base.num_, m);
  r.den_ = zpoly_pow(base.den_, m);
  return r;
}

Rational Scalar::eval(const Rational& q0) const {
  if (is_zero()) return Rational(0);
  Rational dv = den_.eval(q0);
  if (dv == 0) throw ZeroDivisionError("Scalar::eval: denominator vanishes at q0");
  if (q0 == 0 && e_ < 0) throw ZeroDivisionError("Scalar::eval: negative q power at 0");
  return c_ * pow_rational(q0, e_) * num_.eval(q0) / dv;
}

int Scalar::degree_balance() const {
  if (is_zero()) return 0;
  return e_ + num_.degree() - den_.degree();
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  // Fold everything into a single fraction of integer polynomials.
  ZPoly top = num_.mul_integer(c_.get_num());
  ZPoly bot = den_.mul_integer(c_.get_den());
  if (e_ > 0) top = top.mul_pow_x(e_);
  if (e_ < 0) bot = bot.mul_pow_x(-e_);
  if (bot.is_one()) return top.str();
  return "(" + top.str() + ")/(" + bot.str() + ")";
}

// ---------------------------------------------------------------------------
// Expression parser: expr := term (('+'|'-') term)*
//                    term := factor (('*'|'/') factor)*
//                    factor := ('-'|'+')* atom ('^' ('-')? digits)?
//                    atom := digits | 'q' | '(' expr ')'
// ---------------------------------------------------------------------------

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw ParseError("Scalar::parse: trailing input at position " + std::to_string(pos_));
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    while (true) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v /= factor();
      else
        return v;
    }
  }

  Scalar factor() {
    int sign = 1;
    while (true) {
      if (eat('-'))
        sign = -sign;
      else if (!eat('+'))
        break;
    }
    Scalar v = atom();
    if (eat('^')) v = v.pow(integer_token());
    return sign < 0 ? -v : v;
  }

  Scalar atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) throw ParseError("Scalar::parse: expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::make(Rational(1), 1, ZPoly::one(), ZPoly::one());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rational(digits()));
    throw ParseError(std::string("Scalar::parse: unexpected character '") + c + "'");
  }

  long integer_token() {
    bool neg = false;
    while (true) {
      if (eat('-'))
        neg = !neg;
      else if (!eat('+'))
        break;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("Scalar::parse: expected integer exponent");
    const Integer v = digits();
    if (v > 1000000) throw ParseError("Scalar::parse: exponent too large");
    const long out = v.get_si();
    return neg ? -out : out;
  }

  Integer digits() {
    skip_ws();
    std::string tok;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) tok += s_[pos_++];
    if (tok.empty()) throw ParseError("Scalar::parse: expected digits");
    return Integer(tok);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).run(); }

// ---------------------------------------------------------------------------
// QMode
// ---------------------------------------------------------------------------

QMode QMode::pinned(const Rational& q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw ConfigError("pinned q must not be 0, 1, or -1");
  return QMode(false, q0);
}

const Rational& QMode::q_value() const {
  if (symbolic_) throw Error("QMode::q_value: symbolic mode has no pinned value");
  return q_;
}

Scalar QMode::q_power(long k) const {
  if (symbolic_) {
    if (k < std::numeric_limits<int>::min() / 4 || k > std::numeric_limits<int>::max() / 4)
      throw Error("QMode::q_power: exponent out of range");
    return Scalar::make(Rational(1), static_cast<int>(k), ZPoly::one(), ZPoly::one());
  }
  return Scalar(pow_rational(q_, k));
}

Scalar QMode::q_int(long m, long r) const {
  if (r < 1) throw Error("QMode::q_int: r must be >= 1");
  if (m == 0) return Scalar();
  const long a = m > 0 ? m : -m;
  // [a] at q^r = q^{-r(a-1)} * (1 + q^{2r} + ... + q^{2r(a-1)}).
  Scalar v;
  if (symbolic_) {
    std::vector<Integer> cs(static_cast<size_t>(2 * r * (a - 1)) + 1, Integer(0));
    for (long j = 0; j < a; ++j) cs[static_cast<size_t>(2 * r * j)] = 1;
    v = Scalar::make(Rational(1), static_cast<int>(-r * (a - 1)), ZPoly(std::move(cs)),
                     ZPoly::one());
  } else {
    Rational acc = 0;
    const Rational q2r = pow_rational(q_, 2 * r);
    Rational p = pow_rational(q_, -r * (a - 1));
    for (long j = 0; j < a; ++j) {
      acc += p;
      p *= q2r;
    }
    v = Scalar(acc);
  }
  return m > 0 ? v : -v;
}

Scalar QMode::q_factorial(long m, long r) const {
  if (m < 0) throw Error("QMode::q_factorial: negative argument");
  Scalar v = Scalar(1);
  for (long j = 2; j <= m; ++j) v *= q_int(j, r);
  return v;
}

Scalar QMode::q_binomial(long m, long k, long r) const {
  if (k < 0 || k > m) return Scalar();
  // [m choose k] = [m]...[m-k+1] / [k]! ; exact division in Q(q).
  Scalar top = Scalar(1);
  for (long j = 0; j < k; ++j) top *= q_int(m - j, r);
  return top / q_factorial(k, r);
}

std::string QMode::tag() const {
  return symbolic_ ? "symbolic" : "pinned:" + rational_str(q_);
}

}  // namespace qca
