#include "qca/zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "qca/common.hpp"

namespace qca {

namespace {
const Integer kZero = 0;

// --- word-size modular arithmetic for the gcd fast path ---------------------

constexpr unsigned long kGcdPrimes[] = {2305843009213693951UL,  // 2^61 - 1
                                        2147483647UL};          // 2^31 - 1

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t base, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

// Coefficients mod p, low to high, leading zeros trimmed.
std::vector<uint64_t> reduce_mod(const std::vector<Integer>& c, unsigned long p) {
  std::vector<uint64_t> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = mpz_fdiv_ui(c[i].get_mpz_t(), p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Monic polynomial gcd over F_p (empty vector encodes zero).
std::vector<uint64_t> gcd_mod_p(std::vector<uint64_t> a, std::vector<uint64_t> b,
                                uint64_t p) {
  while (!b.empty()) {
    const uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      if (a.back() != 0) {
        const uint64_t f = mulmod(a.back(), inv, p);
        const size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) {
          const uint64_t s = mulmod(f, b[j], p);
          uint64_t& t = a[off + j];
          t = t >= s ? t - s : t + p - s;
        }
      }
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const uint64_t inv = powmod(a.back(), p - 2, p);
    for (auto& x : a) x = mulmod(x, inv, p);
  }
  return a;
}
}  // namespace

ZPoly::ZPoly(Integer constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

ZPoly::ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(Integer c, int k) {
  if (k < 0) throw Error("ZPoly::monomial: negative exponent");
  if (c == 0) return ZPoly();
  ZPoly p;
  p.c_.assign(static_cast<size_t>(k) + 1, Integer(0));
  p.c_.back() = std::move(c);
  return p;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int ZPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

const Integer& ZPoly::lc() const {
  if (c_.empty()) throw Error("ZPoly::lc: zero polynomial");
  return c_.back();
}

const Integer& ZPoly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return kZero;
  return c_[static_cast<size_t>(k)];
}

ZPoly ZPoly::operator-() const {
  ZPoly r;
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(-x);
  return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r;
  const size_t n = std::max(c_.size(), o.c_.size());
  r.c_.assign(n, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  ZPoly r;
  const size_t n = std::max(c_.size(), o.c_.size());
  r.c_.assign(n, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return ZPoly();
  ZPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

ZPoly ZPoly::mul_integer(const Integer& k) const {
  if (k == 0) return ZPoly();
  ZPoly r;
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(x * k);
  return r;
}

ZPoly ZPoly::mul_pow_x(int k) const {
  if (k < 0) throw Error("ZPoly::mul_pow_x: negative shift");
  if (is_zero() || k == 0) return *this;
  ZPoly r;
  r.c_.assign(static_cast<size_t>(k), Integer(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

ZPoly ZPoly::div_pow_x(int k) const {
  if (k < 0) throw Error("ZPoly::div_pow_x: negative shift");
  if (k == 0 || is_zero()) return *this;
  if (valuation() < k) throw Error("ZPoly::div_pow_x: valuation too small");
  ZPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
  if (d.is_zero()) throw ZeroDivisionError("ZPoly::divexact: division by zero polynomial");
  if (is_zero()) return ZPoly();
  if (degree() < d.degree()) throw Error("ZPoly::divexact: not divisible (degree)");
  // Long division from the top; every step must divide exactly.
  std::vector<Integer> rem = c_;
  std::vector<Integer> quot(c_.size() - d.c_.size() + 1, Integer(0));
  const Integer& dl = d.lc();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Integer& top = rem[static_cast<size_t>(k) + d.c_.size() - 1];
    if (top == 0) continue;
    Integer q;
    mpz_fdiv_qr(q.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(), dl.get_mpz_t());
    if (top != 0) throw Error("ZPoly::divexact: not divisible (coefficient)");
    quot[static_cast<size_t>(k)] = q;
    for (size_t j = 0; j + 1 < d.c_.size(); ++j)
      rem[static_cast<size_t>(k) + j] -= q * d.c_[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw Error("ZPoly::divexact: nonzero remainder");
  return ZPoly(std::move(quot));
}

ZPoly ZPoly::divexact_integer(const Integer& k) const {
  if (k == 0) throw ZeroDivisionError("ZPoly::divexact_integer: division by zero");
  ZPoly r;
  r.c_.reserve(c_.size());
  for (const auto& x : c_) {
    Integer q, m;
    mpz_fdiv_qr(q.get_mpz_t(), m.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    if (m != 0) throw Error("ZPoly::divexact_integer: not divisible");
    r.c_.push_back(std::move(q));
  }
  return r;
}

Integer ZPoly::content() const {
  Integer g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return ZPoly();
  Integer g = content();
  if (sign() < 0) g = -g;
  return divexact_integer(g);
}

int ZPoly::sign() const {
  if (c_.empty()) return 0;
  return sgn(c_.back());
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw ZeroDivisionError("pseudo_rem: division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  // r = lc(b)^(da-db+1) * a mod b via the update r <- lc(b)*r - r_k*x^(k-db)*b,
  // applied once per k from deg(a) down to deg(b).
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const Integer& bl = b.lc();
  const int da = a.degree(), db = b.degree();
  for (int k = da; k >= db; --k) {
    for (auto& x : rem) x *= bl;
    Integer top = rem[static_cast<size_t>(k)];
    if (top == 0) continue;
    Integer q = top / bl;  // exact: top just acquired a factor lc(b)
    for (size_t j = 0; j < bc.size(); ++j)
      rem[static_cast<size_t>(k - db) + j] -= q * bc[j];
  }
  rem.resize(static_cast<size_t>(db));
  return ZPoly(std::move(rem));
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  ZPoly A = a.primitive_part();
  ZPoly B = b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  if (B.degree() == 0) return ZPoly::one();

  // Modular pre-pass.  When p keeps at least one leading coefficient, the
  // primitive gcd over the integers reduces mod p to a divisor of the gcd
  // over F_p of full degree, so deg gcd_Z <= deg gcd_p: a degree-zero image
  // certifies coprimality outright.  Otherwise lift the monic image (scaled
  // by the gcd of the leading coefficients, which the true leading
  // coefficient divides) to symmetric residues and verify by exact division;
  // on any mismatch fall through to the subresultant remainder sequence.
  for (const unsigned long p : kGcdPrimes) {
    if (mpz_fdiv_ui(A.lc().get_mpz_t(), p) == 0 && mpz_fdiv_ui(B.lc().get_mpz_t(), p) == 0)
      continue;  // p may shrink the gcd's leading coefficient: no degree bound
    const auto gm = gcd_mod_p(reduce_mod(A.coeffs(), p), reduce_mod(B.coeffs(), p), p);
    if (gm.size() <= 1) return ZPoly::one();
    Integer g0;
    mpz_gcd(g0.get_mpz_t(), A.lc().get_mpz_t(), B.lc().get_mpz_t());
    const uint64_t g0m = mpz_fdiv_ui(g0.get_mpz_t(), p);
    std::vector<Integer> lifted(gm.size());
    for (size_t i = 0; i < gm.size(); ++i) {
      const uint64_t r = mulmod(gm[i], g0m, p);
      lifted[i] = r > p / 2 ? -Integer(static_cast<unsigned long>(p - r))
                            : Integer(static_cast<unsigned long>(r));
    }
    const ZPoly cand = ZPoly(std::move(lifted)).primitive_part();
    if (cand.degree() == static_cast<int>(gm.size()) - 1 &&
        pseudo_rem(A, cand).is_zero() && pseudo_rem(B, cand).is_zero())
      return cand;
    break;
  }

  // Subresultant PRS (Brown/Traub): divisors g*h^delta keep growth tame.
  Integer g = 1, h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    ZPoly R = pseudo_rem(A, B);
    if (R.is_zero()) return B.primitive_part();
    if (R.degree() == 0) return ZPoly::one();
    Integer divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    A = std::move(B);
    B = R.divexact_integer(divisor);
    g = A.lc();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      // h = g^delta / h^(delta-1), exact by the subresultant theory.
      Integer num;
      mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      Integer den;
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      Integer q, m;
      mpz_fdiv_qr(q.get_mpz_t(), m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (m != 0) throw Error("ZPoly::gcd: internal subresultant divisor not exact");
      h = q;
    }
  }
}

Rational ZPoly::eval(const Rational& r) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= r;
    acc += Rational(c_[i]);
  }
  return acc;
}

std::string ZPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Integer mag = abs(c_[i]);
    if (first) {
      if (sgn(c_[i]) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c_[i]) < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (!unit) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qca
