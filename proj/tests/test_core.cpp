// Core arithmetic layer: big rationals, integer polynomials, and the exact
// field Q(q).  The GCD and pseudo-remainder routines are checked against
// independent re-computations over Q, not against themselves.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qca/common.hpp"
#include "qca/rational.hpp"
#include "qca/scalar.hpp"
#include "qca/zpoly.hpp"

using namespace qca;

namespace {

ZPoly zp(std::initializer_list<long> coeffs) {
  std::vector<Integer> v;
  for (long c : coeffs) v.emplace_back(c);
  return ZPoly(std::move(v));
}

// Plain polynomial remainder over Q, used as an oracle for pseudo_rem.
std::vector<Rational> q_rem(const ZPoly& a, const ZPoly& b) {
  std::vector<Rational> r;
  for (const auto& c : a.coeffs()) r.emplace_back(c);
  std::vector<Rational> d;
  for (const auto& c : b.coeffs()) d.emplace_back(c);
  while (r.size() >= d.size() && !r.empty()) {
    Rational f = r.back() / d.back();
    for (size_t j = 0; j < d.size(); ++j)
      r[r.size() - d.size() + j] -= f * d[j];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return r;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(rational_str(Rational(-2, 3)) == "-2/3");
  CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow_rational(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(parse_rational("1/0"), ZeroDivisionError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("2/"), ParseError);
  CHECK_THROWS_AS(pow_rational(Rational(0), -1), ZeroDivisionError);
}

TEST_CASE("zpoly basics") {
  const ZPoly a = zp({1, 0, -3, 2});  // 2x^3 - 3x^2 + 1
  CHECK(a.degree() == 3);
  CHECK(a.lc() == 2);
  CHECK(a.coeff(0) == 1);
  CHECK(a.coeff(7) == 0);
  CHECK(a.eval(Rational(1, 2)) == Rational(1, 2));  // 1/4 - 3/4 + 1
  CHECK((a - a).is_zero());
  CHECK((a + a) == a.mul_integer(Integer(2)));
  CHECK(a.mul_pow_x(2).valuation() == 2);
  CHECK(a.mul_pow_x(2).div_pow_x(2) == a);
  CHECK(zp({0, 0, 5}).valuation() == 2);
  CHECK(a.str("q") == "1 - 3*q^2 + 2*q^3");
  CHECK(ZPoly().str() == "0");
  CHECK(zp({0, -1}).str() == "-q");

  const ZPoly b = zp({-6, 9, 3});
  CHECK(b.content() == 3);
  CHECK(b.primitive_part() == zp({-2, 3, 1}));
  CHECK((-b).primitive_part() == zp({2, -3, -1}).mul_integer(Integer(-1)));
  CHECK((a * b).divexact(b) == a);
  CHECK_THROWS_AS(a.divexact(zp({1, 1})), Error);  // x+1 does not divide a
}

TEST_CASE("pseudo remainder matches the rational-arithmetic remainder") {
  const ZPoly as[] = {zp({1, 0, -3, 2, 5}), zp({7, -2, 0, 0, 1, 3}), zp({2, 4})};
  const ZPoly bs[] = {zp({3, 1, 2}), zp({-1, 0, 5}), zp({1, 1, 1, 1})};
  for (const auto& a : as) {
    for (const auto& b : bs) {
      const ZPoly r = pseudo_rem(a, b);
      const auto oracle = q_rem(a, b);
      // prem(a,b) = lc(b)^(deg a - deg b + 1) * (a mod b) when deg a >= deg b.
      if (a.degree() < b.degree()) {
        CHECK(r == a);
        continue;
      }
      Rational scale = pow_rational(Rational(b.lc()), a.degree() - b.degree() + 1);
      CHECK(r.degree() == static_cast<int>(oracle.size()) - 1);
      for (int k = 0; k <= r.degree(); ++k)
        CHECK(Rational(r.coeff(k)) == scale * oracle[static_cast<size_t>(k)]);
    }
  }
}

TEST_CASE("subresultant gcd recovers planted common factors") {
  const ZPoly g = zp({7, -5, 3});  // primitive, positive leading coefficient
  const ZPoly a = g * zp({1, 1}) * zp({-2, 0, 1});
  const ZPoly b = g * zp({2, 1}) * zp({5, 3});
  CHECK(ZPoly::gcd(a, b) == g);
  CHECK(ZPoly::gcd(b, a) == g);
  CHECK(ZPoly::gcd(a.mul_integer(Integer(-4)), b.mul_integer(Integer(6))) == g);
  // Coprime inputs give 1, and zero inputs give the other argument.
  CHECK(ZPoly::gcd(zp({1, 1}), zp({2, 1})).is_one());
  CHECK(ZPoly::gcd(ZPoly(), a.mul_integer(Integer(-2))) == a.primitive_part());
  // Larger stress case with repeated factors.
  const ZPoly h = zp({1, 2, 1}) * zp({-3, 1});
  CHECK(ZPoly::gcd(h * h * zp({1, 0, 1}), h * zp({4, 1})) == h.primitive_part());
}

TEST_CASE("scalar canonical form") {
  // 6 * q * (2q^2 + 2q)/(4q) canonicalizes to 3q(q + 1).
  const Scalar s = Scalar::make(Rational(6), 1, zp({0, 2, 2}), zp({0, 4}));
  CHECK(s.c() == Rational(3));
  CHECK(s.e() == 1);
  CHECK(s.num() == zp({1, 1}));
  CHECK(s.den().is_one());
  CHECK(s.str() == "3*q + 3*q^2");

  // Sign lives in c, never in the leading coefficients.
  const Scalar t = Scalar::make(Rational(1), 0, zp({1, -1}), ZPoly::one());  // 1 - q
  CHECK(t.c() == Rational(-1));
  CHECK(t.num() == zp({-1, 1}));

  CHECK(Scalar::make(Rational(5), 3, ZPoly(), ZPoly::one()).is_zero());
  CHECK_THROWS_AS(Scalar::make(Rational(1), 0, ZPoly::one(), ZPoly()), ZeroDivisionError);
}

TEST_CASE("scalar field axioms on a mixed sample") {
  const QMode qm = QMode::symbolic();
  std::vector<Scalar> sample = {
      Scalar(3),
      Scalar(Rational(-2, 7)),
      qm.q_power(2),
      qm.q_power(-3),
      qm.q_int(2),
      qm.q_int(5),
      qm.q_int(3) - qm.q_power(4),
      (qm.q_int(2) + Scalar(1)).inverse(),
  };
  const Scalar one = Scalar(1);
  for (const auto& a : sample) {
    CHECK(a + Scalar() == a);
    CHECK(a * one == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == one);
      CHECK(a.pow(3) == a * a * a);
      CHECK(a.pow(-2) == (a * a).inverse());
    }
    for (const auto& b : sample) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
      for (const auto& c : sample) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("quantum integers") {
  const QMode qm = QMode::symbolic();
  CHECK(qm.q_int(0).is_zero());
  CHECK(qm.q_int(1).is_one());
  CHECK(qm.q_int(2).str() == "(1 + q^2)/(q)");
  CHECK(qm.q_int(3).str() == "(1 + q^2 + q^4)/(q^2)");
  CHECK(qm.q_int(-3) == -qm.q_int(3));
  // [m] at q^2 equals [m] with q -> q^2.
  CHECK(qm.q_int(3, 2).str() == "(1 + q^4 + q^8)/(q^4)");
  // Defining identity: (q - q^-1) [m] = q^m - q^-m.
  for (long m = -6; m <= 6; ++m)
    CHECK((qm.q_power(1) - qm.q_power(-1)) * qm.q_int(m) ==
          qm.q_power(m) - qm.q_power(-m));
  // And the product form of the Gaussian binomial.
  CHECK(qm.q_binomial(4, 2).str() == "(1 + q^2 + 2*q^4 + q^6 + q^8)/(q^4)");
  CHECK(qm.q_binomial(5, 2) == qm.q_binomial(5, 3));
  CHECK(qm.q_binomial(3, 5).is_zero());
  CHECK(qm.q_binomial(3, -1).is_zero());
  // Pascal-type recurrences for the balanced binomial (both twists hold
  // because the balanced form is invariant under q -> 1/q).
  for (long m = 1; m <= 6; ++m)
    for (long k = 1; k <= m; ++k) {
      CHECK(qm.q_binomial(m, k) == qm.q_power(m - k) * qm.q_binomial(m - 1, k - 1) +
                                       qm.q_power(-k) * qm.q_binomial(m - 1, k));
      CHECK(qm.q_binomial(m, k) == qm.q_power(k - m) * qm.q_binomial(m - 1, k - 1) +
                                       qm.q_power(k) * qm.q_binomial(m - 1, k));
    }
}

TEST_CASE("pinned mode substitutes q immediately") {
  const Rational q0(3, 5);
  const QMode qp = QMode::pinned(q0);
  const QMode qs = QMode::symbolic();
  CHECK(qp.q_power(-2).rational_value() == Rational(25, 9));
  for (long m = 0; m <= 5; ++m) {
    CHECK(qp.q_int(m).is_constant());
    CHECK(qp.q_int(m).rational_value() == qs.q_int(m).eval(q0));
    CHECK(qp.q_binomial(5, m).rational_value() == qs.q_binomial(5, m).eval(q0));
  }
  CHECK(qp.tag() == "pinned:3/5");
  CHECK(qs.tag() == "symbolic");
  CHECK_THROWS_AS(QMode::pinned(Rational(1)), ConfigError);
  CHECK_THROWS_AS(QMode::pinned(Rational(0)), ConfigError);
  CHECK_THROWS_AS(qs.q_power(2).rational_value(), Error);
}

TEST_CASE("scalar evaluation and parsing round trips") {
  const QMode qm = QMode::symbolic();
  CHECK(qm.q_int(3).eval(Rational(2)) == Rational(21, 4));
  CHECK_THROWS_AS((qm.q_power(1) - Scalar(2)).inverse().eval(Rational(2)),
                  ZeroDivisionError);
  CHECK_THROWS_AS(qm.q_power(-1).eval(Rational(0)), ZeroDivisionError);

  std::vector<Scalar> sample = {
      Scalar(),
      Scalar(Rational(-22, 7)),
      qm.q_int(4),
      qm.q_power(-5) * Scalar(Rational(2, 3)),
      (qm.q_int(2) - Scalar(3)).inverse(),
      qm.q_binomial(4, 2) - qm.q_power(7),
  };
  for (const auto& s : sample) CHECK(Scalar::parse(s.str()) == s);

  CHECK(Scalar::parse("q^-2 + 1 + q^2") == qm.q_int(3));
  CHECK(Scalar::parse("(q - 1)*(q + 1)") == qm.q_power(2) - Scalar(1));
  CHECK(Scalar::parse("-q^2/(1 - q)") == qm.q_power(2) / (qm.q_power(1) - Scalar(1)));
  CHECK(Scalar::parse(" 2 * q ^ 3 ") == Scalar(2) * qm.q_power(3));
  CHECK_THROWS_AS(Scalar::parse("q +"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("(q"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("q ^ x"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("3 & 4"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ZeroDivisionError);
}

TEST_CASE("degree balance") {
  const QMode qm = QMode::symbolic();
  CHECK(Scalar(5).degree_balance() == 0);
  CHECK(qm.q_power(3).degree_balance() == 3);
  CHECK(qm.q_int(3).degree_balance() == 2);   // q^2 dominates
  CHECK(qm.q_int(3).inverse().degree_balance() == -2);
}
