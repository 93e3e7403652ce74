// Fast-path Laurent polynomials and sparse matrices.  Arithmetic is checked
// against the canonical field implementation, and every overflow escape hatch
// is exercised: the fast path must throw, never wrap, and the GMP path must
// pick up the same computation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "qca/common.hpp"
#include "qca/lpoly.hpp"
#include "qca/matrix.hpp"
#include "qca/scalar.hpp"
#include "qca/sparse.hpp"

using namespace qca;

namespace {

// Small deterministic generator (64-bit LCG) for reproducible samples.
struct Lcg {
  std::uint64_t s = 0x243F6A8885A308D3ull;
  std::uint64_t next() { return s = s * 6364136223846793005ull + 1442695040888963407ull; }
  int range(int n) { return static_cast<int>(next() >> 33) % n; }
};

LPolyFast random_poly(Lcg& g) {
  LPolyFast p;
  const int terms = 1 + g.range(4);
  for (int t = 0; t < terms; ++t)
    p += LPolyFast::term(g.range(19) - 9, g.range(9) - 4);
  return p;
}

}  // namespace

TEST_CASE("lpoly arithmetic matches the canonical field") {
  Lcg g;
  for (int trial = 0; trial < 200; ++trial) {
    const LPolyFast a = random_poly(g), b = random_poly(g);
    const Scalar sa = to_scalar(a), sb = to_scalar(b);
    CHECK(to_scalar(a + b) == sa + sb);
    CHECK(to_scalar(a - b) == sa - sb);
    CHECK(to_scalar(a * b) == sa * sb);
    CHECK(to_scalar(-a) == -sa);
    CHECK(to_scalar(a.shifted(3)) == sa * QMode::symbolic().q_power(3));
    CHECK(to_scalar(widen(a) * widen(b)) == sa * sb);
    CHECK(lpoly_from_scalar(sa) == widen(a));
  }
  CHECK(LPolyFast().is_zero());
  CHECK(LPolyFast::term(0, 5).is_zero());
  CHECK((LPolyFast::term(1, 2) - LPolyFast::term(1, 2)).is_zero());
  CHECK(LPolyFast::term(3, -2).str() == "3*q^-2");
  CHECK((LPolyFast::term(1, 0) - LPolyFast::term(2, 1)).str() == "1 - 2*q");
  // Quantum integers are Laurent polynomials, so they convert fine...
  CHECK(lpoly_from_scalar(QMode::symbolic().q_int(2)) ==
        LPolyBig::term(Integer(1), 1) + LPolyBig::term(Integer(1), -1));
  // ...but true fractions and fractional content do not.
  CHECK_THROWS_AS(lpoly_from_scalar((Scalar(1) + QMode::symbolic().q_power(1)).inverse()),
                  Error);
  CHECK_THROWS_AS(lpoly_from_scalar(Scalar(Rational(1, 3))), Error);
}

TEST_CASE("fast path throws on overflow instead of wrapping") {
  const std::int64_t big = std::int64_t(1) << 56;
  // Multiplication rejects oversized inputs outright.
  CHECK_THROWS_AS(LPolyFast::term(big, 0) * LPolyFast::term(2, 0), OverflowError);
  // In-range inputs whose product coefficient exceeds int64 are caught at the
  // accumulator.
  const std::int64_t forty = std::int64_t(1) << 40;
  const LPolyFast p = LPolyFast::term(forty, 0) + LPolyFast::term(forty, 1);
  CHECK_THROWS_AS(p * p, OverflowError);
  // Additions are checked too.
  CHECK_THROWS_AS(LPolyFast::term(INT64_MAX, 0) + LPolyFast::term(1, 0), OverflowError);
  // The widened computation succeeds and matches the field result.
  const LPolyBig wide = widen(p) * widen(p);
  CHECK(to_scalar(wide) == to_scalar(p) * to_scalar(p));
}

TEST_CASE("sparse products match dense products") {
  Lcg g;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6 + g.range(5);
    SparseMat<LPolyFast> a(n, n), b(n, n);
    for (int e = 0; e < 2 * n; ++e) {
      a.add(g.range(n), g.range(n), random_poly(g));
      b.add(g.range(n), g.range(n), random_poly(g));
    }
    CHECK((a * b).to_dense() == a.to_dense() * b.to_dense());
    CHECK((a + b).to_dense() == a.to_dense() + b.to_dense());
    CHECK((a - b).to_dense() == a.to_dense() - b.to_dense());
    CHECK(SparseMat<LPolyFast>::from_dense(a.to_dense()) == a);
  }
  const auto id = SparseMat<LPolyFast>::identity(7, LPolyFast::term(1, 0));
  SparseMat<LPolyFast> m(7, 7);
  m.add(2, 3, LPolyFast::term(5, -1));
  CHECK(id * m == m);
  CHECK(m * id == m);
}

TEST_CASE("sparse accumulation and difference witnesses") {
  SparseMat<LPolyFast> a(3, 3);
  a.add(1, 2, LPolyFast::term(4, 0));
  a.add(1, 2, LPolyFast::term(-4, 0));  // cancels: entry disappears
  CHECK(a.nnz() == 0);
  a.add(1, 2, LPolyFast::term(1, 1));
  a.add(1, 0, LPolyFast::term(2, 0));
  CHECK(a.nnz() == 2);
  CHECK(a.at(1, 2) == LPolyFast::term(1, 1));
  CHECK(a.at(0, 0).is_zero());

  SparseMat<LPolyFast> b = a;
  CHECK(!a.first_diff(b).has_value());
  b.add(1, 2, LPolyFast::term(1, 5));
  const auto diff = a.first_diff(b);
  REQUIRE(diff.has_value());
  CHECK(std::get<0>(*diff) == 1);
  CHECK(std::get<1>(*diff) == 2);
  CHECK(std::get<2>(*diff) == LPolyFast::term(1, 1));
  // Entries missing on one side compare against zero.
  SparseMat<LPolyFast> c(3, 3);
  c.add(0, 1, LPolyFast::term(7, 0));
  const auto diff2 = c.first_diff(SparseMat<LPolyFast>(3, 3));
  REQUIRE(diff2.has_value());
  CHECK(std::get<3>(*diff2).is_zero());
  // Escalating a whole matrix to GMP coefficients.
  const auto awide = a.map([](const LPolyFast& p) { return widen(p); });
  CHECK(awide.at(1, 2) == widen(a.at(1, 2)));
}
