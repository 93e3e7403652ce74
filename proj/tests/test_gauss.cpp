// Triangular decomposition of operator-valued matrices.  Quasideterminants
// are pinned against the direct defining formula (computed with plain matrix
// arithmetic) and against commutative determinant ratios; the decomposition
// is pinned against a hand-eliminated 2x2 with noncommuting blocks; the
// cleared exchange-identity driver is exercised on pairs whose commutation
// behaviour is known in closed form.  The fused operator checks then run the
// whole suite in positive and negative-control modes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "qca/common.hpp"
#include "qca/gauss.hpp"
#include "qca/loperator.hpp"
#include "qca/ncmatrix.hpp"

using namespace qca;

namespace {

const QMode kQ = QMode::symbolic();
const Scalar kq = kQ.q_power(1);

RatU ru(long k) { return RatU(Scalar(k)); }
const RatU kU = RatU::var();

Matrix<RatU> mat2(RatU a, RatU b, RatU c, RatU d) {
  Matrix<RatU> m(2, 2);
  m(0, 0) = std::move(a);
  m(0, 1) = std::move(b);
  m(1, 0) = std::move(c);
  m(1, 1) = std::move(d);
  return m;
}

// 2x2 of noncommuting 2x2 blocks with invertible corners, used as the
// elimination oracle input.
NCMatrix oracle_input() {
  NCMatrix m(2, 2);
  m.at(1, 1) = mat2(kU, ru(1), ru(0), ru(1));
  m.at(1, 2) = mat2(ru(1), ru(0), kU, ru(1));
  m.at(2, 1) = mat2(ru(0), RatU(kq), ru(1), ru(0));
  m.at(2, 2) = mat2(ru(2), ru(0), ru(0), ru(3));
  return m;
}

bool has_fail_with_witness(const CheckReport& rep) {
  if (rep.passed()) return false;
  for (const auto& it : rep.items)
    if (it.result.status == CheckResult::Status::FAIL && it.result.witness.has_value())
      return true;
  return false;
}

}  // namespace

TEST_CASE("NCMatrix shape, product, submatrix, first difference") {
  NCMatrix a(2, 1), b(2, 1);
  a.at(1, 1)(0, 0) = ru(1);
  a.at(1, 2)(0, 0) = ru(2);
  a.at(2, 1)(0, 0) = ru(3);
  a.at(2, 2)(0, 0) = ru(4);
  b.at(1, 1)(0, 0) = ru(5);
  b.at(1, 2)(0, 0) = ru(6);
  b.at(2, 1)(0, 0) = ru(7);
  b.at(2, 2)(0, 0) = ru(8);

  // With 1x1 blocks the block product is the plain 2x2 matrix product.
  const NCMatrix p = a * b;
  CHECK(p.at(1, 1)(0, 0) == ru(19));
  CHECK(p.at(1, 2)(0, 0) == ru(22));
  CHECK(p.at(2, 1)(0, 0) == ru(43));
  CHECK(p.at(2, 2)(0, 0) == ru(50));

  CHECK(NCMatrix::identity(2, 1) * a == a);
  CHECK(a * NCMatrix::identity(2, 1) == a);
  CHECK_THROWS_AS(a.at(0, 1), IndexError);
  CHECK_THROWS_AS(a.at(1, 3), IndexError);

  const NCMatrix sub = nc_submatrix(a, {2}, {1});
  CHECK(sub.size() == 1);
  CHECK(sub.at(1, 1)(0, 0) == ru(3));

  CHECK(!nc_first_diff(a, a).has_value());
  NCMatrix a2 = a;
  a2.at(2, 1)(0, 0) = ru(9);
  const auto d = nc_first_diff(a, a2);
  REQUIRE(d.has_value());
  CHECK((*d) == std::array<int, 4>{2, 1, 1, 1});
}

TEST_CASE("quasideterminant: defining formula with noncommuting blocks") {
  const NCMatrix m = oracle_input();
  const Matrix<RatU>&a11 = m.at(1, 1), &a12 = m.at(1, 2), &a21 = m.at(2, 1),
        &a22 = m.at(2, 2);

  // Direct formula, computed with ordinary matrix arithmetic only.
  const Matrix<RatU> box22 = a22 - a21 * a11.inverse() * a12;
  const Matrix<RatU> box11 = a11 - a12 * a22.inverse() * a21;
  CHECK(quasideterminant(m, 2, 2) == box22);
  CHECK(quasideterminant(m, 1, 1) == box11);
  const Matrix<RatU> box12 = a12 - a11 * a21.inverse() * a22;
  CHECK(quasideterminant(m, 1, 2) == box12);

  // A 1x1 matrix is its own quasideterminant.
  const NCMatrix one = nc_submatrix(m, {2}, {1});
  CHECK(quasideterminant(one, 1, 1) == a21);

  CHECK_THROWS_AS(quasideterminant(m, 0, 1), IndexError);
  CHECK_THROWS_AS(quasideterminant(m, 1, 3), IndexError);
}

TEST_CASE("quasideterminant: commutative case is a ratio of determinants") {
  // 3x3 over 1x1 blocks: |M|_33 = det(M) / det(leading 2x2).
  NCMatrix m(3, 1);
  const long e[3][3] = {{0, 1, 2}, {3, 0, 4}, {5, 6, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i + 1, j + 1)(0, 0) = i == j ? kU : ru(e[i][j]);

  // det(M) = u^3 - 37u + 56, det(minor) = u^2 - 3, both expanded by hand.
  const RatU det = kU * (kU * kU - ru(24)) - ru(1) * (kU * ru(3) - ru(20)) +
                   ru(2) * (ru(18) - kU * ru(5));
  const RatU minor = kU * kU - ru(3);
  CHECK(quasideterminant(m, 3, 3)(0, 0) == det / minor);

  // Identity: every diagonal quasideterminant is 1.
  const NCMatrix id = NCMatrix::identity(3, 2);
  const Matrix<RatU> block_one = Matrix<RatU>::identity(2, ru(1));
  for (int i = 1; i <= 3; ++i) CHECK(quasideterminant(id, i, i) == block_one);
}

TEST_CASE("quasideterminant: singular minor is rejected by name") {
  NCMatrix m(2, 1);
  m.at(1, 2)(0, 0) = ru(1);
  m.at(2, 1)(0, 0) = ru(1);
  m.at(2, 2)(0, 0) = ru(1);
  // Deleting row 2 and column 2 leaves the zero entry a_11.
  CHECK_THROWS_AS(quasideterminant(m, 2, 2), SingularMatrixError);
  try {
    quasideterminant(m, 2, 2);
  } catch (const SingularMatrixError& ex) {
    CHECK(ex.minor_index() == 2);
    CHECK(std::string(ex.what()).find("row 2") != std::string::npos);
    CHECK(std::string(ex.what()).find("column 2") != std::string::npos);
  }
}

TEST_CASE("gauss_decompose: hand-eliminated 2x2 oracle") {
  const NCMatrix m = oracle_input();
  const Matrix<RatU>&a11 = m.at(1, 1), &a12 = m.at(1, 2), &a21 = m.at(2, 1),
        &a22 = m.at(2, 2);
  const Matrix<RatU> a11inv = a11.inverse();

  const GaussData g = gauss_decompose(m);
  CHECK(g.size() == 2);
  CHECK(g.dimw == 2);
  CHECK(g.h_at(1) == a11);
  CHECK(g.e_at(1, 2) == a11inv * a12);
  CHECK(g.f_at(2, 1) == a21 * a11inv);
  CHECK(g.h_at(2) == a22 - a21 * a11inv * a12);
  CHECK(g.hinv_at(1) == a11inv);
  CHECK(g.reassemble() == m);
  CHECK_THROWS_AS(g.h_at(0), IndexError);
  CHECK_THROWS_AS(g.h_at(3), IndexError);

  // Unit diagonals of the triangular factors.
  const Matrix<RatU> block_one = Matrix<RatU>::identity(2, ru(1));
  CHECK(g.F.at(1, 1) == block_one);
  CHECK(g.F.at(2, 2) == block_one);
  CHECK(g.F.at(1, 2).is_zero());
  CHECK(g.E.at(2, 1).is_zero());

  // Identity input decomposes into identity factors.
  const GaussData gi = gauss_decompose(NCMatrix::identity(3, 2));
  CHECK(gi.F == NCMatrix::identity(3, 2));
  CHECK(gi.E == NCMatrix::identity(3, 2));
  for (int i = 1; i <= 3; ++i) CHECK(gi.h_at(i) == block_one);
}

TEST_CASE("gauss_decompose: singular leading blocks are named") {
  NCMatrix z(2, 1);
  z.at(1, 2)(0, 0) = ru(1);
  z.at(2, 1)(0, 0) = ru(1);
  try {
    gauss_decompose(z);
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& ex) {
    CHECK(ex.minor_index() == 1);
  }

  NCMatrix s(2, 1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) s.at(i, j)(0, 0) = ru(1);
  try {
    gauss_decompose(s);
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& ex) {
    CHECK(ex.minor_index() == 2);  // 1 - 1 = 0 in the Schur complement
  }
}

TEST_CASE("denominator clearing") {
  const UPoly um1 = UPoly::var() - UPoly::one();                    // u - 1
  const UPoly u2m1 = UPoly::var() * UPoly::var() - UPoly::one();    // u^2 - 1
  const UPoly twice = um1.mul_scalar(Scalar(2));                    // 2u - 2
  CHECK(upoly_lcm(twice, u2m1) == u2m1);                            // monic lcm
  CHECK(upoly_lcm(um1, um1) == um1);

  Matrix<RatU> m(2, 2);
  m(0, 0) = RatU(UPoly::one(), um1);        // 1/(u-1)
  m(0, 1) = RatU(UPoly::var(), u2m1);       // u/(u^2-1)
  m(1, 1) = ru(3);
  const ClearedBlock c = clear_denominators(m);
  CHECK(c.den == u2m1);
  CHECK(c.num(0, 0) == UPoly::var() + UPoly::one());
  CHECK(c.num(0, 1) == UPoly::var());
  CHECK(c.num(1, 0).is_zero());
  CHECK(c.num(1, 1) == u2m1.mul_scalar(Scalar(3)));
  CHECK(c.deg == 2);
}

TEST_CASE("exchange identities on pairs with known commutation") {
  // Diagonal rational matrices commute.
  Matrix<RatU> a(2, 2), b(2, 2);
  a(0, 0) = RatU(UPoly::one(), UPoly::var() - UPoly::one());
  a(1, 1) = kU;
  b(0, 0) = kU * kU;
  b(1, 1) = RatU(UPoly::var(), UPoly::var() + UPoly::one());
  const CheckResult comm = exchange_identity(a, b, LinUV::one(), LinUV::one(), "diag pair");
  CHECK(comm.passed());
  CHECK(comm.points > 0);

  // A strictly upper and a diagonal matrix exchange with a factor q:
  // A B = q (B A) for A = e_12 f(u), B = diag(1, q).
  Matrix<RatU> upper(2, 2), diag(2, 2);
  upper(0, 1) = RatU(UPoly::var(), UPoly::var() - UPoly::one());
  diag(0, 0) = ru(1);
  diag(1, 1) = RatU(kq);
  const LinUV qfac{Scalar(0), Scalar(0), kq};
  CHECK(exchange_identity(upper, diag, LinUV::one(), qfac, "q pair").passed());
  const CheckResult wrong = exchange_identity(upper, diag, LinUV::one(), LinUV::one(), "q pair");
  CHECK(wrong.status == CheckResult::Status::FAIL);
  REQUIRE(wrong.witness.has_value());
  CHECK(wrong.witness->detail.find("q pair") != std::string::npos);

  // Matching linear prefactors on commuting operands.
  const LinUV umv = LinUV::axby(Scalar(1), Scalar(-1));
  CHECK(exchange_identity(a, b, umv, umv, "prefactor pair").passed());
  const CheckResult flipped =
      exchange_identity(a, b, umv, LinUV::axby(Scalar(-1), Scalar(1)), "prefactor pair");
  CHECK(flipped.status == CheckResult::Status::FAIL);
}

TEST_CASE("merge_results") {
  CheckResult pass;
  pass.status = CheckResult::Status::PASS;
  pass.points = 3;
  CheckResult fail;
  fail.status = CheckResult::Status::FAIL;
  fail.witness = Witness{"u=2", "1", "0", "broken"};
  fail.points = 1;
  CheckResult err;
  err.status = CheckResult::Status::ERROR;
  err.error = "bound too small";

  const CheckResult ok = merge_results({pass, pass}, "sample");
  CHECK(ok.passed());
  CHECK(ok.points == 6);
  CHECK(ok.certificate.find("2 sample") != std::string::npos);

  const CheckResult bad = merge_results({pass, fail}, "sample");
  CHECK(bad.status == CheckResult::Status::FAIL);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.points == 4);

  CHECK(merge_results({pass, err, fail}, "sample").status == CheckResult::Status::ERROR);
  CHECK(merge_results({}, "sample").status == CheckResult::Status::ERROR);
}

TEST_CASE("fused operator: factors obey the generic elimination formulas") {
  const LOperator l = fused_L(1, {Scalar(2)}, Sign::Plus, kQ);
  const NCMatrix nc = nc_from_loperator(l);
  CHECK(nc.size() == 2);
  CHECK(nc.dimw() == 2);
  CHECK(nc.at(1, 1) == entry_block(l, 1, 1));

  const GaussData g = gauss_decompose(l);
  CHECK(g.n == 1);
  CHECK(g.fusion == 1);
  CHECK(g.sign == Sign::Plus);
  const Matrix<RatU> inv11 = entry_block(l, 1, 1).inverse();
  CHECK(g.h_at(1) == entry_block(l, 1, 1));
  CHECK(g.e_at(1, 2) == inv11 * entry_block(l, 1, 2));
  CHECK(g.f_at(2, 1) == entry_block(l, 2, 1) * inv11);
  CHECK(g.h_at(2) ==
        entry_block(l, 2, 2) - entry_block(l, 2, 1) * inv11 * entry_block(l, 1, 2));
  CHECK(g.reassemble() == nc);
}

TEST_CASE("fused operator suite at one site") {
  const LOperator l = fused_L(1, {Scalar(2)}, Sign::Plus, kQ);
  const CheckReport rep = check_gauss(l);
  CHECK(rep.suite == "gauss");
  REQUIRE(rep.items.size() == 4);
  for (const auto& it : rep.items) {
    INFO(it.id, ": ", it.result.error,
         it.result.witness ? " " + it.result.witness->detail : "");
    CHECK(it.result.passed());
  }

  CheckOptions neg;
  neg.perturb = true;
  CHECK(has_fail_with_witness(check_gauss(l, neg)));
}

TEST_CASE("fused operator suite at rank two, two sites") {
  const LOperator l = fused_L(2, default_eval_params(2), Sign::Plus, kQ);
  const CheckReport rep = check_gauss(l);
  REQUIRE(rep.items.size() == 4);
  for (const auto& it : rep.items) {
    INFO(it.id, ": ", it.result.error,
         it.result.witness ? " " + it.result.witness->detail : "");
    CHECK(it.result.passed());
  }
}

TEST_CASE("pinned evaluation agrees with the suite") {
  const QMode pinned = QMode::pinned(Rational(3, 2));
  const LOperator l = fused_L(1, {Scalar(2)}, Sign::Minus, pinned);
  CheckOptions opt;
  opt.qm = pinned;
  const CheckReport rep = check_gauss(l, opt);
  for (const auto& it : rep.items) {
    INFO(it.id);
    CHECK(it.result.passed());
  }
}
