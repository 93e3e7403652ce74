// Fused L-operators: the construction is compared factor by factor against
// independent substitutions into the unitary exchange matrix, the exchange
// relation is cross-checked through the dense rational route at fixed
// points, and the check suite is exercised in symbolic, pinned, and
// negative-control modes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "qca/common.hpp"
#include "qca/loperator.hpp"

using namespace qca;

namespace {

const QMode kQ = QMode::symbolic();

// Dense evaluation of a tensor operator over rational functions at u = u0.
TensorOp<Scalar> at_point(const TensorOp<RatU>& t, const Scalar& u0) {
  return eval_entries(t, u0);
}

bool has_fail_with_witness(const CheckReport& rep) {
  if (rep.passed()) return false;
  for (const auto& it : rep.items)
    if (it.result.status == CheckResult::Status::FAIL && it.result.witness.has_value())
      return true;
  return false;
}

}  // namespace

TEST_CASE("sign tags and parameter defaults") {
  CHECK(parse_sign("plus") == Sign::Plus);
  CHECK(parse_sign("+") == Sign::Plus);
  CHECK(parse_sign("minus") == Sign::Minus);
  CHECK(parse_sign("-") == Sign::Minus);
  CHECK_THROWS_AS(parse_sign("up"), ConfigError);
  CHECK(sign_name(Sign::Plus) == "plus");
  CHECK(sign_name(Sign::Minus) == "minus");

  const auto p3 = default_eval_params(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Scalar(2));
  CHECK(p3[1] == Scalar(3));
  CHECK(p3[2] == Scalar(5));
  CHECK(default_eval_params(0).empty());
  CHECK_THROWS_AS(default_eval_params(11), ConfigError);
}

TEST_CASE("construction and validation") {
  CHECK_THROWS_AS(fused_L(0, {}, Sign::Plus, kQ), ConfigError);
  CHECK_THROWS_AS(fused_L(1, {Scalar(0)}, Sign::Plus, kQ), ConfigError);
  CHECK_THROWS_AS(fused_L(1, {Scalar(2), Scalar(2)}, Sign::Plus, kQ), ConfigError);

  // m = 0 is the identity on the auxiliary site.
  const LOperator id1 = fused_L(2, {}, Sign::Minus, kQ);
  CHECK(id1.m == 0);
  CHECK(id1.dim() == 4);
  CHECK(id1.matrix == TensorOp<RatU>::identity(id1.shape, RatU(Scalar(1))));
  CHECK(id1.sign == Sign::Minus);

  // m = 1 is the exchange matrix with a rescaled argument: every entry of
  // L equals the corresponding bar entry dilated by 1/a.
  const Scalar a(3);
  const LOperator L1 = fused_L(1, {a}, Sign::Plus, kQ);
  const ParamRMatrix bar = build_param(1, RVariant::Bar, kQ);
  const Scalar ainv = a.inverse();
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          CHECK(L1.matrix.matrix_element({i, k}, {j, l}) ==
                bar.entries.matrix_element({i, k}, {j, l}).dilate(ainv));

  // Substitution commutes with evaluation: L(u0) = bar(u0/a) entrywise.
  const Scalar u0(7);
  CHECK(at_point(L1.matrix, u0) == at_point(bar.entries, u0 * ainv));
}

TEST_CASE("fused product against an independent dense assembly") {
  // Assemble bar_{01}(u/2) bar_{02}(u/3) at fixed u by embedding evaluated
  // factors, and compare with the evaluated fused matrix.
  const std::vector<Scalar> params = default_eval_params(2);
  const LOperator L = fused_L(1, params, Sign::Plus, kQ);
  const ParamRMatrix bar = build_param(1, RVariant::Bar, kQ);

  const Scalar u0(5);
  const SiteShape sh = SiteShape::uniform(3, 2);
  const auto f1 = at_point(bar.entries, u0 / params[0]);
  const auto f2 = at_point(bar.entries, u0 / params[1]);
  const auto expect = TensorOp<Scalar>::embed(sh, {0, 1}, f1.mat()) *
                      TensorOp<Scalar>::embed(sh, {0, 2}, f2.mat());
  CHECK(at_point(L.matrix, u0) == expect);

  // Reversed order multiplies the same factors the other way around.
  const LOperator Lr = fused_L(1, params, Sign::Plus, kQ, /*reverse=*/true);
  const auto expect_r = TensorOp<Scalar>::embed(sh, {0, 2}, f2.mat()) *
                        TensorOp<Scalar>::embed(sh, {0, 1}, f1.mat());
  CHECK(at_point(Lr.matrix, u0) == expect_r);
  CHECK(at_point(Lr.matrix, u0) != at_point(L.matrix, u0));
}

TEST_CASE("entry blocks slice the auxiliary space") {
  const LOperator L = fused_L(1, default_eval_params(2), Sign::Plus, kQ);
  const Matrix<RatU> b12 = entry_block(L, 1, 2);
  REQUIRE(b12.rows() == 4);
  REQUIRE(b12.cols() == 4);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) {
      const auto rm = SiteShape::uniform(2, 2).unflatten(r - 1);
      const auto cm = SiteShape::uniform(2, 2).unflatten(c - 1);
      CHECK(b12(r - 1, c - 1) ==
            L.matrix.matrix_element({1, rm[0], rm[1]}, {2, cm[0], cm[1]}));
    }
  CHECK_THROWS_AS(entry_block(L, 0, 1), IndexError);
  CHECK_THROWS_AS(entry_block(L, 1, 3), IndexError);

  // m = 0: the block of the identity operator is the 1x1 identity.
  const LOperator id0 = fused_L(1, {}, Sign::Plus, kQ);
  CHECK(entry_block(id0, 1, 1)(0, 0) == RatU(Scalar(1)));
  CHECK(entry_block(id0, 1, 2)(0, 0).is_zero());
}

TEST_CASE("exchange relation dense cross-check at fixed points") {
  // bar(u/v) L1(u) L2(v) = L2(v) L1(u) bar(u/v) assembled through the dense
  // rational route (no cleared numerators) at a handful of generic points.
  const std::vector<Scalar> params = default_eval_params(2);
  const LOperator L = fused_L(1, params, Sign::Plus, kQ);
  const ParamRMatrix bar = build_param(1, RVariant::Bar, kQ);

  const SiteShape big = SiteShape::uniform(4, 2);  // aux1, aux2, two modules
  for (long uv : {5, 7}) {
    const Scalar u0(uv), v0(uv + 6);
    const auto Ruv = TensorOp<Scalar>::embed(big, {0, 1}, at_point(bar.entries, u0 / v0).mat());
    const auto mk = [&](int aux, const Scalar& x) {
      return TensorOp<Scalar>::embed(big, {aux, 2}, at_point(bar.entries, x / params[0]).mat()) *
             TensorOp<Scalar>::embed(big, {aux, 3}, at_point(bar.entries, x / params[1]).mat());
    };
    const auto L1 = mk(0, u0);
    const auto L2 = mk(1, v0);
    CHECK(Ruv * L1 * L2 == L2 * L1 * Ruv);
  }
}

TEST_CASE("rll suite at small sizes") {
  // m = 0: the relation degenerates to bar(u/v) = bar(u/v).
  const CheckReport r0 = check_rll(fused_L(1, {}, Sign::Plus, kQ));
  CHECK(r0.passed());
  CHECK(r0.items.size() == 3);  // exchange, swapped, expansion
  CHECK(r0.items[0].id == "rll.exchange.n1.m0");

  // m = 1 is the Yang-Baxter equation.
  const CheckReport r1 = check_rll(fused_L(1, default_eval_params(1), Sign::Plus, kQ));
  CHECK(r1.passed());

  const CheckReport r2 = check_rll(fused_L(2, default_eval_params(1), Sign::Plus, kQ));
  CHECK(r2.passed());

  // Two fused sites at rank 1, including the noncommutativity witness.
  const CheckReport r12 = check_rll(fused_L(1, default_eval_params(2), Sign::Plus, kQ));
  CHECK(r12.passed());
  REQUIRE(r12.items.size() == 4);
  CHECK(r12.items[3].id == "rll.noncommute.n1.m2");
  CHECK(r12.items[3].result.certificate.find("nonzero commutator") != std::string::npos);

  // Dimension guards: the exchange space of a rank-13 single-site operator
  // exceeds the refusal threshold, and so does a rank-8 fused carrier.
  CHECK_THROWS_AS(check_rll(fused_L(13, default_eval_params(1), Sign::Plus, kQ)),
                  ConfigError);
  CHECK_THROWS_AS(fused_L(8, default_eval_params(3), Sign::Plus, kQ), ConfigError);
}

TEST_CASE("rll suite pinned and perturbed") {
  CheckOptions pinned;
  pinned.qm = QMode::pinned(Rational(3, 2));
  const LOperator Lp = fused_L(1, default_eval_params(2), Sign::Plus, pinned.qm);
  CHECK(check_rll(Lp, pinned).passed());

  CheckOptions bad;
  bad.perturb = true;
  const LOperator L = fused_L(1, default_eval_params(2), Sign::Plus, kQ);
  const CheckReport broken = check_rll(L, bad);
  CHECK(has_fail_with_witness(broken));
  // The damaged factor breaks the exchange grid, the damaged series breaks
  // the expansion item, and the aliased blocks break the witness item.
  CHECK(broken.items[0].result.status == CheckResult::Status::FAIL);
  CHECK(broken.items[2].result.status == CheckResult::Status::FAIL);
  CHECK(broken.items[3].result.status == CheckResult::Status::FAIL);
}

TEST_CASE("rll suite at the target size") {
  const CheckReport rep = check_rll(fused_L(2, default_eval_params(2), Sign::Plus, kQ));
  CHECK(rep.passed());
  REQUIRE(rep.items.size() == 4);
  for (const auto& it : rep.items) CHECK(it.result.status == CheckResult::Status::PASS);
}
