// The grid-certificate identity verifier: passing identities, refuted
// identities with witnesses, understated degree bounds, and denominator
// avoidance must each behave deterministically.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qca/common.hpp"
#include "qca/scalar.hpp"
#include "qca/upoly.hpp"
#include "qca/verifier.hpp"

using namespace qca;

namespace {

PointCheck compare(const Rational& l, const Rational& r) {
  if (l == r) return PointCheck::ok();
  return PointCheck::bad(rational_str(l), rational_str(r));
}

}  // namespace

TEST_CASE("true identities pass with a grid certificate") {
  const std::vector<VarSpec> vars = {{"u", 2}, {"v", 2}};
  const auto res = verify_identity(vars, [](const Assignment& a) {
    const Rational u = a["u"], v = a["v"];
    return compare((u + v) * (u + v), u * u + 2 * u * v + v * v);
  });
  CHECK(res.passed());
  CHECK(res.points == 3 * 3 + 2);
  CHECK(res.certificate.find("interpolation grid 3x3") != std::string::npos);
  CHECK(res.certificate.find("u in [2..4]") != std::string::npos);
  CHECK(res.certificate.find("v in [6..8]") != std::string::npos);

  // Determinism: identical runs give identical certificates.
  const auto res2 = verify_identity(vars, [](const Assignment& a) {
    const Rational u = a["u"], v = a["v"];
    return compare((u + v) * (u + v), u * u + 2 * u * v + v * v);
  });
  CHECK(res2.certificate == res.certificate);
}

TEST_CASE("false identities fail with a witness point") {
  const std::vector<VarSpec> vars = {{"u", 2}};
  const auto res = verify_identity(vars, [](const Assignment& a) {
    const Rational u = a["u"];
    return compare(u * u, 3 * u - 2);
  });
  CHECK(res.status == CheckResult::Status::FAIL);
  REQUIRE(res.witness.has_value());
  // u=2 happens to satisfy u^2 = 3u-2; the witness is the next grid point.
  CHECK(res.witness->point == "u=3");
  CHECK(res.witness->lhs == "9");
  CHECK(res.witness->rhs == "7");
}

TEST_CASE("understated bounds are an error, not a pass") {
  // 5u - 6 interpolates u^2 exactly at the two grid points u=2,3 that a
  // declared bound of 1 would allow, so only the axis point can catch it.
  const std::vector<VarSpec> vars = {{"u", 1}};
  const auto res = verify_identity(vars, [](const Assignment& a) {
    const Rational u = a["u"];
    return compare(u * u, 5 * u - 6);
  });
  CHECK(res.status == CheckResult::Status::ERROR);
  CHECK(res.error.find("degree bound too small in variable 'u'") != std::string::npos);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->point == "u=4");
}

TEST_CASE("grids shift to avoid vanishing denominators") {
  const std::vector<VarSpec> vars = {{"u", 2}};
  int throws = 0;
  const auto res = verify_identity(vars, [&](const Assignment& a) {
    if (a["u"] == 5) {
      ++throws;
      throw ZeroDivisionError("simulated pole at u=5");
    }
    return PointCheck::ok();
  });
  CHECK(res.passed());
  // Blocks {2,3,4}+{5}, {3,4,5}+{6}, {4,5,6}+{7}, {5,..}: first clean block
  // starts at 6 (shift 4).
  CHECK(throws == 4);
  CHECK(res.certificate.find("u in [6..8]") != std::string::npos);
  CHECK(res.certificate.find("shifted by 4") != std::string::npos);

  const auto dead = verify_identity(
      vars, [](const Assignment&) -> PointCheck { throw ZeroDivisionError("always"); },
      GridOptions{.max_shift = 7});
  CHECK(dead.status == CheckResult::Status::ERROR);
  CHECK(dead.error.find("sample-point exhaustion") != std::string::npos);
}

TEST_CASE("variable-free identities evaluate exactly once") {
  const QMode qm = QMode::symbolic();
  const auto res = verify_identity({}, [&](const Assignment&) {
    const Scalar lhs = (qm.q_power(1) - qm.q_power(-1)) * qm.q_int(2);
    const Scalar rhs = qm.q_power(2) - qm.q_power(-2);
    return lhs == rhs ? PointCheck::ok() : PointCheck::bad(lhs.str(), rhs.str());
  });
  CHECK(res.passed());
  CHECK(res.points == 1);
  CHECK(res.certificate.find("no free variables") != std::string::npos);
}

TEST_CASE("rational functions of u verified through evaluation") {
  // (u^2 - 1)/(u - 1) = u + 1 as rational functions; cleared numerator has
  // degree 2 in u.
  const QMode qm = QMode::symbolic();
  const RatU lhs(UPoly(std::vector<Scalar>{Scalar(-1), Scalar(0), Scalar(1)}),
                 UPoly(std::vector<Scalar>{Scalar(-1), Scalar(1)}));
  const RatU rhs(UPoly(std::vector<Scalar>{Scalar(1), Scalar(1)}));
  const auto res = verify_identity({{"u", 2}}, [&](const Assignment& a) {
    const Scalar u{a["u"]};
    const Scalar l = lhs.eval(u), r = rhs.eval(u);
    return l == r ? PointCheck::ok() : PointCheck::bad(l.str(), r.str());
  });
  CHECK(res.passed());
  (void)qm;
}
