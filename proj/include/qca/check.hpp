/**
 * @file check.hpp
 * @brief Suite-level check plumbing: options, timed items, reports.
 *
 * A CheckItem wraps one verified identity: a stable machine id, a short
 * human-readable anchor naming the identity, and the CheckResult produced by
 * the verifier (or by an exact structural comparison).  A CheckReport is the
 * ordered list of items for one suite; it passes iff every item passed.
 */
#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qca/common.hpp"
#include "qca/scalar.hpp"
#include "qca/verifier.hpp"

namespace qca {

/// Options shared by every suite-level check.
struct CheckOptions {
  QMode qm = QMode::symbolic();
  /// Window for truncated-series comparisons.
  int trunc = 12;
  /// Negative control: deliberately damage one input so the suite must FAIL
  /// with a witness.  Never set outside tests and the --perturb CLI flag.
  bool perturb = false;
  /// Seed for sampled checks (only used where a check says so).
  unsigned seed = 1;
};

/// One verified identity, ready for reporting.
struct CheckItem {
  std::string id;      // stable machine id, e.g. "ybe.bar.n2"
  std::string anchor;  // short name of the identity being checked
  CheckResult result;
  long long millis = 0;
};

/// All items of one named suite, in a deterministic order.
struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;

  bool passed() const {
    for (const auto& it : items)
      if (!it.result.passed()) return false;
    return true;
  }
};

/// Run one item body under timing; stray library exceptions become ERROR
/// results so a suite always yields a complete report.
inline CheckItem run_item(std::string id, std::string anchor,
                          const std::function<CheckResult()>& body) {
  CheckItem item;
  item.id = std::move(id);
  item.anchor = std::move(anchor);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    item.result = body();
  } catch (const Error& e) {
    item.result = CheckResult{};
    item.result.status = CheckResult::Status::ERROR;
    item.result.error = e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  item.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return item;
}

/// Result of an exact one-shot comparison (no grid): PASS with the given
/// certificate, or FAIL with a structural witness.
inline CheckResult exact_result(bool ok, std::string certificate, std::string lhs = {},
                                std::string rhs = {}, std::string detail = {}) {
  CheckResult r;
  r.points = 1;
  if (ok) {
    r.status = CheckResult::Status::PASS;
    r.certificate = std::move(certificate);
  } else {
    r.status = CheckResult::Status::FAIL;
    r.witness = Witness{"(no free variables)", std::move(lhs), std::move(rhs), std::move(detail)};
  }
  return r;
}

}  // namespace qca
