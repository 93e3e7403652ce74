/**
 * @file verifier.hpp
 * @brief Deterministic exact verification of multivariate rational identities.
 *
 * To prove an identity L = R of rational functions whose cleared numerators
 * have degree at most b_i in the i-th variable, it suffices to check it
 * exactly on a Cartesian grid with b_i + 1 distinct values per variable:
 * a polynomial respecting those bounds that vanishes on such a grid is zero.
 * The driver here owns the point selection, so every run is deterministic:
 *
 *   - each variable gets a block of consecutive small integers (>= 2),
 *     disjoint from every other variable's block;
 *   - the full product grid is evaluated with exact arithmetic;
 *   - one extra "axis" point per variable is checked afterwards.  If the
 *     grid passed but an axis point fails, the identity is NOT refuted --
 *     the declared degree bound was too small, and the result is an ERROR
 *     naming the variable, never a silent pass;
 *   - if evaluation hits a vanishing denominator (possible when q is pinned
 *     to a rational), the whole grid is shifted upward and restarted, with a
 *     deterministic cap before giving up.
 *
 * A PASS therefore carries a finite certificate: the grid that was checked,
 * recorded in the result.  A FAIL carries a concrete witness point.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qca/rational.hpp"

namespace qca {

/// One grid variable and the degree bound the identity claims in it.
struct VarSpec {
  std::string name;
  int bound;  // max degree of the cleared numerator in this variable
};

/// A joint assignment of rational values to the variables.
class Assignment {
 public:
  Assignment(const std::vector<VarSpec>* specs, std::vector<Rational> vals)
      : specs_(specs), vals_(std::move(vals)) {}

  /// Value by variable name (throws Error for unknown names).
  const Rational& operator[](const std::string& name) const;
  const Rational& value(size_t i) const { return vals_.at(i); }
  size_t size() const { return vals_.size(); }

  /// "u=2, v=9" style rendering for witnesses.
  std::string str() const;

 private:
  const std::vector<VarSpec>* specs_;
  std::vector<Rational> vals_;
};

/// Outcome of evaluating both sides at one point.  The strings are consulted
/// only on mismatch and may be left empty otherwise.
struct PointCheck {
  bool equal = false;
  std::string lhs, rhs, detail;
  static PointCheck ok() { return {true, {}, {}, {}}; }
  static PointCheck bad(std::string lhs, std::string rhs, std::string detail = {}) {
    return {false, std::move(lhs), std::move(rhs), std::move(detail)};
  }
};

using PointChecker = std::function<PointCheck(const Assignment&)>;

/// Where and how an identity failed.
struct Witness {
  std::string point;  // assignment rendering
  std::string lhs, rhs, detail;
};

struct CheckResult {
  enum class Status { PASS, FAIL, ERROR };
  Status status = Status::ERROR;
  std::string certificate;  // for PASS: what was checked, exactly
  std::optional<Witness> witness;
  std::string error;  // for ERROR: bound-too-small, point exhaustion, exception
  long long points = 0;

  bool passed() const { return status == Status::PASS; }
};

struct GridOptions {
  int max_shift = 64;  // restarts allowed when denominators vanish on the grid
};

/// Verify an identity with the declared per-variable degree bounds.
CheckResult verify_identity(const std::vector<VarSpec>& vars, const PointChecker& check,
                            const GridOptions& opts = {});

}  // namespace qca
