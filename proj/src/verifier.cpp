#include "qca/verifier.hpp"

#include <sstream>

#include "qca/common.hpp"

namespace qca {

const Rational& Assignment::operator[](const std::string& name) const {
  for (size_t i = 0; i < specs_->size(); ++i)
    if ((*specs_)[i].name == name) return vals_[i];
  throw Error("Assignment: unknown variable '" + name + "'");
}

std::string Assignment::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (i) os << ", ";
    os << (*specs_)[i].name << "=" << rational_str(vals_[i]);
  }
  return os.str();
}

namespace {

// Axis values for one attempt: consecutive integer blocks starting at
// 2 + shift, one block per variable, each holding the bound+1 grid values
// followed by that variable's single axis-check value.
struct Axes {
  std::vector<std::vector<Rational>> grid;  // per variable, bound+1 values
  std::vector<Rational> extra;              // per variable, one more value
};

Axes make_axes(const std::vector<VarSpec>& vars, int shift) {
  Axes ax;
  long next = 2 + shift;
  for (const auto& v : vars) {
    if (v.bound < 0) throw Error("verify_identity: negative bound for " + v.name);
    std::vector<Rational> block;
    for (int k = 0; k <= v.bound; ++k) block.emplace_back(next++);
    ax.grid.push_back(std::move(block));
    ax.extra.emplace_back(next++);
  }
  return ax;
}

std::string describe_grid(const std::vector<VarSpec>& vars, const Axes& ax, int shift) {
  std::ostringstream os;
  os << "interpolation grid";
  if (vars.empty()) {
    os << " (no free variables; single exact evaluation)";
    return os.str();
  }
  os << " ";
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) os << "x";
    os << ax.grid[i].size();
  }
  os << " with ";
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) os << ", ";
    os << vars[i].name << " in [" << rational_str(ax.grid[i].front()) << ".."
       << rational_str(ax.grid[i].back()) << "] (deg <= " << vars[i].bound << ")";
  }
  os << "; +" << vars.size() << " axis points";
  if (shift > 0) os << "; grid shifted by " << shift << " to clear denominators";
  return os.str();
}

}  // namespace

CheckResult verify_identity(const std::vector<VarSpec>& vars, const PointChecker& check,
                            const GridOptions& opts) {
  CheckResult res;
  for (int shift = 0; shift <= opts.max_shift; ++shift) {
    const Axes ax = make_axes(vars, shift);
    const size_t nv = vars.size();
    bool retry = false;

    // Full Cartesian certificate grid (odometer over per-variable indices).
    std::vector<size_t> idx(nv, 0);
    while (true) {
      std::vector<Rational> vals;
      vals.reserve(nv);
      for (size_t i = 0; i < nv; ++i) vals.push_back(ax.grid[i][idx[i]]);
      const Assignment a(&vars, std::move(vals));
      PointCheck pc;
      try {
        pc = check(a);
        ++res.points;
      } catch (const ZeroDivisionError&) {
        retry = true;  // a denominator vanished at this grid: shift and restart
        break;
      }
      if (!pc.equal) {
        res.status = CheckResult::Status::FAIL;
        res.witness = Witness{a.str(), pc.lhs, pc.rhs, pc.detail};
        res.certificate = describe_grid(vars, ax, shift);
        return res;
      }
      // advance odometer
      size_t d = 0;
      while (d < nv && ++idx[d] == ax.grid[d].size()) idx[d++] = 0;
      if (d == nv || nv == 0) break;
    }
    if (retry) continue;

    // Axis points: grid passed, so a failure here cannot be a counterexample
    // to a bona fide identity within the declared bounds -- it means the
    // bounds were understated.  Refuse to certify.
    for (size_t i = 0; i < nv; ++i) {
      std::vector<Rational> vals;
      for (size_t j = 0; j < nv; ++j)
        vals.push_back(j == i ? ax.extra[i] : ax.grid[j].front());
      const Assignment a(&vars, std::move(vals));
      PointCheck pc;
      try {
        pc = check(a);
        ++res.points;
      } catch (const ZeroDivisionError&) {
        retry = true;
        break;
      }
      if (!pc.equal) {
        res.status = CheckResult::Status::ERROR;
        res.error = "degree bound too small in variable '" + vars[i].name +
                    "': grid certified but axis point failed at " + a.str();
        res.witness = Witness{a.str(), pc.lhs, pc.rhs, pc.detail};
        res.certificate = describe_grid(vars, ax, shift);
        return res;
      }
    }
    if (retry) continue;

    res.status = CheckResult::Status::PASS;
    res.certificate = describe_grid(vars, ax, shift);
    return res;
  }

  res.status = CheckResult::Status::ERROR;
  res.error = "sample-point exhaustion: denominators vanished on every grid within " +
              std::to_string(opts.max_shift) + " shifts";
  return res;
}

}  // namespace qca
