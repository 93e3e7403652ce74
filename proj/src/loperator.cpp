#include "qca/loperator.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qca/laurent.hpp"
#include "qca/lpoly.hpp"
#include "qca/sparse.hpp"
#include "qca/verifier.hpp"

namespace qca {

namespace {

long long as_ll(const Rational& r) {
  if (r.get_den() != 1) throw Error("grid point is not an integer: " + rational_str(r));
  return r.get_num().get_si();
}

std::string entry_str(const Rational& v) { return rational_str(v); }
template <class C>
std::string entry_str(const LPoly<C>& v) {
  return v.str();
}

/// A polynomial read exactly on the window [lo, hi] (zero outside its
/// coefficient range).
LaurentSeries<Scalar> poly_series(const UPoly& p, int lo, int hi) {
  std::vector<Scalar> c(static_cast<size_t>(hi - lo) + 1, Scalar());
  for (int k = std::max(0, lo); k <= std::min(p.degree(), hi); ++k)
    c[static_cast<size_t>(k - lo)] = p.coeff(k);
  return LaurentSeries<Scalar>(lo, std::move(c));
}

/// Both sides of the exchange relation on cleared numerators at one grid
/// point (u, v, a_1..a_m).  Every factor's clearing denominator appears once
/// on each side, so equal numerator products certify the identity.
template <class CP>
PointCheck rll_point(int n, int m, long long uu, long long vv,
                     const std::vector<long long>& aa, const CP& cp, bool reverse,
                     bool perturb) {
  using E = typename CP::Entry;
  const int d = 2 * n;
  const SiteShape sh = SiteShape::uniform(m + 2, d);
  const int dim = static_cast<int>(sh.size());

  const auto fused = [&](int aux, long long x) {
    SparseMat<E> acc = SparseMat<E>::identity(dim, cp.term(1, 0));
    for (int j = 0; j < m; ++j) {
      const int site = reverse ? m - j : j + 1;
      const auto f = cleared_rbar(n, ClearedArg{x, aa[static_cast<size_t>(site - 1)], 0}, cp);
      acc = acc * sparse_embed(sh, {aux, site + 1}, f);
    }
    return acc;
  };

  const auto A = sparse_embed(sh, {0, 1}, cleared_rbar(n, ClearedArg{uu, vv, 0}, cp));
  auto Al = A;
  if (perturb) Al.add(0, 0, cp.term(1, 0));  // negative-control hook
  const auto L1 = fused(0, uu);
  const auto L2 = fused(1, vv);

  const auto lhs = Al * L1 * L2;
  const auto rhs = L2 * L1 * A;
  const auto diff = lhs.first_diff(rhs);
  if (!diff) return PointCheck::ok();
  const auto& [i, j, lv, rv] = *diff;
  return PointCheck::bad(entry_str(lv), entry_str(rv),
                         "entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") of the cleared products on " + std::to_string(m + 2) +
                             " sites");
}

CheckResult rll_grid(const LOperator& L, bool reverse, const CheckOptions& opt) {
  const int n = L.n, m = L.m;
  std::vector<VarSpec> vars{{"u", 2 + 2 * m}, {"v", 2 + 2 * m}};
  for (int j = 1; j <= m; ++j) vars.push_back({"a" + std::to_string(j), 4});

  const PointChecker point = [n, m, reverse, &opt](const Assignment& asn) {
    const long long uu = as_ll(asn["u"]), vv = as_ll(asn["v"]);
    std::vector<long long> aa(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j)
      aa[static_cast<size_t>(j - 1)] = as_ll(asn["a" + std::to_string(j)]);
    if (opt.qm.is_symbolic()) {
      try {
        return rll_point(n, m, uu, vv, aa, LaurentCoeffs<int64_t>{}, reverse, opt.perturb);
      } catch (const OverflowError&) {
        return rll_point(n, m, uu, vv, aa, LaurentCoeffs<Integer>{}, reverse, opt.perturb);
      }
    }
    return rll_point(n, m, uu, vv, aa, PinnedCoeffs{opt.qm.q_value()}, reverse, opt.perturb);
  };
  return verify_identity(vars, point);
}

/// Both expansion tags reconstruct the shared rational entries: the series
/// at u = 0 re-multiplies against the denominator to the numerator on the
/// window, and the series at u = infinity mirrors the series of f(1/u) at 0.
CheckResult expansion_result(const LOperator& L, const CheckOptions& opt) {
  const int K = std::max(4, opt.trunc);
  const int size = static_cast<int>(L.dim());
  long long checked = 0;
  bool perturb_pending = opt.perturb;

  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      const RatU& f = L.matrix.mat()(r, c);
      if (f.is_zero()) continue;

      auto s0 = f.expand_at_zero(K);
      if (perturb_pending) {  // negative control: damage one coefficient
        s0 = s0 + LaurentSeries<Scalar>::monomial(Scalar(1), s0.lo(), K);
        perturb_pending = false;
      }
      const auto zero_side = s0 * poly_series(f.den(), 0, K) - poly_series(f.num(), s0.lo(), K);
      if (!zero_side.window_is_zero()) {
        CheckResult res = exact_result(
            false, "", "series-times-denominator mismatch", "numerator",
            "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                ") under the + tag, window top " + std::to_string(K));
        res.points = checked;
        return res;
      }

      const RatU g = f.invert_var();
      const auto sg = g.expand_at_zero(K);
      const auto ginv_side =
          sg * poly_series(g.den(), 0, K) - poly_series(g.num(), sg.lo(), K);
      const auto sinf = f.expand_at_infinity(-K);
      bool mirrored = ginv_side.window_is_zero();
      for (int k = std::max(sinf.lo(), -K); mirrored && k <= sinf.hi(); ++k)
        mirrored = sinf.at(k) == sg.at(-k);
      if (!mirrored) {
        CheckResult res = exact_result(
            false, "", "expansion at infinity", "mirrored expansion of f(1/u) at zero",
            "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                ") under the - tag");
        res.points = checked;
        return res;
      }
      ++checked;
    }

  CheckResult res = exact_result(
      true,
      "every nonzero entry: + series times denominator equals the numerator "
      "through u^" +
          std::to_string(K) + ", and the - series mirrors the expansion of f(1/u)");
  res.points = checked;
  return res;
}

/// PASS iff some pair of entry blocks fails to commute at a generic point:
/// the fused operator family is genuinely noncommutative.
CheckResult noncommute_result(const LOperator& L, const CheckOptions& opt) {
  const Matrix<RatU> b12 = entry_block(L, 1, 2);
  const Matrix<RatU> b21 = opt.perturb ? b12 : entry_block(L, 2, 1);

  for (long long u0 = 5; u0 <= 19; u0 += 2) {
    const long long v0 = u0 + 2;
    try {
      const auto ev = [&](const Matrix<RatU>& b, long long x) {
        const Scalar x0(static_cast<long>(x));
        Matrix<Scalar> out(b.rows(), b.cols());
        for (int r = 0; r < b.rows(); ++r)
          for (int c = 0; c < b.cols(); ++c) out(r, c) = b(r, c).eval(x0);
        return out;
      };
      const Matrix<Scalar> e12 = ev(b12, u0);
      const Matrix<Scalar> e21 = ev(b21, v0);
      const Matrix<Scalar> comm = e12 * e21 - e21 * e12;
      for (int r = 0; r < comm.rows(); ++r)
        for (int c = 0; c < comm.cols(); ++c)
          if (!comm(r, c).is_zero()) {
            CheckResult res = exact_result(
                true, "nonzero commutator of the (1,2) and (2,1) entry blocks at u=" +
                          std::to_string(u0) + ", v=" + std::to_string(v0) +
                          ": module entry (" + std::to_string(r + 1) + "," +
                          std::to_string(c + 1) + ") equals " + comm(r, c).str());
            res.points = 1;
            return res;
          }
      CheckResult res;
      res.status = CheckResult::Status::FAIL;
      res.witness = Witness{"u=" + std::to_string(u0) + ", v=" + std::to_string(v0),
                            "[l_12(u), l_21(v)] = 0", "a nonzero commutator",
                            "the entry blocks commute at a generic point"};
      res.points = 1;
      return res;
    } catch (const ZeroDivisionError&) {
      continue;  // pinned q can hit a denominator root; try the next point
    }
  }
  throw Error("noncommute check: no evaluable point found");
}

}  // namespace

Sign parse_sign(const std::string& name) {
  if (name == "plus" || name == "+") return Sign::Plus;
  if (name == "minus" || name == "-") return Sign::Minus;
  throw ConfigError("unknown sign tag: " + name + " (use plus|minus)");
}

std::string sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

std::vector<Scalar> default_eval_params(int m) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  if (m < 0 || m > static_cast<int>(sizeof(primes) / sizeof(primes[0])))
    throw ConfigError("default_eval_params: supported fusion range is 0..10");
  std::vector<Scalar> out;
  for (int j = 0; j < m; ++j) out.emplace_back(Rational(primes[j]));
  return out;
}

LOperator fused_L(int n, const std::vector<Scalar>& params, Sign sign, const QMode& qm,
                  bool reverse) {
  if (n < 1) throw ConfigError("fused_L: rank must be >= 1");
  const int m = static_cast<int>(params.size());
  for (int i = 0; i < m; ++i) {
    if (params[static_cast<size_t>(i)].is_zero())
      throw ConfigError("fused_L: evaluation parameter " + std::to_string(i + 1) +
                        " is zero");
    for (int j = i + 1; j < m; ++j)
      if (params[static_cast<size_t>(i)] == params[static_cast<size_t>(j)])
        throw ConfigError("fused_L: evaluation parameters " + std::to_string(i + 1) +
                          " and " + std::to_string(j + 1) + " coincide");
  }

  LOperator L;
  L.n = n;
  L.m = m;
  L.sign = sign;
  L.qm = qm;
  L.params = params;
  L.shape = SiteShape::uniform(m + 1, 2 * n);
  if (L.shape.size() > 10000)
    throw ConfigError("fused_L: dense operator dimension " +
                      std::to_string(L.shape.size()) + " > 10000; refusing");
  L.matrix = TensorOp<RatU>::identity(L.shape, RatU(Scalar(1)));

  const ParamRMatrix bar = build_param(n, RVariant::Bar, qm);
  for (int j = 0; j < m; ++j) {
    const int site = reverse ? m - j : j + 1;
    const Scalar& a = L.params[static_cast<size_t>(site - 1)];
    // bar(u / a): dilate every entry's argument by 1/a.
    const Matrix<RatU>& src = bar.entries.mat();
    Matrix<RatU> dil(src.rows(), src.cols());
    const Scalar ainv = a.inverse();
    for (int r = 0; r < src.rows(); ++r)
      for (int c = 0; c < src.cols(); ++c)
        if (!src(r, c).is_zero()) dil(r, c) = src(r, c).dilate(ainv);
    const auto factor = TensorOp<RatU>::embed(L.shape, {0, site}, dil);
    L.matrix = (j == 0) ? factor : L.matrix * factor;
  }
  return L;
}

Matrix<RatU> entry_block(const LOperator& L, int i, int j) {
  const int d = 2 * L.n;
  if (i < 1 || i > d || j < 1 || j > d)
    throw IndexError("entry_block: auxiliary index out of range");
  const SiteShape w = L.shape.drop(0);
  const int dw = static_cast<int>(w.size());
  Matrix<RatU> out(dw, dw);
  std::vector<int> row(static_cast<size_t>(L.shape.sites()));
  std::vector<int> col(static_cast<size_t>(L.shape.sites()));
  row[0] = i;
  col[0] = j;
  for (int r = 0; r < dw; ++r) {
    const auto rm = w.sites() ? w.unflatten(r) : std::vector<int>{};
    for (size_t s = 0; s < rm.size(); ++s) row[s + 1] = rm[s];
    for (int c = 0; c < dw; ++c) {
      const auto cm = w.sites() ? w.unflatten(c) : std::vector<int>{};
      for (size_t s = 0; s < cm.size(); ++s) col[s + 1] = cm[s];
      out(r, c) = L.matrix.matrix_element(row, col);
    }
  }
  return out;
}

CheckReport check_rll(const LOperator& L, const CheckOptions& opt) {
  CheckReport rep{"rll", {}};
  const std::string tag = ".n" + std::to_string(L.n) + ".m" + std::to_string(L.m);

  const long long dim_rll = L.dim() * (2 * L.n);  // two auxiliary sites
  if (dim_rll > 10000)
    throw ConfigError("check_rll: exchange-relation space has dimension " +
                      std::to_string(dim_rll) + " > 10000; refusing");

  rep.items.push_back(run_item(
      "rll.exchange" + tag,
      "exchange relation: bar(u/v) L1(u) L2(v) = L2(v) L1(u) bar(u/v)",
      [&]() { return rll_grid(L, false, opt); }));

  rep.items.push_back(run_item(
      "rll.swapped" + tag, "reversed fusion order satisfies the exchange relation",
      [&]() { return rll_grid(L, true, opt); }));

  rep.items.push_back(run_item(
      "rll.expansion" + tag, "both sign tags expand the shared rational matrix",
      [&]() { return expansion_result(L, opt); }));

  if (L.m >= 2)
    rep.items.push_back(run_item(
        "rll.noncommute" + tag, "entry blocks do not commute (operator-valued entries)",
        [&]() { return noncommute_result(L, opt); }));

  return rep;
}

}  // namespace qca
