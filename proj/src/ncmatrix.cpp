#include "qca/ncmatrix.hpp"

#include <algorithm>

#include "qca/common.hpp"

namespace qca {

NCMatrix::NCMatrix(int size, int dimw) : size_(size), dimw_(dimw) {
  if (size < 0 || dimw < 1) throw DimensionError("NCMatrix: bad shape");
  e_.assign(static_cast<size_t>(size) * static_cast<size_t>(size), Matrix<RatU>(dimw, dimw));
}

NCMatrix NCMatrix::identity(int size, int dimw) {
  NCMatrix m(size, dimw);
  const Matrix<RatU> one = Matrix<RatU>::identity(dimw, RatU(Scalar(1)));
  for (int i = 1; i <= size; ++i) m.at(i, i) = one;
  return m;
}

void NCMatrix::require_index(int i, int j) const {
  if (i < 1 || i > size_ || j < 1 || j > size_)
    throw IndexError("NCMatrix: index (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") outside " + std::to_string(size_) + "x" + std::to_string(size_));
}

Matrix<RatU>& NCMatrix::at(int i, int j) {
  require_index(i, j);
  return e_[static_cast<size_t>(i - 1) * static_cast<size_t>(size_) +
            static_cast<size_t>(j - 1)];
}

const Matrix<RatU>& NCMatrix::at(int i, int j) const {
  require_index(i, j);
  return e_[static_cast<size_t>(i - 1) * static_cast<size_t>(size_) +
            static_cast<size_t>(j - 1)];
}

NCMatrix NCMatrix::operator*(const NCMatrix& o) const {
  if (size_ != o.size_ || dimw_ != o.dimw_)
    throw DimensionError("NCMatrix: product shape mismatch");
  NCMatrix r(size_, dimw_);
  for (int i = 1; i <= size_; ++i)
    for (int k = 1; k <= size_; ++k) {
      const Matrix<RatU>& aik = at(i, k);
      if (aik.is_zero()) continue;  // operator order preserved inside the block product
      for (int j = 1; j <= size_; ++j) {
        const Matrix<RatU>& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

bool NCMatrix::operator==(const NCMatrix& o) const {
  return size_ == o.size_ && dimw_ == o.dimw_ && e_ == o.e_;
}

NCMatrix nc_submatrix(const NCMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw DimensionError("nc_submatrix: row/column counts differ");
  NCMatrix r(static_cast<int>(rows.size()), m.dimw());
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = 0; b < cols.size(); ++b)
      r.at(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = m.at(rows[a], cols[b]);
  return r;
}

std::optional<std::array<int, 4>> nc_first_diff(const NCMatrix& a, const NCMatrix& b) {
  if (a.size() != b.size() || a.dimw() != b.dimw())
    throw DimensionError("nc_first_diff: shape mismatch");
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j) {
      const Matrix<RatU>&x = a.at(i, j), &y = b.at(i, j);
      for (int r = 0; r < a.dimw(); ++r)
        for (int c = 0; c < a.dimw(); ++c)
          if (x(r, c) != y(r, c)) return std::array<int, 4>{i, j, r + 1, c + 1};
    }
  return std::nullopt;
}

Matrix<RatU> quasideterminant(const NCMatrix& m, int i, int j) {
  const int n = m.size();
  const int w = m.dimw();
  if (i < 1 || i > n || j < 1 || j > n)
    throw IndexError("quasideterminant: box position (" + std::to_string(i) + ", " +
                     std::to_string(j) + ") outside " + std::to_string(n) + "x" +
                     std::to_string(n));
  if (n == 1) return m.at(1, 1);

  std::vector<int> rows, cols;  // the minor keeps these, in order
  for (int l = 1; l <= n; ++l)
    if (l != i) rows.push_back(l);
  for (int k = 1; k <= n; ++k)
    if (k != j) cols.push_back(k);

  // Flatten the minor and the column below/above the box into one commutative
  // linear system over the rational-function field and solve it once.
  const int fs = (n - 1) * w;
  Matrix<RatU> flat(fs, fs);
  Matrix<RatU> rhs(fs, w);
  for (int a = 0; a < n - 1; ++a) {
    for (int b = 0; b < n - 1; ++b) flat.set_block(a * w, b * w, m.at(rows[a], cols[b]));
    rhs.set_block(a * w, 0, m.at(rows[a], j));
  }
  Matrix<RatU> x(0, 0);
  try {
    x = flat.solve(rhs);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("quasideterminant: the minor omitting row " +
                                  std::to_string(i) + " and column " + std::to_string(j) +
                                  " is singular",
                              i);
  }

  Matrix<RatU> r = m.at(i, j);
  for (int b = 0; b < n - 1; ++b)
    r -= m.at(i, cols[b]) * x.block(b * w, (b + 1) * w, 0, w);
  return r;
}

UPoly upoly_lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly::zero();
  const UPoly g = UPoly::gcd(a, b);
  UPoly l = a.divrem(g).first * b;
  return l.mul_scalar(l.lc().inverse());  // monic
}

ClearedBlock clear_denominators(const Matrix<RatU>& m) {
  ClearedBlock out;
  out.den = UPoly::one();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.den = upoly_lcm(out.den, m(i, j).den());
  out.num = Matrix<UPoly>(m.rows(), m.cols());
  out.deg = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const RatU& f = m(i, j);
      if (f.is_zero()) continue;
      out.num(i, j) = f.num() * out.den.divrem(f.den()).first;
      out.deg = std::max(out.deg, out.num(i, j).degree());
    }
  return out;
}

namespace {

Matrix<Scalar> eval_poly_matrix(const Matrix<UPoly>& p, const Scalar& x) {
  return p.map([&](const UPoly& f) { return f.eval(x); });
}

}  // namespace

CheckResult exchange_identity(const Matrix<RatU>& a, const Matrix<RatU>& b,
                              const LinUV& p_lhs, const LinUV& p_rhs,
                              const std::string& what) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("exchange_identity: operands must be square and equally sized");
  const ClearedBlock ca = clear_denominators(a);
  const ClearedBlock cb = clear_denominators(b);
  // The u-denominator of A and the v-denominator of B are common to both
  // sides, so the cleared identity is polynomial: degree <= deg(A_num) + 1 in
  // u and <= deg(B_num) + 1 in v (the +1 from the linear prefactors).
  const std::vector<VarSpec> vars = {{"u", ca.deg + 1}, {"v", cb.deg + 1}};
  CheckResult res = verify_identity(vars, [&](const Assignment& asg) {
    const Scalar u0(asg["u"]);
    const Scalar v0(asg["v"]);
    const Matrix<Scalar> a0 = eval_poly_matrix(ca.num, u0);
    const Matrix<Scalar> b0 = eval_poly_matrix(cb.num, v0);
    const Matrix<Scalar> lhs = (a0 * b0).scaled_left(p_lhs.eval(u0, v0));
    const Matrix<Scalar> rhs = (b0 * a0).scaled_left(p_rhs.eval(u0, v0));
    if (lhs == rhs) return PointCheck::ok();
    for (int r = 0; r < lhs.rows(); ++r)
      for (int c = 0; c < lhs.cols(); ++c)
        if (!(lhs(r, c) == rhs(r, c)))
          return PointCheck::bad(lhs(r, c).str(), rhs(r, c).str(),
                                 what + ": entry (" + std::to_string(r + 1) + ", " +
                                     std::to_string(c + 1) + ")");
    return PointCheck::ok();
  });
  if (res.status == CheckResult::Status::PASS)
    res.certificate = "exchange identity for " + what + "; " + res.certificate;
  return res;
}

CheckResult merge_results(const std::vector<CheckResult>& parts, const std::string& label) {
  CheckResult out;
  if (parts.empty()) {
    out.status = CheckResult::Status::ERROR;
    out.error = "merge_results: no results for " + label;
    return out;
  }
  long long points = 0;
  for (const auto& p : parts) points += p.points;
  for (const auto& p : parts) {
    if (p.status == CheckResult::Status::ERROR) {
      out = p;
      out.points = points;
      return out;
    }
  }
  for (const auto& p : parts) {
    if (p.status == CheckResult::Status::FAIL) {
      out = p;
      out.points = points;
      return out;
    }
  }
  out.status = CheckResult::Status::PASS;
  out.points = points;
  out.certificate = "all " + std::to_string(parts.size()) + " " + label +
                    " identities hold exactly (" + std::to_string(points) +
                    " grid evaluations)";
  return out;
}

}  // namespace qca
