/**
 * @file ncmatrix.hpp
 * @brief Square matrices over the noncommutative ring of module operators,
 *        quasideterminants, and exchange-identity checks for operator pairs.
 *
 * The entries of a fused L-operator do not commute: each one is a dimW x dimW
 * matrix of rational functions of u acting on the module space W (the tensor
 * product of the fused sites).  An NCMatrix is a size x size matrix whose
 * entries are such operators, with all products taken in the operator algebra
 * -- i.e. ordinary block-matrix arithmetic on the flattened
 * (size*dimW) x (size*dimW) matrix over the rational function field.
 *
 * The (i,j) quasideterminant of a square NCMatrix M is
 *
 *   |M|_ij = m_ij - r (M^{ij})^{-1} c,
 *
 * where M^{ij} deletes row i and column j, r is row i without m_ij, and c is
 * column j without m_ij.  It is the noncommutative replacement for the ratio
 * det M / det M^{ij}, and reduces to exactly that for 1x1 operator blocks.
 * The inversion of M^{ij} is performed as ONE commutative Gauss-Jordan solve
 * of size (size-1)*dimW over the fraction field; a singular M^{ij} raises
 * SingularMatrixError naming the deleted row and column.
 *
 * The file also provides the cleared-denominator evaluation helpers used by
 * every suite that verifies exchange identities between operator families:
 *
 *   p(u,v) * A(u) B(v) = p~(u,v) * B(v) A(u)
 *
 * with degree <= 1 prefactors p, p~.  Both sides are multiplied by the lcm of
 * the entry denominators of A and of B, turning the identity into a matrix of
 * bivariate polynomial identities which an integer interpolation grid of
 * (deg_u + 1) x (deg_v + 1) points certifies exactly.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qca/matrix.hpp"
#include "qca/scalar.hpp"
#include "qca/upoly.hpp"
#include "qca/verifier.hpp"

namespace qca {

/// Square matrix with operator entries (dimW x dimW rational-function
/// matrices).  Indices i, j are 1-based, like all basis indices here.
class NCMatrix {
 public:
  NCMatrix() = default;
  /// size x size blocks, all zero, each dimw x dimw.
  NCMatrix(int size, int dimw);

  /// Identity: diagonal blocks are the dimw x dimw identity.
  static NCMatrix identity(int size, int dimw);

  int size() const { return size_; }
  int dimw() const { return dimw_; }

  Matrix<RatU>& at(int i, int j);
  const Matrix<RatU>& at(int i, int j) const;

  /// Block-matrix product (operand order preserved entrywise).
  NCMatrix operator*(const NCMatrix& o) const;
  bool operator==(const NCMatrix& o) const;
  bool operator!=(const NCMatrix& o) const { return !(*this == o); }

 private:
  void require_index(int i, int j) const;
  int size_ = 0;
  int dimw_ = 0;
  std::vector<Matrix<RatU>> e_;
};

/// The sub-NCMatrix with the given 1-based block rows and columns, in order.
NCMatrix nc_submatrix(const NCMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols);

/// First position where two equally-shaped NCMatrices differ:
/// (block row, block col, entry row, entry col), all 1-based; nullopt if
/// equal.  Used to build witnesses.
std::optional<std::array<int, 4>> nc_first_diff(const NCMatrix& a, const NCMatrix& b);

/// The (i,j) quasideterminant |M|_ij (see file comment).  M must be square;
/// a 1x1 matrix returns its entry.  Throws SingularMatrixError (naming the
/// deleted row and column, minor_index = i) when M^{ij} is not invertible
/// over the fraction field.
Matrix<RatU> quasideterminant(const NCMatrix& m, int i, int j);

/// Entry denominators cleared: entries(u) = num(u) / den, with den the monic
/// lcm of the denominators and deg the maximal numerator degree (grid bound).
struct ClearedBlock {
  Matrix<UPoly> num;
  UPoly den;
  int deg = 0;
};
ClearedBlock clear_denominators(const Matrix<RatU>& m);

/// Monic least common multiple over the coefficient field.
UPoly upoly_lcm(const UPoly& a, const UPoly& b);

/// The linear prefactor cu*u + cv*v + c0 of an exchange identity.
struct LinUV {
  Scalar cu, cv, c0;
  static LinUV one() { return LinUV{Scalar(0), Scalar(0), Scalar(1)}; }
  /// a*u + b*v
  static LinUV axby(Scalar a, Scalar b) {
    return LinUV{std::move(a), std::move(b), Scalar(0)};
  }
  Scalar eval(const Scalar& u0, const Scalar& v0) const { return cu * u0 + cv * v0 + c0; }
};

/// Verify p(u,v) A(u) B(v) = p~(u,v) B(v) A(u) exactly on an interpolation
/// grid, with denominators cleared as described in the file comment.  `what`
/// names the pair in witnesses (e.g. "h_1(u), h_2(v)").  A PASS certifies the
/// identity for all u, v; a FAIL carries the offending point and entry.
CheckResult exchange_identity(const Matrix<RatU>& a, const Matrix<RatU>& b,
                              const LinUV& p_lhs, const LinUV& p_rhs,
                              const std::string& what);

/// Merge per-pair exchange results into one: first FAIL/ERROR wins, points
/// accumulate, and the certificate summarizes `count` with the given label.
CheckResult merge_results(const std::vector<CheckResult>& parts, const std::string& label);

}  // namespace qca
