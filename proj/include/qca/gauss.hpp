/**
 * @file gauss.hpp
 * @brief Gauss (triangular) decomposition of fused L-operators.
 *
 * Every fused L-operator L(u), viewed as an N x N matrix (N = 2n) of operator
 * entries l_ij(u), admits a unique factorization
 *
 *   L(u) = F(u) H(u) E(u)
 *
 * with F lower unitriangular, H = diag[h_1(u), ..., h_N(u)] invertible, and E
 * upper unitriangular, provided every leading principal block is invertible
 * over the rational-function field.  The factors are computed by Schur
 * elimination: after step k the trailing submatrix holds the Schur complement
 * of the leading k x k block, h_k is its (k,k) entry, and the entries of F
 * and E are read off as f_ik h_k^{-1}-type ratios.
 *
 * The same factors have closed quasideterminant formulas:
 *
 *   h_i       = |leading i x i block|_(i,i)
 *   e_ij      = h_i^{-1} |rows 1..i, cols 1..i-1,j|_(i,j)   (i < j)
 *   f_ji      = |rows 1..i-1,j, cols 1..i|_(j,i) h_i^{-1}   (i < j)
 *
 * and check_gauss verifies the elimination output against them entry by
 * entry, along with exact reassembly and idempotence of the decomposition.
 * The diagonal factors h_i and the unitriangular entries e_ij = E_ij,
 * f_ji = F_ji are the raw material for the current-algebra generators
 * extracted in the series modules.
 */
#pragma once

#include <vector>

#include "qca/check.hpp"
#include "qca/loperator.hpp"
#include "qca/ncmatrix.hpp"

namespace qca {

/// The fused L-operator as an N x N matrix of operator entries; block (i,j)
/// is the dimW x dimW matrix of the coefficient of e_ij on the auxiliary
/// space.
NCMatrix nc_from_loperator(const LOperator& l);

/// The three factors of L = F H E, plus the provenance of L.  h holds the
/// diagonal entries h_1..h_N and hinv their cached inverses (each one
/// dimW x dimW over the rational-function field).
struct GaussData {
  int n = 0;       // rank: L is 2n x 2n in the auxiliary indices
  int fusion = 0;  // number of fused sites (0 when built from a bare NCMatrix)
  Sign sign = Sign::Plus;
  QMode qm = QMode::symbolic();
  int dimw = 1;

  NCMatrix L;  // the input
  NCMatrix F;  // lower unitriangular
  NCMatrix E;  // upper unitriangular
  std::vector<Matrix<RatU>> h;     // h[i-1] = h_i
  std::vector<Matrix<RatU>> hinv;  // hinv[i-1] = h_i^{-1}

  int size() const { return L.size(); }
  const Matrix<RatU>& h_at(int i) const;
  const Matrix<RatU>& hinv_at(int i) const;
  /// e_ij = E(i,j), defined for i < j.
  const Matrix<RatU>& e_at(int i, int j) const { return E.at(i, j); }
  /// f_ij = F(i,j), defined for i > j.
  const Matrix<RatU>& f_at(int i, int j) const { return F.at(i, j); }

  /// H as a diagonal NCMatrix.
  NCMatrix hmatrix() const;
  /// The product F H E (for reassembly checks).
  NCMatrix reassemble() const;
};

/// Decompose by Schur elimination.  Throws SingularMatrixError naming the
/// first leading principal block that is not invertible (minor_index = k for
/// the k x k block).
GaussData gauss_decompose(const NCMatrix& l);

/// Convenience wrapper: decompose a fused L-operator, carrying its metadata.
GaussData gauss_decompose(const LOperator& l);

/// Suite "gauss": exact reassembly F H E = L, idempotence (decomposing the
/// reassembled product reproduces the factors), agreement of every factor
/// entry with its closed quasideterminant formula, and invertibility of the
/// diagonal factors (including the error path on a singular input).
CheckReport check_gauss(const LOperator& l, const CheckOptions& opt = {});

}  // namespace qca
