#pragma once

// Cartan data for the symplectic root system: simple roots
//   alpha_i = eps_i - eps_{i+1} (i < n),  alpha_n = 2 eps_n,
// the Cartan matrix A_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), the
// symmetrizers r_i = (alpha_i, alpha_i)/2 (so r_i = 1 for i < n, r_n = 2),
// and the symmetrized matrix B = CA with C = diag[r_1, ..., r_n], whose
// entries are the inner products (alpha_i, alpha_j).
//
// The inverse carries a closed form: writing Bt = B^{-1},
//   Bt_nn = n/4,   Bt_nj = j/2 (j < n),   Bt_ij = j (n > i >= j),
// completed by symmetry.  The q-deformation B(q^k)_ij = [B_ij]_{q^k} has the
// closed-form inverse
//   Bt(q^k)_nn = [n] / ([2]_{q^k} [2]_{q^{k(n+1)}}),
//   Bt(q^k)_nj = [j]_{q^k} / [2]_{q^{k(n+1)}}           (j < n),
//   Bt(q^k)_ij = [2]_{q^{k(n+1-i)}} [j]_{q^k} / [2]_{q^{k(n+1)}}  (n > i >= j),
// again completed by symmetry.  Both closed forms are validated against the
// defining products inside cartan_data and by the cartan check suite.

#include <vector>

#include "qca/check.hpp"
#include "qca/matrix.hpp"
#include "qca/rational.hpp"
#include "qca/scalar.hpp"

namespace qca {

struct CartanData {
  int n = 0;
  QMode qm = QMode::symbolic();
  std::vector<int> r;        // symmetrizers r_1, ..., r_n
  Matrix<Rational> A;        // Cartan matrix
  Matrix<Rational> B;        // symmetrized matrix CA
  Matrix<Rational> Btilde;   // inverse of B, from the closed form

  /// [B_ij]_{q^k} entrywise; k must be nonzero (even in k).
  Matrix<Scalar> B_qk(int k) const;
  /// Closed-form inverse of B_qk; k must be nonzero.
  Matrix<Scalar> Btilde_qk(int k) const;
};

/// Build the Cartan data and validate the inverse identities for
/// 1 <= k <= kmax on the spot (throws on violation).
CartanData cartan_data(int n, int kmax, const QMode& qm);

/// Reportable suite: Btilde * B = 1 and Btilde(q^k) * B(q^k) = 1 exactly for
/// k = 1..kmax, plus an independent Gauss-Jordan cross-check of Btilde.
CheckReport check_cartan(int n, int kmax, const CheckOptions& opt = {});

}  // namespace qca
