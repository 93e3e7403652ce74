#pragma once

// The vector representation of the rank-n symplectic quantum affine algebra
// on C^{2n} at level zero: explicit image tables for the loop-mode
// generators.  With i' = 2n + 1 - i and matrix units e_ab, the images are,
// for i < n,
//   x^+_{i,k} -> -q^{-ik} e_{i+1,i} + q^{-(2n+2-i)k} e_{i',(i+1)'}
//   x^-_{i,k} -> -q^{-ik} e_{i,i+1} + q^{-(2n+2-i)k} e_{(i+1)',i'}
//   a_{i,k}   -> ([k]_{q_i}/k) ( q^{-ik} (q^{-k} e_{i+1,i+1} - q^k e_{ii})
//                + q^{-(2n+2-i)k} (q^{-k} e_{i'i'} - q^k e_{(i+1)'(i+1)'}) )
//   k_i       -> q (e_{i+1,i+1} + e_{i'i'}) + q^{-1} (e_{ii} + e_{(i+1)'(i+1)'})
//                + sum over other j of e_jj
// and for the long root i = n (note n' = n + 1),
//   x^+_{n,k} -> -q^{-(n+1)k} e_{n+1,n}
//   x^-_{n,k} -> -q^{-(n+1)k} e_{n,n+1}
//   a_{n,k}   -> ([k]_{q_n}/k) q^{-(n+1)k} (q^{-2k} e_{n+1,n+1} - q^{2k} e_{nn})
//   k_n       -> q^2 e_{n+1,n+1} + q^{-2} e_{nn} + sum over other j of e_jj
// with q_i = q^{r_i}.  The central charge acts trivially.

#include "qca/cartan.hpp"
#include "qca/matrix.hpp"
#include "qca/scalar.hpp"
#include "qca/shape.hpp"

namespace qca {

class PiV {
 public:
  PiV(int n, const QMode& qm);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }

  /// Image of x^+_{i,k}, 1 <= i <= n, any integer k.
  Matrix<Scalar> xplus(int i, int k) const;
  /// Image of x^-_{i,k}.
  Matrix<Scalar> xminus(int i, int k) const;
  /// Image of a_{i,k}; k must be nonzero.
  Matrix<Scalar> a_mode(int i, int k) const;
  /// Image of k_i (invertible diagonal).
  Matrix<Scalar> k_image(int i) const;

  const CartanData& cartan() const { return cartan_; }

 private:
  void require_index(int i) const;

  int n_;
  QMode qm_;
  IndexData index_;
  CartanData cartan_;
};

/// Convenience constructor following the operation table.
PiV pi_v(int n, const QMode& qm);

}  // namespace qca
