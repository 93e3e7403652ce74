/**
 * @file rmatrix.hpp
 * @brief Exchange matrices for the vector representation of the q-deformed
 *        symplectic loop algebra on C^{2n}, and their intrinsic identity
 *        checks: Yang-Baxter, unitarity, crossing symmetry, and the
 *        consistency of the scalar series f(u).
 *
 * Constant operators on C^{2n} (x) C^{2n} (indices 1..2n, i' = 2n-i+1,
 * eps_i = +-1, bars as in IndexData):
 *
 *   P = sum_{ij} e_ij (x) e_ji                      (the flip)
 *   Q = sum_{ij} q^{bi-bj} eps_i eps_j e_{i'j'} (x) e_ij   (rank one)
 *   R = q sum_i e_ii (x) e_ii + sum_{i != j, j'} e_ii (x) e_jj
 *       + q^{-1} sum_i e_ii (x) e_{i'i'}
 *       + (q-q^{-1}) sum_{i<j} e_ij (x) e_ji
 *       - (q-q^{-1}) sum_{i>j} q^{bi-bj} eps_i eps_j e_{i'j'} (x) e_ij
 *   D = diag[q^n, ..., q, q^{-1}, ..., q^{-n}],   xi = q^{-2n-2}.
 *
 * Parametric variants in the spectral parameter u:
 *
 *   bar(u)  = (u-1)/(uq-q^{-1}) R + (q-q^{-1})/(uq-q^{-1}) P
 *             - (q-q^{-1})(u-1)xi / ((uq-q^{-1})(u-xi)) Q      (unitary)
 *   hat(u)  = ((uq-q^{-1})/(u-1)) bar(u)
 *   full(u) = g(u) bar(u) with g(u) = f(u)(u-q^{-2})(u-xi); the series f is
 *             determined by f(u)f(u xi) = 1/((1-uq^{-2})(1-uq^2)(1-u xi)(1-u xi^{-1}))
 *             and carried as a truncated scalar factor next to the exact bar
 *             entries.
 *   typeA   = the gl-type exchange matrix on C^d (x) C^d.
 *
 * Fast verification path: for an argument u = (a/b) q^s the matrix
 * b^2 (uq-q^{-1})(u-xi) bar(u) has entries that are integer Laurent
 * polynomials in q.  The cleared_* builders construct that numerator and its
 * scalar denominator directly; because both sides of the Yang-Baxter and
 * unitarity identities carry the same multiset of denominators, the grid
 * checks compare cleared numerators only and never divide.  The cleared
 * builders are written independently from the dense ones on purpose; the unit
 * tests compare the two routes entry by entry.
 */
#pragma once

#include <string>
#include <vector>

#include "qca/check.hpp"
#include "qca/laurent.hpp"
#include "qca/lpoly.hpp"
#include "qca/scalar.hpp"
#include "qca/shape.hpp"
#include "qca/sparse.hpp"
#include "qca/tensor.hpp"
#include "qca/upoly.hpp"

namespace qca {

// ---------------------------------------------------------------------------
// Variants

enum class RVariant { Full, Bar, Hat, TypeA };

/// Parse "full" | "bar" | "hat" | "typeA"; throws ConfigError otherwise.
RVariant parse_rvariant(const std::string& name);
std::string rvariant_name(RVariant v);

// ---------------------------------------------------------------------------
// Constant operators

struct RMatrixSet {
  int n;
  QMode qm;
  IndexData index;
  TensorOp<Scalar> P, Q, R_const;  // on C^{2n} (x) C^{2n}
  Matrix<Scalar> D;                // on one leg
  Scalar xi;                       // q^{-2n-2}
};

/// Build P, Q, R, D, xi for rank n >= 1 (throws ConfigError otherwise).
RMatrixSet build_constants(int n, const QMode& qm);

// ---------------------------------------------------------------------------
// Scalar series

enum class FMethod { Recursion, Product };

/// The power series f(u) = 1 + f_1 u + ... + f_K u^K, window [0, K].
///
/// Recursion: matching coefficients in the defining relation
///   f(u) f(u xi) = 1/((1-uq^{-2})(1-uq^2)(1-u xi)(1-u xi^{-1}))
/// gives (1 + xi^k) f_k = S_k - sum_{0<j<k} f_j f_{k-j} xi^{k-j}, where S is
/// the expansion of the right-hand side.
///
/// Product: resumming each geometric family of the infinite product
///   f(u) = prod_{r>=0} (1-u xi^{2r})(1-u q^{-2} xi^{2r+1})(1-u q^2 xi^{2r+1})(1-u xi^{2r+2})
///                    / (1-u xi^{2r-1})(1-u xi^{2r+1})(1-u q^2 xi^{2r})(1-u q^{-2} xi^{2r})
/// in closed form yields
///   k [u^k] log f = -(1 + (q^{2k}+q^{-2k}) xi^k + xi^{2k} - xi^{-k} - xi^k
///                     - q^{2k} - q^{-2k}) / (1 - xi^{2k}),
/// followed by a series exponential.
LaurentSeries<Scalar> scalar_f(int n, int K, FMethod method, const QMode& qm);

/// g(u) = f(u) (u - q^{-2}) (u - xi), window [0, K]; f by recursion.
LaurentSeries<Scalar> scalar_g(int n, int K, const QMode& qm);

// ---------------------------------------------------------------------------
// Parametric matrices (dense, canonical)

struct ParamRMatrix {
  RVariant variant;
  int n;  // rank for full/bar/hat (space C^{2n}); dimension d for typeA
  QMode qm;
  /// Exact rational part; for variant=full these are the bar entries.
  TensorOp<RatU> entries;
  /// Truncated g(u) for variant=full; the constant series 1 otherwise.
  LaurentSeries<Scalar> scalar_factor;
};

/// Build the requested variant; K is the truncation window for variant=full.
ParamRMatrix build_param(int n, RVariant v, const QMode& qm, int K = 12);

/// The gl-type exchange matrix on C^d (x) C^d with q^qpow in place of q:
///   sum_i e_ii (x) e_ii + (u-1)/(q u - q^{-1}) sum_{i != j} e_ii (x) e_jj
///   + (q - q^{-1})/(q u - q^{-1}) sum_{i>j} e_ij (x) e_ji
///   + (q - q^{-1}) u/(q u - q^{-1}) sum_{i<j} e_ij (x) e_ji.
TensorOp<RatU> type_a_entries(int d, const QMode& qm, int qpow = 1);

/// Entrywise evaluation at a point u0 of the coefficient field.
TensorOp<Scalar> eval_entries(const TensorOp<RatU>& t, const Scalar& u0);

// ---------------------------------------------------------------------------
// Cleared fast path

/// Spectral argument u = (a/b) q^s with integer a, b.
struct ClearedArg {
  long long a = 1;
  long long b = 1;
  int s = 0;
};

/// Coefficient makers: term(c, e) = c * q^e in the chosen representation.
template <class C>
struct LaurentCoeffs {
  using Entry = LPoly<C>;
  Entry term(long long c, int e) const { return Entry::term(C(static_cast<long>(c)), e); }
};

struct PinnedCoeffs {
  Rational q;
  using Entry = Rational;
  Entry term(long long c, int e) const {
    return Rational(static_cast<long>(c)) * pow_rational(q, e);
  }
};

/// Numerator N(u) = b^2 (uq - q^{-1})(u - xi) bar(u) at u = (a/b) q^s:
///   N = (aq^s - b)(aq^s - b xi) R + (q - q^{-1}) b (aq^s - b xi) P
///       - (q - q^{-1})(aq^s - b) b xi Q.
template <class CP>
SparseMat<typename CP::Entry> cleared_rbar(int n, const ClearedArg& u, const CP& cp) {
  using E = typename CP::Entry;
  const IndexData id(n);
  const int N = 2 * n;
  const SiteShape sh = SiteShape::uniform(2, N);
  const int xiexp = -2 * n - 2;

  const E A = cp.term(u.a, u.s) - cp.term(u.b, 0);        // b (u - 1)
  const E Axi = cp.term(u.a, u.s) - cp.term(u.b, xiexp);  // b (u - xi)
  const E qmq = cp.term(1, 1) - cp.term(1, -1);           // q - q^{-1}
  const E aR = A * Axi;
  const E aP = qmq * Axi * cp.term(u.b, 0);
  const E aQ = qmq * A * cp.term(u.b, xiexp);  // enters with a minus sign

  SparseMat<E> out(static_cast<int>(sh.size()), static_cast<int>(sh.size()));
  const auto at = [&sh](int i, int j) { return sh.flatten({i, j}); };

  // R part, scaled by aR.
  for (int i = 1; i <= N; ++i) {
    out.add(at(i, i), at(i, i), aR * cp.term(1, 1));
    out.add(at(i, id.prime(i)), at(i, id.prime(i)), aR * cp.term(1, -1));
    for (int j = 1; j <= N; ++j) {
      if (j != i && j != id.prime(i)) out.add(at(i, j), at(i, j), aR);
      if (i < j) out.add(at(i, j), at(j, i), aR * qmq);
      if (i > j) {
        const long long sgn = id.eps(i) * id.eps(j);
        out.add(at(id.prime(i), i), at(id.prime(j), j),
                -(aR * qmq * cp.term(sgn, id.bar(i) - id.bar(j))));
      }
    }
  }
  // P part.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) out.add(at(i, j), at(j, i), aP);
  // Q part.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      const long long sgn = id.eps(i) * id.eps(j);
      out.add(at(id.prime(i), i), at(id.prime(j), j),
              -(aQ * cp.term(sgn, id.bar(i) - id.bar(j))));
    }
  return out;
}

/// The scalar cleared by cleared_rbar: b^2 (uq - q^{-1})(u - xi).
template <class CP>
typename CP::Entry cleared_rbar_den(int n, const ClearedArg& u, const CP& cp) {
  return (cp.term(u.a, u.s + 1) - cp.term(u.b, -1)) *
         (cp.term(u.a, u.s) - cp.term(u.b, -2 * n - 2));
}

/// Numerator of the gl-type matrix on C^d (x) C^d, cleared by
/// b (u q^r - q^{-r}) at u = (a/b) q^s with r = qpow:
///   N = (a q^{s+r} - b q^{-r}) sum_i e_ii (x) e_ii + (a q^s - b) sum_{i != j} e_ii (x) e_jj
///       + (q^r - q^{-r}) b sum_{i>j} e_ij (x) e_ji
///       + (q^r - q^{-r}) a q^s sum_{i<j} e_ij (x) e_ji.
template <class CP>
SparseMat<typename CP::Entry> cleared_rtypea(int d, const ClearedArg& u, const CP& cp,
                                             int qpow = 1) {
  using E = typename CP::Entry;
  const SiteShape sh = SiteShape::uniform(2, d);
  const int r = qpow;
  const E diag1 = cp.term(u.a, u.s + r) - cp.term(u.b, -r);
  const E offdiag = cp.term(u.a, u.s) - cp.term(u.b, 0);
  const E lower = (cp.term(1, r) - cp.term(1, -r)) * cp.term(u.b, 0);
  const E upper = (cp.term(1, r) - cp.term(1, -r)) * cp.term(u.a, u.s);

  SparseMat<E> out(static_cast<int>(sh.size()), static_cast<int>(sh.size()));
  const auto at = [&sh](int i, int j) { return sh.flatten({i, j}); };
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      if (i == j) out.add(at(i, i), at(i, i), diag1);
      if (i != j) out.add(at(i, j), at(i, j), offdiag);
      if (i > j) out.add(at(i, j), at(j, i), lower);
      if (i < j) out.add(at(i, j), at(j, i), upper);
    }
  return out;
}

/// The scalar cleared by cleared_rtypea: b (u q^r - q^{-r}).
template <class CP>
typename CP::Entry cleared_rtypea_den(const ClearedArg& u, const CP& cp, int qpow = 1) {
  return cp.term(u.a, u.s + qpow) - cp.term(u.b, -qpow);
}

// ---------------------------------------------------------------------------
// Identity checks

/// Yang-Baxter R12(u) R13(uv) R23(v) = R23(v) R13(uv) R12(u) for the variant.
CheckReport check_ybe(RVariant v, int n, const CheckOptions& opt = {});

/// bar12(u) bar21(1/u) = 1, plus the scalar form for the full variant.
CheckReport check_unitarity(int n, const CheckOptions& opt = {});

/// R(u) D1 R(u xi)^{t1} D1^{-1} = scalar * identity, for bar and full.
CheckReport check_crossing(RVariant v, int n, const CheckOptions& opt = {});

/// The two constructions of f agree through order K; explicit first-order
/// coefficient; the defining relation holds on the window.
CheckReport check_scalar_f(int n, int K, const CheckOptions& opt = {});

}  // namespace qca
