/**
 * @file loperator.hpp
 * @brief Fused L-operators on tensor products of vector modules, and the
 *        exchange-relation (RLL) check suite.
 *
 * The auxiliary space is site 0; module sites 1..m carry one copy of C^{2n}
 * each, with a nonzero evaluation parameter a_j attached to site j.  The
 * fused L-operator is the ordered product of unitary exchange matrices
 *
 *   L(u) = bar_{0,1}(u/a_1) bar_{0,2}(u/a_2) ... bar_{0,m}(u/a_m),
 *
 * a TensorOp over rational functions of u.  For m = 0 it is the identity on
 * the auxiliary site.  The defining exchange relation
 *
 *   bar(u/v) L_1(u) L_2(v) = L_2(v) L_1(u) bar(u/v)
 *
 * (subscripts marking two independent auxiliary spaces sharing the module
 * sites) is verified on an exact grid in u, v AND the parameters a_j, so a
 * PASS covers every choice of distinct nonzero parameters, in particular the
 * ones stored on the operator.  For m = 1 the relation is precisely the
 * Yang-Baxter equation in multiplicative form; for m = 0 it is trivial.
 *
 * The two sign tags name the expansion direction of the same rational
 * matrix: Plus expands entries as power series at u = 0, Minus at
 * u = infinity.  No extra normalization is applied -- the tags matter only
 * to series-level consumers, and the suite checks both expansions
 * reconstruct the shared entries.
 */
#pragma once

#include <string>
#include <vector>

#include "qca/check.hpp"
#include "qca/matrix.hpp"
#include "qca/rmatrix.hpp"
#include "qca/scalar.hpp"
#include "qca/shape.hpp"
#include "qca/tensor.hpp"
#include "qca/upoly.hpp"

namespace qca {

/// Expansion tag: Plus reads entries as series at u = 0, Minus at infinity.
enum class Sign { Plus, Minus };

/// Parse "plus" | "+" | "minus" | "-"; throws ConfigError otherwise.
Sign parse_sign(const std::string& name);
std::string sign_name(Sign s);

struct LOperator {
  int n = 0;  // rank; every site has dimension 2n
  int m = 0;  // number of fused module sites
  Sign sign = Sign::Plus;
  QMode qm = QMode::symbolic();
  std::vector<Scalar> params;  // a_1..a_m, nonzero and pairwise distinct
  SiteShape shape;             // m+1 sites: auxiliary first, then modules
  TensorOp<RatU> matrix;       // the ordered product above

  /// Total dimension (2n)^{m+1} of the carrier space.
  long long dim() const { return shape.size(); }
};

/// First m primes 2, 3, 5, ... as exact evaluation parameters.
std::vector<Scalar> default_eval_params(int m);

/// Build the fused operator; params must be nonzero and pairwise distinct
/// (ConfigError otherwise).  reverse=true multiplies the factors in the
/// opposite site order (an isomorphic module, used by the swapped check).
LOperator fused_L(int n, const std::vector<Scalar>& params, Sign sign, const QMode& qm,
                  bool reverse = false);

/// The operator-valued entry <i| L |j> on the auxiliary site: a dimW x dimW
/// matrix over rational functions of u, 1-based i, j in 1..2n.
Matrix<RatU> entry_block(const LOperator& L, int i, int j);

/// Suite: the exchange relation on a symbolic grid (parameters included as
/// grid variables), the same for the reversed fusion order, reconstruction
/// of the matrix from both expansion tags, and -- for m >= 2 -- an explicit
/// noncommutativity witness among the entry blocks.
CheckReport check_rll(const LOperator& L, const CheckOptions& opt = {});

}  // namespace qca
