#ifndef VGSB_ENVELOPE_HPP_
#define VGSB_ENVELOPE_HPP_

#include "vgsb/conformal.hpp"
#include "vgsb/presentation.hpp"
#include "vgsb/system.hpp"

namespace vgsb {

  // Vert(X, N | R) for the universal envelope of E: N from the locality of
  // E, and for non-central x, y and 0 <= n < N(x,y) the relations
  //   x(n)y(-1)1 = sum (x o_n y)(-1)1,
  // where (T^k z)(-1)1 is written T^k z(-1)1.
  VertexPresentation envelope_presentation(ConformalAlgebra const& e);

  // For non-central x(n) > y(m):
  //   x(n)y(m)u1 -> y(m)x(n)u1
  //     + sum_{s < N(x,y)} sum_{z,k} binom(n,s) (-1)^k k! binom(n+m-s,k) c z(n+m-s-k)u1
  // where c is the coefficient of T^k z in (x o_s y).
  std::vector<SchematicRule> envelope_swap_rules(ConformalAlgebra const& e);

  // coefficient_rules(envelope_presentation(e)) plus the swap rules.
  // Throws AxiomViolation unless e passes check_conformal_axioms.
  RuleSystem envelope_pbw_system(ConformalAlgebra const& e);

}  // namespace vgsb

#endif  // VGSB_ENVELOPE_HPP_
