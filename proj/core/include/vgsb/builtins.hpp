#ifndef VGSB_BUILTINS_HPP_
#define VGSB_BUILTINS_HPP_

#include <vector>

#include "vgsb/presentation.hpp"
#include "vgsb/system.hpp"

namespace vgsb {

  // Generators x, y (x ranked below y), weights 1/2, N(x,x) = N(y,y) = 0,
  // N(x,y) = 1, relation x(0)y(-1)1 = 1.
  VertexPresentation weyl_presentation();

  // The locality, T, vacuum rules and x(0)y(-1)1 -> 1 only.
  RuleSystem weyl_coefficient_system();

  // The above plus the tail rules
  //   y(m)x(m)u1 -> x(m)y(m)u1,
  //   x(m+1)y(m)u1 -> y(m)x(m+1)u1 (m != -1),
  //   x(0)y(-1)u1 -> y(-1)x(0)u1 + u1.
  RuleSystem weyl_system();

  // Nondecreasing negative modes; y(n) directly followed by x(n') needs n < n'.
  bool weyl_terminal(Word const& w);

  // k generators of weight 1 with the given locality matrix, no relations.
  VertexPresentation free_presentation(int k, std::vector<std::vector<int>> const& N);

  // One generator e of weight 1, N = 0, relation T e(-1)1 = 0.
  VertexPresentation abelian_presentation();

  // Its rules plus e(n) e(-1)^l 1 -> 0 for n <= -2.
  RuleSystem abelian_system();

}  // namespace vgsb

#endif  // VGSB_BUILTINS_HPP_
