#include "doctest.h"
#include "vgsb/builtins.hpp"
#include "vgsb/conformal.hpp"
#include "vgsb/envelope.hpp"
#include "vgsb/reducer.hpp"
#include "vgsb/vertex_ops.hpp"

using namespace vgsb;

TEST_CASE("Weyl commutators on the vacuum") {
  RuleSystem sys = weyl_system();
  VertexOps ops(sys);
  LinComb vac = LinComb::vacuum();
  for (int n = -4; n <= 4; ++n) {
    for (int m = -4; m <= 4; ++m) {
      LinComb xy = ops.mode_action(0, n, ops.mode_action(1, m, vac));
      LinComb yx = ops.mode_action(1, m, ops.mode_action(0, n, vac));
      // [x(n), y(m)] = sum_j C(n,j) (x(j)y)(n+m-j) with x(0)y = 1, 1(k) = delta_{k,-1}
      LinComb expect = n + m == -1 ? vac : LinComb();
      CHECK_MESSAGE(xy - yx == expect, "n=" << n << " m=" << m);
    }
  }
}

TEST_CASE("mode action agrees with prepending and reducing") {
  RuleSystem sys = weyl_system();
  VertexOps ops(sys);
  Reducer red(sys);
  std::vector<Word> targets = {
      Word::vacuum(),
      Word({Letter::mode_of(0, -1)}, true),
      Word({Letter::mode_of(1, -1), Letter::mode_of(0, -2)}, true),
      Word({Letter::mode_of(0, -2), Letter::mode_of(1, -1)}, true)};
  for (Word const& w : targets) {
    LinComb a = red.reduce(LinComb(w));
    for (int g = 0; g < 2; ++g) {
      for (int n = -3; n <= 3; ++n) {
        CHECK(ops.mode_action(g, n, a) == red.reduce(a.prepend(Word({Letter::mode_of(g, n)}, false))));
      }
    }
  }
}

TEST_CASE("Heisenberg pairing") {
  ConformalAlgebra h = heisenberg({Rational(0), Rational(1)});
  RuleSystem sys = envelope_pbw_system(h);
  VertexOps ops(sys);
  int v = h.index("v");
  int e = h.index("e");
  LinComb s = ops.mode_action(v, 1, ops.mode_action(v, -1, LinComb::vacuum()));
  CHECK(s == LinComb(Word({Letter::mode_of(e, -1)}, true)));
  CHECK(ops.mode_action(v, 2, ops.mode_action(v, -1, LinComb::vacuum())).is_zero());
}

TEST_CASE("T acts as the translation") {
  RuleSystem sys = weyl_system();
  VertexOps ops(sys);
  LinComb x = generator_state(sys, 0);
  CHECK(ops.T(x) == LinComb(Word({Letter::mode_of(0, -2)}, true)));
  CHECK(ops.T(LinComb::vacuum()).is_zero());
}

TEST_CASE("the commutator defect vanishes on generators") {
  RuleSystem sys = weyl_system();
  VertexOps ops(sys);
  LinComb x = generator_state(sys, 0);
  LinComb y = generator_state(sys, 1);
  CHECK(commutator_defect(ops, x, y).is_zero());
  CHECK(commutator_defect(ops, y, x).is_zero());
}
