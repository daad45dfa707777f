#include <random>

#include "doctest.h"
#include "vgsb/conformal.hpp"
#include "vgsb/errors.hpp"

using namespace vgsb;

TEST_CASE("Virasoro n-products") {
  ConformalAlgebra vir = virasoro();
  CHECK(vir.nth_product(0, 0, 0) == TElement::gen(0, Rational(1), 1));
  CHECK(vir.nth_product(0, 0, 1) == TElement::gen(0, Rational(2)));
  CHECK(vir.nth_product(0, 0, 2).is_zero());
  CHECK(vir.locality(0, 0) == 2);
  CHECK(check_conformal_axioms(vir).ok);
}

TEST_CASE("central charge enters the third product") {
  ConformalAlgebra vc = virasoro_c(Rational(1, 2));
  int v = vc.index("v");
  int e = vc.index("e");
  CHECK(vc.nth_product(v, v, 3) == TElement::gen(e, Rational(1, 4)));
  CHECK(vc.locality(v, v) == 4);
  CHECK(check_conformal_axioms(vc).ok);
}

TEST_CASE("Schrodinger-Virasoro brackets follow the Novikov table") {
  NovikovAlgebra nv = schrodinger_virasoro_novikov();
  ConformalAlgebra sv = schrodinger_virasoro();
  int n = static_cast<int>(nv.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      TElement t;
      TElement l;
      for (int k = 0; k < n; ++k) {
        t.add(k, 1, nv.product[j][i][k]);
        l.add(k, 0, nv.product[i][j][k] + nv.product[j][i][k]);
      }
      Bracket b = sv.bracket(i, j);
      CHECK(b.coeff(0) == t);
      CHECK(b.coeff(1) == l);
      CHECK(b.lambda_degree() <= 1);
    }
  }
  CHECK(check_conformal_axioms(sv).ok);
}

TEST_CASE("a perturbed table is rejected") {
  NovikovAlgebra p = NovikovAlgebra::zero({"v", "u"});
  p.set(0, 0, 0, Rational(1));
  p.set(0, 1, 1, Rational(1));
  CHECK(!check_novikov(p).empty());
  CHECK_THROWS_AS(quadratic_conformal(p), NovikovViolation);
}

TEST_CASE("random two-dimensional tables") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-1, 1);
  int accepted = 0;
  for (int trial = 0; trial < 20; ++trial) {
    NovikovAlgebra a = NovikovAlgebra::zero({"a", "b"});
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          int c = coef(rng) * (rng() % 3 == 0 ? 1 : 0);
          a.set(i, j, k, Rational(c));
        }
      }
    }
    if (check_novikov(a).empty()) {
      ++accepted;
      ConformalAlgebra q = quadratic_conformal(a);
      CHECK(check_conformal_axioms(q).ok);
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          CHECK(q.locality(x, y) == q.locality(y, x));
          for (int m = q.locality(x, y); m <= q.locality(x, y) + 3; ++m) {
            CHECK(q.nth_product(x, y, m).is_zero());
          }
        }
      }
    } else {
      CHECK_THROWS_AS(quadratic_conformal(a), NovikovViolation);
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("locality is symmetric on the built-ins") {
  for (ConformalAlgebra const& c :
       {virasoro(), virasoro_c(Rational(1)), heisenberg({Rational(0), Rational(1)}),
        schrodinger_virasoro(), weyl_pair(), comm_pair(), abelian(2)}) {
    for (int x = 0; x < static_cast<int>(c.size()); ++x) {
      for (int y = 0; y < static_cast<int>(c.size()); ++y) {
        CHECK(c.locality(x, y) == c.locality(y, x));
        for (int m = c.locality(x, y); m <= c.locality(x, y) + 3; ++m) {
          CHECK(c.nth_product(x, y, m).is_zero());
        }
      }
    }
  }
}

TEST_CASE("skew symmetry failure is reported") {
  ConformalAlgebra c({Generator{"a", 0, Rational(1)}, Generator{"b", 1, Rational(1)}});
  Bracket b;
  b.add(0, 0, TElement::gen(0));
  c.set_bracket(0, 1, b);
  c.set_bracket(1, 0, b);
  CHECK(!check_conformal_axioms(c).ok);
}
