#include "doctest.h"
#include "vgsb/errors.hpp"
#include "vgsb/lincomb.hpp"
#include "vgsb/rational.hpp"
#include "vgsb/word.hpp"

using namespace vgsb;

TEST_CASE("rationals parse and render canonically") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-2/1").str() == "-2");
  CHECK(Rational::parse(" +7 ").str() == "7");
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("linear combinations cancel exactly") {
  Word a({Letter::mode_of(0, -1)}, true);
  Word b({Letter::mode_of(1, -2)}, true);
  LinComb c(a, Rational(1, 3));
  c.add(b, Rational(2));
  c.add(a, Rational(-1, 3));
  CHECK(c.size() == 1);
  CHECK(c.coeff(b) == Rational(2));
  CHECK((c - c).is_zero());
  Alphabet al({{"x", 0}, {"y", 1}});
  CHECK((Rational(-1) * c).str(al) == "-2 y(-2) vac");
}

TEST_CASE("the term order is total on letters and words") {
  Generator x{"x", 0, Rational(1, 2)};
  Generator y{"y", 1, Rational(1, 2)};
  Alphabet al({x, y});
  OrderSpec const& o = al.order();
  Word w1({Letter::mode_of(0, -1), Letter::mode_of(1, -1)}, true);
  Word w2({Letter::mode_of(1, -1), Letter::mode_of(0, -1)}, true);
  auto c12 = o.compare_words(w1, w2);
  auto c21 = o.compare_words(w2, w1);
  CHECK(c12 != std::strong_ordering::equal);
  CHECK((c12 == std::strong_ordering::less) == (c21 == std::strong_ordering::greater));
  CHECK(al.weight(w1) == Rational(1));
  CHECK(al.word_str(w1) == "x(-1) y(-1) vac");
}

TEST_CASE("duplicate generators are rejected") {
  CHECK_THROWS_AS(Alphabet({{"x", 0}, {"x", 1}}), SemanticError);
}
