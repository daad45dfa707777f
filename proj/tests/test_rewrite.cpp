#include "doctest.h"
#include "vgsb/basis.hpp"
#include "vgsb/builtins.hpp"
#include "vgsb/completion.hpp"
#include "vgsb/forks.hpp"
#include "vgsb/reducer.hpp"

using namespace vgsb;

namespace {
  LinComb word(std::vector<std::pair<int, std::int64_t>> const& l) {
    std::vector<Letter> out;
    for (auto [g, n] : l) {
      out.push_back(g < 0 ? Letter::T() : Letter::mode_of(g, n));
    }
    return LinComb(Word(out, true));
  }
}  // namespace

TEST_CASE("Weyl relation and its T-derivative") {
  RuleSystem sys = weyl_system();
  Reducer red(sys);
  CHECK(red.reduce(word({{0, 0}, {1, -1}})) == LinComb::vacuum());
  CHECK(red.reduce(word({{-1, 0}})).is_zero());
  // x(1) y(-2) 1 = [x(1), y(-2)] 1 = 1 since 1 - 2 = -1
  CHECK(red.reduce(word({{0, 1}, {1, -2}})) == LinComb::vacuum());
  CHECK(red.reduce(word({{0, 2}, {1, -2}})).is_zero());
}

TEST_CASE("normal forms are terminal") {
  RuleSystem sys = weyl_system();
  Reducer red(sys);
  LinComb nf = red.reduce(word({{1, -1}, {0, -2}, {1, -3}, {0, -1}}));
  for (auto const& [w, c] : nf.terms()) {
    CHECK(red.is_terminal(w));
    CHECK(weyl_terminal(w));
  }
}

TEST_CASE("fuel exhaustion is reported") {
  RuleSystem sys = weyl_system();
  Reducer red(sys, 2);
  CHECK_THROWS_AS(red.reduce(word({{1, 3}, {0, -2}, {1, -3}, {0, -4}})), FuelExhausted);
}

TEST_CASE("reduction does not depend on rule order") {
  RuleSystem sys = weyl_system();
  LinComb h = word({{1, 1}, {0, 1}, {1, -2}, {0, -3}});
  Reducer a(sys);
  Reducer b(sys);
  b.shuffle(7);
  CHECK(a.reduce(h) == b.reduce(h));
}

TEST_CASE("small fork sets converge and are classified") {
  RuleSystem sys = weyl_system();
  ForkOptions fo;
  fo.window = 3;
  fo.max_tail = 1;
  auto forks = enumerate_forks(sys, fo);
  CHECK(!forks.empty());
  ForkReport rep = check_forks(sys, forks, sys.fuel, 1);
  CHECK(rep.converged == rep.total);
  std::size_t sum = 0;
  for (auto n : rep.by_kind) {
    sum += n;
  }
  CHECK(sum == rep.total);
}

TEST_CASE("the coefficient rules alone are not confluent") {
  RuleSystem sys = weyl_coefficient_system();
  ForkOptions fo;
  fo.window = 3;
  fo.max_tail = 1;
  ForkReport rep = check_forks(sys, enumerate_forks(sys, fo), sys.fuel, 1);
  CHECK(!rep.divergent.empty());
}

TEST_CASE("terminal words of the abelian example") {
  RuleSystem sys = abelian_system();
  for (int w = 0; w <= 4; ++w) {
    CHECK(enumerate_terminal_words(sys, Rational(w), 6, 8).words.size() == 1);
  }
}

TEST_CASE("the oracle rejects a window that cannot hold the weight") {
  RuleSystem sys = weyl_system();
  OracleOptions oo;
  oo.window = 1;
  CHECK_THROWS_AS(dimension_oracle(sys, Rational(3), oo), WindowTooSmall);
}
