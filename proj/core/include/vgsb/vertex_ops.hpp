#ifndef VGSB_VERTEX_OPS_HPP_
#define VGSB_VERTEX_OPS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vgsb/lambda.hpp"
#include "vgsb/lincomb.hpp"
#include "vgsb/reducer.hpp"
#include "vgsb/system.hpp"

namespace vgsb {

  // Products of states in the module presented by a rule system. States are
  // combinations of module words; every result is in normal form.
  class VertexOps {
   public:
    explicit VertexOps(RuleSystem const& sys);
    VertexOps(RuleSystem const& sys, std::int64_t fuel);

    LinComb reduce(LinComb const& c) {
      return red_.reduce(c);
    }
    LinComb T(LinComb const& a);
    TAction<LinComb> t_action();

    // x(n)a. For n <= -2 through -1/(n+1) (T x(n+1)a - x(n+1)Ta).
    LinComb mode_action(int x, std::int64_t n, LinComb const& a);

    // a_(n) b. Infinite internal sums stop after `zero_run` consecutive zero
    // terms; TruncationUnsound after `cap` terms. On graded systems zeros
    // only count once the terms would have negative weight. Fuel applies
    // to each call separately.
    LinComb state_product(LinComb const& a, LinComb const& b, std::int64_t n);
    LinComb dot(LinComb const& a, LinComb const& b) {
      return state_product(a, b, -1);
    }

    // sum_n lambda^n / n! a_(n) b, truncated like the internal sums.
    LambdaPoly<LinComb> lambda_bracket(LinComb const& a, LinComb const& b);

    std::string str(LinComb const& c) const {
      return c.str(sys_.alphabet());
    }

    int zero_run = 4;
    int cap = 64;

   private:
    // First index past which a weight-w product would have negative weight.
    std::int64_t weight_start(std::optional<Rational> const& w) const;
    std::optional<Rational> max_weight(LinComb const& c) const;

    LinComb word_product(Word const& a, Word const& b, std::int64_t n);

    RuleSystem const& sys_;
    Reducer red_;
    bool graded_;
    std::map<std::tuple<Word, Word, std::int64_t>, LinComb> memo_;
  };

  LinComb generator_state(RuleSystem const& sys, int g);

  // Commutator defect: a.b - b.a - int_{-T}^0 (a o_lambda b) d lambda.
  LinComb commutator_defect(VertexOps& ops, LinComb const& a, LinComb const& b);

  // Derivation defect, as a polynomial in lambda:
  //   (a o (b.c)) - (a o b).c - b.(a o c) - int_0^lambda ((a o b) o_mu c) d mu.
  LambdaPoly<LinComb> derivation_defect(VertexOps& ops, LinComb const& a,
                                        LinComb const& b, LinComb const& c);

  struct IdentityReport {
    bool ok = true;
    int pairs = 0;
    int triples = 0;
    std::vector<std::string> failures;
  };

  struct IdentityOptions {
    int samples = 50;
    std::uint64_t seed = 1;
    Rational max_weight = Rational(3);
    int window = 8;   // mode window for the random terminal words
    int max_len = 4;
  };

  // Both identities on all generator pairs and triples, then on `samples`
  // random pairs and triples of terminal words of weight <= max_weight.
  // Throws NotGraded for ungraded systems.
  IdentityReport check_vertex_identities(RuleSystem const& sys,
                                         IdentityOptions const& opt);

}  // namespace vgsb

#endif  // VGSB_VERTEX_OPS_HPP_
