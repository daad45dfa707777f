#ifndef VGSB_PRESENTATION_HPP_
#define VGSB_PRESENTATION_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vgsb/lincomb.hpp"
#include "vgsb/system.hpp"

namespace vgsb {

  // Vert(X, N | R): generators with optional weights, a symmetric locality
  // function and module relations (each LinComb is set equal to zero).
  struct VertexPresentation {
    std::vector<Generator> generators;
    std::map<std::pair<int, int>, int> locality;
    std::vector<LinComb> relations;

    Alphabet alphabet() const {
      return Alphabet(generators);
    }
    int N(int a, int b) const;
    // Throws SemanticError on missing or asymmetric entries, NotGraded-free.
    void validate() const;
  };

  // Tz(n) -> z(n)T - n z(n-1).
  SchematicRule t_rule(int gen);

  // Orientation of sum_{s=0}^{N} (-1)^s binom(N,s) [p(n-s), q(m+s)] = 0 at the
  // instances whose leading word is p(n)q(m):
  //   p(n)q(m) -> q(m)p(n) - sum_{s=1}^{N} (-1)^s binom(N,s) [p(n-s), q(m+s)].
  SchematicRule locality_rule(Alphabet const& a, int p, int q, int N);

  // z(n) c 1 -> 0 for n >= 0, where c ranges over words in the central
  // letters allowed by torsion (empty when there are no central generators).
  SchematicRule vacuum_rule(Alphabet const& a, int gen);
  // e(n) c 1 -> 0 for n < -torsion(e).
  SchematicRule torsion_rule(Alphabet const& a, int gen);
  SchematicRule vacuum_T_rule();

  // Central letters e(-1), ..., e(-d) for every central generator e.
  std::vector<Letter> central_tail_letters(Alphabet const& a);

  // Relation r = 0 as the concrete rule lead -> lead - r / c.
  // Throws UnorientableRelation when r is zero or its leading word is 1.
  SchematicRule orient_relation(LinComb const& r, Alphabet const& a,
                                std::string label);

  // T-rules, locality rules for every ordered pair, vacuum rules, torsion
  // rules and the oriented relations. All of them are also recorded as the
  // defining relations.
  RuleSystem coefficient_rules(VertexPresentation const& p);

  // Adds lhs -> rhs (both module combinations, lhs a single word) to the
  // rules and to the defining relations. Throws OrderViolation unless
  // lhs > every word of rhs.
  void quotient_identify(RuleSystem& sys, Word const& lhs, LinComb const& rhs);

}  // namespace vgsb

#endif  // VGSB_PRESENTATION_HPP_
