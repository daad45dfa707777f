#include "vgsb/envelope.hpp"

#include "vgsb/errors.hpp"

namespace vgsb {

  VertexPresentation envelope_presentation(ConformalAlgebra const& e) {
    VertexPresentation p;
    p.generators = e.generators();
    int n = static_cast<int>(e.size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        p.locality[{x, y}] = std::max(e.locality(x, y), e.locality(y, x));
      }
    }
    for (int x = 0; x < n; ++x) {
      if (p.generators[x].central) {
        continue;
      }
      for (int y = 0; y < n; ++y) {
        if (p.generators[y].central) {
          continue;
        }
        for (int k = 0; k < p.locality[{x, y}]; ++k) {
          LinComb rel(Word({Letter::mode_of(x, k), Letter::mode_of(y, -1)}, true));
          TElement prod = e.nth_product(x, y, k);
          for (auto const& [key, c] : prod.terms()) {
            std::vector<Letter> w(key.second, Letter::T());
            w.push_back(Letter::mode_of(key.first, -1));
            rel.add(Word(std::move(w), true), -c);
          }
          p.relations.push_back(std::move(rel));
        }
      }
    }
    return p;
  }

  std::vector<SchematicRule> envelope_swap_rules(ConformalAlgebra const& e) {
    std::vector<SchematicRule> out;
    int count = static_cast<int>(e.size());
    auto const& gens = e.generators();
    Affine n = Affine::var(0);
    Affine m = Affine::var(1);
    for (int x = 0; x < count; ++x) {
      for (int y = 0; y < count; ++y) {
        if (gens[x].central || gens[y].central) {
          continue;
        }
        SchematicRule r;
        r.label = "swap(" + gens[x].name + "," + gens[y].name + ")";
        r.vars = {"n", "m"};
        r.lhs = {LetterPattern::of(x, n), LetterPattern::of(y, m)};
        bool strict = x == y || gens[x].rank < gens[y].rank;
        r.guards = {Guard{n, strict ? CmpOp::Gt : CmpOp::Ge, m}};
        r.kind = RuleKind::Module;
        r.tail = TailKind::Any;
        r.rhs.push_back(RhsTerm{{}, {LetterPattern::of(y, m), LetterPattern::of(x, n)}, {}});
        int N = std::max(e.locality(x, y), e.locality(y, x));
        for (int s = 0; s < N; ++s) {
          TElement prod = e.nth_product(x, y, s);
          for (auto const& [key, c] : prod.terms()) {
            int k = key.second;
            RhsTerm t;
            t.coeff.constant = c * factorial(k) * Rational(k % 2 == 0 ? 1 : -1);
            t.coeff.factors.push_back({CoeffFactor::Kind::Binom, n, Affine::constant_of(s), 0});
            t.coeff.factors.push_back(
                {CoeffFactor::Kind::Binom, n + m - s, Affine::constant_of(k), 0});
            t.word = {LetterPattern::of(key.first, n + m - (s + k))};
            r.rhs.push_back(std::move(t));
          }
        }
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  RuleSystem envelope_pbw_system(ConformalAlgebra const& e) {
    AxiomReport rep = check_conformal_axioms(e);
    if (!rep.ok) {
      throw AxiomViolation(rep.violations.front());
    }
    RuleSystem sys = coefficient_rules(envelope_presentation(e));
    sys.name = e.name.empty() ? "envelope" : "envelope " + e.name;
    for (auto& r : envelope_swap_rules(e)) {
      sys.add_rule(std::move(r));
    }
    return sys;
  }

}  // namespace vgsb
