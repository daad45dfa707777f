#include "vgsb/presentation.hpp"

#include "vgsb/errors.hpp"

namespace vgsb {

  int VertexPresentation::N(int a, int b) const {
    auto it = locality.find({a, b});
    if (it == locality.end()) {
      throw SemanticError("locality undefined for (" + generators.at(a).name
                          + "," + generators.at(b).name + ")");
    }
    return it->second;
  }

  void VertexPresentation::validate() const {
    int n = static_cast<int>(generators.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (N(a, b) != N(b, a)) {
          throw SemanticError("asymmetric locality for (" + generators[a].name
                              + "," + generators[b].name + ")");
        }
        if (N(a, b) < 0) {
          throw SemanticError("negative locality");
        }
      }
    }
    for (auto const& r : relations) {
      for (auto const& [w, c] : r.terms()) {
        if (!w.module) {
          throw SemanticError("relation is not a module expression");
        }
      }
    }
  }

  SchematicRule t_rule(int gen) {
    SchematicRule r;
    r.label = "T-rule";
    r.vars = {"n"};
    Affine n = Affine::var(0);
    r.lhs = {LetterPattern::T(), LetterPattern::of(gen, n)};
    RhsTerm keep;
    keep.word = {LetterPattern::of(gen, n), LetterPattern::T()};
    RhsTerm shift;
    shift.coeff.constant = Rational(-1);
    shift.coeff.factors.push_back({CoeffFactor::Kind::Binom, n, Affine::constant_of(1), 0});
    shift.word = {LetterPattern::of(gen, n - 1)};
    r.rhs = {keep, shift};
    return r;
  }

  namespace {

    SchematicRule swap_base(int p, int q) {
      SchematicRule r;
      r.vars = {"n", "m"};
      Affine n = Affine::var(0);
      Affine m = Affine::var(1);
      r.lhs = {LetterPattern::of(p, n), LetterPattern::of(q, m)};
      RhsTerm swapped;
      swapped.word = {LetterPattern::of(q, m), LetterPattern::of(p, n)};
      r.rhs = {swapped};
      return r;
    }

    Guard cmp(Affine a, CmpOp op, Affine b) {
      return Guard{std::move(a), op, std::move(b)};
    }

  }  // namespace

  SchematicRule locality_rule(Alphabet const& a, int p, int q, int N) {
    auto const& gp = a[p];
    auto const& gq = a[q];
    if (gp.central || gq.central) {
      throw SemanticError("locality_rule: use central_commutation_rules");
    }
    SchematicRule r = swap_base(p, q);
    r.label = "locality(" + gp.name + "," + gq.name + ")";
    Affine n = Affine::var(0);
    Affine m = Affine::var(1);
    r.guards.push_back(cmp(n, gp.rank > gq.rank ? CmpOp::Ge : CmpOp::Gt, m + N));
    if (N > 0) {
      r.vars.push_back("s");
      Affine s = Affine::var(2);
      SumRange range{2, Affine::constant_of(1), Affine::constant_of(N)};
      RhsTerm fwd;
      fwd.sums = {range};
      fwd.coeff.constant = Rational(-1);
      fwd.coeff.factors.push_back({CoeffFactor::Kind::Sign, s, {}, 0});
      fwd.coeff.factors.push_back({CoeffFactor::Kind::Binom, Affine::constant_of(N), s, 0});
      fwd.word = {LetterPattern::of(p, n - s), LetterPattern::of(q, m + s)};
      RhsTerm back = fwd;
      back.coeff.constant = Rational(1);
      back.word = {LetterPattern::of(q, m + s), LetterPattern::of(p, n - s)};
      r.rhs.push_back(fwd);
      r.rhs.push_back(back);
    }
    return r;
  }

  std::vector<Letter> central_tail_letters(Alphabet const& a) {
    std::vector<Letter> out;
    for (std::size_t g = 0; g < a.size(); ++g) {
      if (!a[g].central) {
        continue;
      }
      int d = a[g].torsion > 0 ? a[g].torsion : 0;
      for (int k = 1; k <= d; ++k) {
        out.push_back(Letter::mode_of(static_cast<int>(g), -k));
      }
    }
    return out;
  }

  namespace {

    void set_module_tail(SchematicRule& r, Alphabet const& a) {
      r.kind = RuleKind::Module;
      r.tail_letters = central_tail_letters(a);
      r.tail = r.tail_letters.empty() ? TailKind::None : TailKind::Restricted;
    }

  }  // namespace

  SchematicRule vacuum_rule(Alphabet const& a, int gen) {
    SchematicRule r;
    r.label = "vacuum(" + a[gen].name + ")";
    r.vars = {"n"};
    r.lhs = {LetterPattern::of(gen, Affine::var(0))};
    r.guards.push_back(cmp(Affine::var(0), CmpOp::Ge, Affine::constant_of(0)));
    set_module_tail(r, a);
    return r;
  }

  SchematicRule torsion_rule(Alphabet const& a, int gen) {
    SchematicRule r;
    r.label = "torsion(" + a[gen].name + ")";
    r.vars = {"n"};
    r.lhs = {LetterPattern::of(gen, Affine::var(0))};
    r.guards.push_back(cmp(Affine::var(0), CmpOp::Lt,
                           Affine::constant_of(-a[gen].torsion)));
    set_module_tail(r, a);
    return r;
  }

  SchematicRule vacuum_T_rule() {
    SchematicRule r;
    r.label = "vacuum(T)";
    r.lhs = {LetterPattern::T()};
    r.kind = RuleKind::Module;
    return r;
  }

  namespace {

    // Commutation of two central letters oriented by the central order
    // e(-1) < e(0) < e(1) < ... < e(-2) < e(-3) < ...; three guard regions.
    std::vector<SchematicRule> central_pair_rules(Alphabet const& a, int p, int q) {
      bool up = a[p].rank > a[q].rank;
      Affine n = Affine::var(0);
      Affine m = Affine::var(1);
      Affine minus1 = Affine::constant_of(-1);
      Affine minus2 = Affine::constant_of(-2);
      std::vector<SchematicRule> out;
      SchematicRule hi = swap_base(p, q);
      hi.label = "central(" + a[p].name + "," + a[q].name + ")";
      hi.guards = {cmp(n, CmpOp::Ge, minus1), cmp(m, CmpOp::Ge, minus1),
                   cmp(n, up ? CmpOp::Ge : CmpOp::Gt, m)};
      out.push_back(hi);
      SchematicRule mixed = swap_base(p, q);
      mixed.label = hi.label;
      mixed.guards = {cmp(n, CmpOp::Le, minus2), cmp(m, CmpOp::Ge, minus1)};
      out.push_back(mixed);
      SchematicRule lo = swap_base(p, q);
      lo.label = hi.label;
      lo.guards = {cmp(n, CmpOp::Le, minus2), cmp(m, CmpOp::Le, minus2),
                   cmp(n, up ? CmpOp::Le : CmpOp::Lt, m)};
      out.push_back(lo);
      if (p == q) {
        // equal letters are never rewritten
        out[0].guards.back().op = CmpOp::Gt;
        out[2].guards.back().op = CmpOp::Lt;
      }
      return out;
    }

    // A central letter left of an ordinary one is always moved right.
    SchematicRule central_mixed_rule(Alphabet const& a, int central, int ordinary) {
      SchematicRule r = swap_base(central, ordinary);
      r.label = "central(" + a[central].name + "," + a[ordinary].name + ")";
      return r;
    }

  }  // namespace

  SchematicRule orient_relation(LinComb const& r, Alphabet const& a,
                                std::string label) {
    auto lead = r.leading(a.order());
    if (!lead) {
      throw UnorientableRelation("relation '" + label + "' is zero");
    }
    if (lead->module && lead->empty()) {
      throw UnorientableRelation("relation '" + label
                                 + "' has the vacuum as leading word");
    }
    Rational c = r.coeff(*lead);
    LinComb rhs = LinComb(*lead) - Rational(1) / c * r;
    return concrete_rule(*lead, rhs, std::move(label));
  }

  RuleSystem coefficient_rules(VertexPresentation const& p) {
    p.validate();
    Alphabet a = p.alphabet();
    RuleSystem sys(a);
    sys.locality = p.locality;
    std::vector<SchematicRule> rules;
    int n = static_cast<int>(a.size());
    for (int g = 0; g < n; ++g) {
      rules.push_back(t_rule(g));
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        bool cx = a[x].central;
        bool cy = a[y].central;
        if (!cx && !cy) {
          rules.push_back(locality_rule(a, x, y, p.N(x, y)));
          continue;
        }
        if (p.N(x, y) != 0) {
          throw SemanticError("central generator '" + a[cx ? x : y].name
                              + "' must have locality 0");
        }
        if (cx && cy) {
          for (auto& r : central_pair_rules(a, x, y)) {
            rules.push_back(std::move(r));
          }
        } else if (cx) {
          rules.push_back(central_mixed_rule(a, x, y));
        }
      }
    }
    for (int g = 0; g < n; ++g) {
      rules.push_back(vacuum_rule(a, g));
      if (a[g].central && a[g].torsion > 0) {
        rules.push_back(torsion_rule(a, g));
      }
    }
    rules.push_back(vacuum_T_rule());
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      rules.push_back(orient_relation(p.relations[i], a,
                                      "relation " + std::to_string(i + 1)));
    }
    for (auto& r : rules) {
      sys.add_defining(r);
      sys.add_rule(std::move(r));
    }
    return sys;
  }

  void quotient_identify(RuleSystem& sys, Word const& lhs, LinComb const& rhs) {
    auto const& order = sys.alphabet().order();
    for (auto const& [w, c] : rhs.terms()) {
      if (order.compare_words(lhs, w) <= 0) {
        throw OrderViolation("quotient rule is not decreasing: "
                             + sys.alphabet().word_str(lhs) + " vs "
                             + sys.alphabet().word_str(w));
      }
    }
    SchematicRule r = concrete_rule(lhs, rhs, "quotient");
    std::string key = rule_key(r);
    for (auto const& d : sys.defining()) {
      if (rule_key(d) == key) {
        return;
      }
    }
    sys.add_defining(r);
    sys.add_rule(std::move(r));
  }

}  // namespace vgsb
