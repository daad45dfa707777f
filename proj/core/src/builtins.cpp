#include "vgsb/builtins.hpp"

#include "vgsb/errors.hpp"

namespace vgsb {

  namespace {

    Generator gen(std::string name, int rank, Rational weight) {
      Generator g;
      g.name = std::move(name);
      g.rank = rank;
      g.weight = weight;
      return g;
    }

    Word mw(std::vector<Letter> letters) {
      return Word(std::move(letters), true);
    }

  }  // namespace

  VertexPresentation weyl_presentation() {
    VertexPresentation p;
    p.generators = {gen("x", 0, Rational(1, 2)), gen("y", 1, Rational(1, 2))};
    p.locality = {{{0, 0}, 0}, {{1, 1}, 0}, {{0, 1}, 1}, {{1, 0}, 1}};
    LinComb rel(mw({Letter::mode_of(0, 0), Letter::mode_of(1, -1)}));
    rel.add(Word::vacuum(), Rational(-1));
    p.relations.push_back(rel);
    return p;
  }

  RuleSystem weyl_coefficient_system() {
    RuleSystem sys = coefficient_rules(weyl_presentation());
    sys.name = "weyl-coefficient";
    return sys;
  }

  RuleSystem weyl_system() {
    RuleSystem sys = coefficient_rules(weyl_presentation());
    sys.name = "weyl";
    int x = 0;
    int y = 1;
    Affine m = Affine::var(0);

    SchematicRule yx;
    yx.label = "tail y(m)x(m)";
    yx.vars = {"m"};
    yx.lhs = {LetterPattern::of(y, m), LetterPattern::of(x, m)};
    yx.rhs.push_back(RhsTerm{{}, {LetterPattern::of(x, m), LetterPattern::of(y, m)}, {}});
    yx.kind = RuleKind::Module;
    yx.tail = TailKind::Any;
    sys.add_rule(yx);

    SchematicRule xy = yx;
    xy.label = "tail x(m+1)y(m)";
    xy.lhs = {LetterPattern::of(x, m + 1), LetterPattern::of(y, m)};
    xy.rhs = {RhsTerm{{}, {LetterPattern::of(y, m), LetterPattern::of(x, m + 1)}, {}}};
    xy.guards = {Guard{m, CmpOp::Ne, Affine::constant_of(-1)}};
    sys.add_rule(xy);

    SchematicRule xy0;
    xy0.label = "tail x(0)y(-1)";
    xy0.lhs = {LetterPattern::concrete(Letter::mode_of(x, 0)),
               LetterPattern::concrete(Letter::mode_of(y, -1))};
    xy0.rhs = {RhsTerm{{}, {LetterPattern::concrete(Letter::mode_of(y, -1)),
                            LetterPattern::concrete(Letter::mode_of(x, 0))}, {}},
               RhsTerm{}};
    xy0.kind = RuleKind::Module;
    xy0.tail = TailKind::Any;
    sys.add_rule(xy0);
    return sys;
  }

  bool weyl_terminal(Word const& w) {
    if (!w.module) {
      return false;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].is_T() || w[i].mode >= 0) {
        return false;
      }
      if (i + 1 < w.size()) {
        if (w[i + 1].is_T() || w[i].mode > w[i + 1].mode) {
          return false;
        }
        if (w[i].gen == 1 && w[i + 1].gen == 0 && w[i].mode == w[i + 1].mode) {
          return false;
        }
      }
    }
    return true;
  }

  VertexPresentation free_presentation(int k, std::vector<std::vector<int>> const& N) {
    if (k < 1 || static_cast<int>(N.size()) != k) {
      throw SemanticError("free presentation: locality matrix has wrong size");
    }
    VertexPresentation p;
    static const char* kSmall[] = {"x", "y", "z"};
    for (int i = 0; i < k; ++i) {
      std::string name = k == 1 ? "v" : k <= 3 ? kSmall[i] : "g" + std::to_string(i + 1);
      p.generators.push_back(gen(name, i, Rational(1)));
      if (static_cast<int>(N[i].size()) != k) {
        throw SemanticError("free presentation: locality matrix has wrong size");
      }
      for (int j = 0; j < k; ++j) {
        p.locality[{i, j}] = N[i][j];
      }
    }
    return p;
  }

  VertexPresentation abelian_presentation() {
    VertexPresentation p;
    p.generators = {gen("e", 0, Rational(1))};
    p.locality = {{{0, 0}, 0}};
    p.relations.push_back(LinComb(mw({Letter::T(), Letter::mode_of(0, -1)})));
    return p;
  }

  RuleSystem abelian_system() {
    RuleSystem sys = coefficient_rules(abelian_presentation());
    sys.name = "abelian";
    SchematicRule r;
    r.label = "abelian e(n)";
    r.vars = {"n"};
    r.lhs = {LetterPattern::of(0, Affine::var(0))};
    r.guards = {Guard{Affine::var(0), CmpOp::Le, Affine::constant_of(-2)}};
    r.kind = RuleKind::Module;
    r.tail = TailKind::Restricted;
    r.tail_letters = {Letter::mode_of(0, -1)};
    sys.add_rule(r);
    return sys;
  }

}  // namespace vgsb
