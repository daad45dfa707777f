#ifndef VGSB_RULE_HPP_
#define VGSB_RULE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgsb/lincomb.hpp"
#include "vgsb/rational.hpp"
#include "vgsb/word.hpp"

namespace vgsb {

  // Integer substitution for a rule's index variables; unbound slots are
  // tracked separately so partial matches can be extended.
  struct Subst {
    std::vector<std::int64_t> value;
    std::vector<bool> bound;

    explicit Subst(std::size_t n = 0) : value(n, 0), bound(n, false) {}
    void set(int v, std::int64_t x) {
      value[v] = x;
      bound[v] = true;
    }
    void unset(int v) {
      bound[v] = false;
    }
  };

  struct Affine {
    std::vector<std::int64_t> coef;  // indexed by variable
    std::int64_t constant = 0;

    static Affine var(int v, std::int64_t c = 1);
    static Affine constant_of(std::int64_t c);

    std::int64_t at(int v) const {
      return v < static_cast<int>(coef.size()) ? coef[v] : 0;
    }
    bool is_constant() const;
    // Requires every variable with nonzero coefficient to be bound.
    std::int64_t eval(Subst const& s) const;
    // Variables with nonzero coefficient that are unbound in s.
    std::vector<int> unbound(Subst const& s) const;

    Affine& operator+=(Affine const& o);
    Affine& operator-=(Affine const& o);
    Affine& operator*=(std::int64_t k);
    friend Affine operator+(Affine a, Affine const& b) {
      return a += b;
    }
    friend Affine operator-(Affine a, Affine const& b) {
      return a -= b;
    }
    friend Affine operator+(Affine a, std::int64_t c) {
      a.constant += c;
      return a;
    }
    friend Affine operator-(Affine a, std::int64_t c) {
      a.constant -= c;
      return a;
    }
    friend bool operator==(Affine const& a, Affine const& b);

    std::string str(std::vector<std::string> const& names) const;
  };

  // Parses "2*n-m+1" style expressions over the given variable names. New
  // names are appended to `names` when `allow_new` is set.
  Affine parse_affine(std::string const& text,
                      std::vector<std::string>& names, bool allow_new);

  enum class CmpOp { Lt, Le, Eq, Ne, Gt, Ge };

  struct Guard {
    Affine lhs;
    CmpOp op = CmpOp::Eq;
    Affine rhs;

    bool holds(Subst const& s) const;
    std::string str(std::vector<std::string> const& names) const;
  };

  Guard parse_guard(std::string const& text, std::vector<std::string>& names);

  struct CoeffFactor {
    enum class Kind { Binom, Sign, Delta };
    Kind kind = Kind::Sign;
    Affine a;
    Affine b;             // Binom: lower index
    std::int64_t k = 0;   // Delta: target constant
  };

  // Constant times a product of binomials, signs and Kronecker deltas.
  struct CoefficientFn {
    Rational constant = Rational(1);
    std::vector<CoeffFactor> factors;

    Rational eval(Subst const& s) const;
    std::string str(std::vector<std::string> const& names) const;
  };

  CoefficientFn parse_coefficient(std::string const& text,
                                  std::vector<std::string>& names);

  struct LetterPattern {
    bool is_T = false;
    int gen = 0;
    Affine mode;

    static LetterPattern T() {
      LetterPattern p;
      p.is_T = true;
      return p;
    }
    static LetterPattern of(int g, Affine m) {
      LetterPattern p;
      p.gen = g;
      p.mode = std::move(m);
      return p;
    }
    static LetterPattern concrete(Letter const& l);
  };

  // Sum variable `var` ranging over lo..hi inclusive.
  struct SumRange {
    int var = 0;
    Affine lo;
    Affine hi;
  };

  struct RhsTerm {
    CoefficientFn coeff;
    std::vector<LetterPattern> word;
    std::vector<SumRange> sums;
  };

  enum class RuleKind { Algebra, Module };
  enum class TailKind { None, Any, Restricted };

  // Integer-parameterized rewrite rule. The matched lhs segment is replaced
  // by each instantiated rhs word; letters outside the segment are kept.
  // Module rules with TailKind::None must end at the vacuum; TailKind::Any
  // admits any T-free tail before the vacuum, Restricted only letters from
  // `tail_letters`.
  struct SchematicRule {
    int id = -1;
    std::string label;
    std::vector<std::string> vars;
    std::vector<LetterPattern> lhs;
    std::vector<Guard> guards;
    std::vector<RhsTerm> rhs;
    RuleKind kind = RuleKind::Algebra;
    TailKind tail = TailKind::None;
    std::vector<Letter> tail_letters;
    bool order_violating = false;

    std::size_t length() const {
      return lhs.size();
    }
    bool is_concrete() const;
    bool anchored() const {
      return kind == RuleKind::Module && tail == TailKind::None;
    }

    // Replacement words (algebra letters only) with their coefficients.
    LinComb instantiate_rhs(Subst const& s) const;
    std::vector<Letter> instantiate_lhs(Subst const& s) const;
  };

  // Checks that every variable can be bound by left-to-right matching and
  // that sum ranges only refer to earlier variables. Throws SemanticError.
  void validate_rule(SchematicRule const& r);

  // The substitution making the lhs equal w at `position` with all guards
  // satisfied, or nullopt. Honours the anchoring and tail constraints.
  std::optional<Subst> match_rule(SchematicRule const& r, Word const& w,
                                  std::size_t position);

  // Unifies the lhs pattern with `letters` starting at `offset` (pattern
  // index), extending s. No guard or anchoring checks.
  bool unify_pattern(SchematicRule const& r, std::size_t pattern_from,
                     std::vector<Letter> const& letters, std::size_t from,
                     std::size_t count, Subst& s);

  // w[0:p] + rhs + w[p+L:] for a successful match at p.
  LinComb apply_rule(SchematicRule const& r, Subst const& s, Word const& w,
                     std::size_t position);

  // Builds a rule with no variables: lhs -> rhs (rhs given as a module or
  // algebra combination whose words replace the whole lhs).
  SchematicRule concrete_rule(Word const& lhs, LinComb const& rhs,
                              std::string label);

  std::string rule_str(SchematicRule const& r, Alphabet const& a);

}  // namespace vgsb

#endif  // VGSB_RULE_HPP_
