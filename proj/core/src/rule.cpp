#include "vgsb/rule.hpp"

#include <algorithm>
#include <cctype>

#include "vgsb/errors.hpp"

namespace vgsb {

  // ---------------------------------------------------------------- Affine

  Affine Affine::var(int v, std::int64_t c) {
    Affine a;
    a.coef.assign(v + 1, 0);
    a.coef[v] = c;
    return a;
  }

  Affine Affine::constant_of(std::int64_t c) {
    Affine a;
    a.constant = c;
    return a;
  }

  bool Affine::is_constant() const {
    return std::all_of(coef.begin(), coef.end(),
                       [](std::int64_t c) { return c == 0; });
  }

  std::int64_t Affine::eval(Subst const& s) const {
    std::int64_t x = constant;
    for (std::size_t v = 0; v < coef.size(); ++v) {
      if (coef[v] != 0) {
        x += coef[v] * s.value[v];
      }
    }
    return x;
  }

  std::vector<int> Affine::unbound(Subst const& s) const {
    std::vector<int> out;
    for (std::size_t v = 0; v < coef.size(); ++v) {
      if (coef[v] != 0 && (v >= s.bound.size() || !s.bound[v])) {
        out.push_back(static_cast<int>(v));
      }
    }
    return out;
  }

  Affine& Affine::operator+=(Affine const& o) {
    if (coef.size() < o.coef.size()) {
      coef.resize(o.coef.size(), 0);
    }
    for (std::size_t v = 0; v < o.coef.size(); ++v) {
      coef[v] += o.coef[v];
    }
    constant += o.constant;
    return *this;
  }

  Affine& Affine::operator-=(Affine const& o) {
    Affine neg = o;
    neg *= -1;
    return *this += neg;
  }

  Affine& Affine::operator*=(std::int64_t k) {
    for (auto& c : coef) {
      c *= k;
    }
    constant *= k;
    return *this;
  }

  bool operator==(Affine const& a, Affine const& b) {
    std::size_t n = std::max(a.coef.size(), b.coef.size());
    for (std::size_t v = 0; v < n; ++v) {
      if (a.at(static_cast<int>(v)) != b.at(static_cast<int>(v))) {
        return false;
      }
    }
    return a.constant == b.constant;
  }

  std::string Affine::str(std::vector<std::string> const& names) const {
    std::string out;
    for (std::size_t v = 0; v < coef.size(); ++v) {
      std::int64_t c = coef[v];
      if (c == 0) {
        continue;
      }
      if (c < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      std::int64_t m = c < 0 ? -c : c;
      if (m != 1) {
        out += std::to_string(m) + "*";
      }
      out += names.at(v);
    }
    if (constant != 0 || out.empty()) {
      if (constant >= 0 && !out.empty()) {
        out += "+";
      }
      out += std::to_string(constant);
    }
    return out;
  }

  namespace {

    std::string strip(std::string const& s) {
      std::size_t b = 0;
      std::size_t e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return s.substr(b, e - b);
    }

    int var_index(std::string const& name, std::vector<std::string>& names,
                  bool allow_new) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
          return static_cast<int>(i);
        }
      }
      if (!allow_new) {
        throw ParseError("unknown index variable '" + name + "'");
      }
      names.push_back(name);
      return static_cast<int>(names.size() - 1);
    }

  }  // namespace

  Affine parse_affine(std::string const& text,
                      std::vector<std::string>& names, bool allow_new) {
    std::string s;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) {
        s += ch;
      }
    }
    if (s.empty()) {
      throw ParseError("empty index expression");
    }
    Affine out;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
      std::int64_t sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        throw ParseError("expected '+' or '-' in '" + text + "'");
      }
      first = false;
      std::int64_t num = 1;
      bool have_num = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
        num = std::stoll(s.substr(i, j - i));
        have_num = true;
        i = j;
        if (i < s.size() && s[i] == '*') {
          ++i;
        } else {
          out.constant += sign * num;
          continue;
        }
      }
      std::size_t j = i;
      while (j < s.size()
             && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      if (j == i || std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw ParseError("malformed index expression '" + text + "'");
      }
      int v = var_index(s.substr(i, j - i), names, allow_new);
      out += Affine::var(v, sign * (have_num ? num : 1));
      i = j;
    }
    return out;
  }

  // ----------------------------------------------------------------- Guard

  bool Guard::holds(Subst const& s) const {
    std::int64_t a = lhs.eval(s);
    std::int64_t b = rhs.eval(s);
    switch (op) {
      case CmpOp::Lt: return a < b;
      case CmpOp::Le: return a <= b;
      case CmpOp::Eq: return a == b;
      case CmpOp::Ne: return a != b;
      case CmpOp::Gt: return a > b;
      case CmpOp::Ge: return a >= b;
    }
    return false;
  }

  namespace {

    char const* op_text(CmpOp op) {
      switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
      }
      return "?";
    }

  }  // namespace

  std::string Guard::str(std::vector<std::string> const& names) const {
    return lhs.str(names) + " " + op_text(op) + " " + rhs.str(names);
  }

  Guard parse_guard(std::string const& text, std::vector<std::string>& names) {
    static const std::pair<char const*, CmpOp> kOps[] = {
        {"<=", CmpOp::Le}, {">=", CmpOp::Ge}, {"!=", CmpOp::Ne},
        {"==", CmpOp::Eq}, {"<", CmpOp::Lt},  {">", CmpOp::Gt},
        {"=", CmpOp::Eq}};
    for (auto const& [tok, op] : kOps) {
      auto p = text.find(tok);
      if (p != std::string::npos) {
        Guard g;
        g.op = op;
        g.lhs = parse_affine(text.substr(0, p), names, false);
        g.rhs = parse_affine(text.substr(p + std::char_traits<char>::length(tok)),
                             names, false);
        return g;
      }
    }
    throw ParseError("guard without comparison: '" + text + "'");
  }

  // ----------------------------------------------------------- Coefficient

  Rational CoefficientFn::eval(Subst const& s) const {
    Rational out = constant;
    for (auto const& f : factors) {
      if (out.is_zero()) {
        break;
      }
      switch (f.kind) {
        case CoeffFactor::Kind::Binom: {
          std::int64_t k = f.b.eval(s);
          out *= generalized_binomial(f.a.eval(s), k);
          break;
        }
        case CoeffFactor::Kind::Sign:
          if (f.a.eval(s) % 2 != 0) {
            out = -out;
          }
          break;
        case CoeffFactor::Kind::Delta:
          if (f.a.eval(s) != f.k) {
            out = Rational(0);
          }
          break;
      }
    }
    return out;
  }

  std::string CoefficientFn::str(std::vector<std::string> const& names) const {
    std::string out = constant.str();
    for (auto const& f : factors) {
      switch (f.kind) {
        case CoeffFactor::Kind::Binom:
          out += "*binom(" + f.a.str(names) + "," + f.b.str(names) + ")";
          break;
        case CoeffFactor::Kind::Sign:
          out += "*sign(" + f.a.str(names) + ")";
          break;
        case CoeffFactor::Kind::Delta:
          out += "*delta(" + f.a.str(names) + "," + std::to_string(f.k) + ")";
          break;
      }
    }
    return out;
  }

  namespace {

    std::vector<std::string> split_top(std::string const& s, char sep) {
      std::vector<std::string> parts;
      int depth = 0;
      std::string cur;
      for (char ch : s) {
        if (ch == '(') {
          ++depth;
        } else if (ch == ')') {
          --depth;
        }
        if (ch == sep && depth == 0) {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      parts.push_back(cur);
      return parts;
    }

  }  // namespace

  CoefficientFn parse_coefficient(std::string const& text,
                                  std::vector<std::string>& names) {
    CoefficientFn fn;
    for (std::string part : split_top(text, '*')) {
      part = strip(part);
      if (!part.empty() && part[0] == '-'
          && !std::isdigit(static_cast<unsigned char>(part.size() > 1 ? part[1] : '0'))) {
        fn.constant = -fn.constant;
        part = strip(part.substr(1));
      }
      auto open = part.find('(');
      if (open == std::string::npos) {
        fn.constant *= Rational::parse(part);
        continue;
      }
      if (part.back() != ')') {
        throw ParseError("malformed coefficient factor '" + part + "'");
      }
      std::string fname = strip(part.substr(0, open));
      auto args = split_top(part.substr(open + 1, part.size() - open - 2), ',');
      CoeffFactor f;
      if (fname == "binom" && args.size() == 2) {
        f.kind = CoeffFactor::Kind::Binom;
        f.a = parse_affine(args[0], names, false);
        f.b = parse_affine(args[1], names, false);
      } else if (fname == "sign" && args.size() == 1) {
        f.kind = CoeffFactor::Kind::Sign;
        f.a = parse_affine(args[0], names, false);
      } else if (fname == "delta" && args.size() == 2) {
        f.kind = CoeffFactor::Kind::Delta;
        f.a = parse_affine(args[0], names, false);
        Affine k = parse_affine(args[1], names, false);
        if (!k.is_constant()) {
          throw ParseError("delta target must be a constant");
        }
        f.k = k.constant;
      } else {
        throw ParseError("unknown coefficient factor '" + part + "'");
      }
      fn.factors.push_back(std::move(f));
    }
    return fn;
  }

  // ------------------------------------------------------------------ Rule

  LetterPattern LetterPattern::concrete(Letter const& l) {
    return l.is_T() ? T() : of(l.gen, Affine::constant_of(l.mode));
  }

  bool SchematicRule::is_concrete() const {
    return vars.empty();
  }

  namespace {

    void expand_terms(RhsTerm const& term, std::size_t sum_index, Subst& s,
                      LinComb& out) {
      if (sum_index == term.sums.size()) {
        Rational c = term.coeff.eval(s);
        if (c.is_zero()) {
          return;
        }
        Word w;
        w.letters.reserve(term.word.size());
        for (auto const& p : term.word) {
          w.letters.push_back(p.is_T ? Letter::T()
                                     : Letter::mode_of(p.gen, p.mode.eval(s)));
        }
        out.add(w, c);
        return;
      }
      auto const& r = term.sums[sum_index];
      std::int64_t lo = r.lo.eval(s);
      std::int64_t hi = r.hi.eval(s);
      for (std::int64_t x = lo; x <= hi; ++x) {
        s.set(r.var, x);
        expand_terms(term, sum_index + 1, s, out);
      }
      s.unset(r.var);
    }

  }  // namespace

  LinComb SchematicRule::instantiate_rhs(Subst const& s) const {
    LinComb out;
    Subst work = s;
    if (work.value.size() < vars.size()) {
      work.value.resize(vars.size(), 0);
      work.bound.resize(vars.size(), false);
    }
    for (auto const& t : rhs) {
      expand_terms(t, 0, work, out);
    }
    return out;
  }

  std::vector<Letter> SchematicRule::instantiate_lhs(Subst const& s) const {
    std::vector<Letter> out;
    for (auto const& p : lhs) {
      out.push_back(p.is_T ? Letter::T() : Letter::mode_of(p.gen, p.mode.eval(s)));
    }
    return out;
  }

  void validate_rule(SchematicRule const& r) {
    Subst s(r.vars.size());
    auto fail = [&](std::string const& why) {
      throw SemanticError("rule '" + r.label + "': " + why);
    };
    for (auto const& p : r.lhs) {
      if (p.is_T) {
        continue;
      }
      auto ub = p.mode.unbound(s);
      if (ub.size() > 1) {
        fail("pattern binds more than one variable at once");
      }
      for (int v : ub) {
        s.set(v, 0);
      }
    }
    for (auto const& g : r.guards) {
      if (!g.lhs.unbound(s).empty() || !g.rhs.unbound(s).empty()) {
        fail("guard refers to a variable not bound by the lhs");
      }
    }
    for (auto const& t : r.rhs) {
      Subst ts = s;
      for (auto const& sr : t.sums) {
        if (!sr.lo.unbound(ts).empty() || !sr.hi.unbound(ts).empty()) {
          fail("sum range refers to an unbound variable");
        }
        ts.set(sr.var, 0);
      }
      for (auto const& p : t.word) {
        if (!p.is_T && !p.mode.unbound(ts).empty()) {
          fail("rhs refers to an unbound variable");
        }
      }
      for (auto const& f : t.coeff.factors) {
        if (!f.a.unbound(ts).empty() || !f.b.unbound(ts).empty()) {
          fail("coefficient refers to an unbound variable");
        }
      }
    }
    if (r.lhs.empty()) {
      fail("empty lhs");
    }
    if (r.kind == RuleKind::Algebra && r.tail != TailKind::None) {
      fail("algebra rules take no tail");
    }
  }

  namespace {

    bool unify_letter(LetterPattern const& p, Letter const& l, Subst& s) {
      if (p.is_T || l.is_T()) {
        return p.is_T && l.is_T();
      }
      if (p.gen != l.gen) {
        return false;
      }
      auto ub = p.mode.unbound(s);
      if (ub.empty()) {
        return p.mode.eval(s) == l.mode;
      }
      if (ub.size() != 1) {
        return false;
      }
      int v = ub[0];
      std::int64_t c = p.mode.at(v);
      s.set(v, 0);
      std::int64_t rest = p.mode.eval(s);
      std::int64_t diff = l.mode - rest;
      if (diff % c != 0) {
        s.unset(v);
        return false;
      }
      s.set(v, diff / c);
      return true;
    }

  }  // namespace

  bool unify_pattern(SchematicRule const& r, std::size_t pattern_from,
                     std::vector<Letter> const& letters, std::size_t from,
                     std::size_t count, Subst& s) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!unify_letter(r.lhs[pattern_from + i], letters[from + i], s)) {
        return false;
      }
    }
    return true;
  }

  std::optional<Subst> match_rule(SchematicRule const& r, Word const& w,
                                  std::size_t position) {
    std::size_t L = r.lhs.size();
    if (position + L > w.size()) {
      return std::nullopt;
    }
    if (r.kind == RuleKind::Module) {
      if (!w.module) {
        return std::nullopt;
      }
      switch (r.tail) {
        case TailKind::None:
          if (position + L != w.size()) {
            return std::nullopt;
          }
          break;
        case TailKind::Any:
          for (std::size_t i = position + L; i < w.size(); ++i) {
            if (w[i].is_T()) {
              return std::nullopt;
            }
          }
          break;
        case TailKind::Restricted:
          for (std::size_t i = position + L; i < w.size(); ++i) {
            if (std::find(r.tail_letters.begin(), r.tail_letters.end(), w[i])
                == r.tail_letters.end()) {
              return std::nullopt;
            }
          }
          break;
      }
    }
    Subst s(r.vars.size());
    if (!unify_pattern(r, 0, w.letters, position, L, s)) {
      return std::nullopt;
    }
    for (auto const& g : r.guards) {
      if (!g.holds(s)) {
        return std::nullopt;
      }
    }
    return s;
  }

  LinComb apply_rule(SchematicRule const& r, Subst const& s, Word const& w,
                     std::size_t position) {
    LinComb repl = r.instantiate_rhs(s);
    LinComb out;
    std::size_t L = r.lhs.size();
    for (auto const& [mid, c] : repl.terms()) {
      Word nw;
      nw.module = w.module;
      nw.letters.reserve(w.size() - L + mid.size());
      nw.letters.insert(nw.letters.end(), w.letters.begin(),
                        w.letters.begin() + static_cast<std::ptrdiff_t>(position));
      nw.letters.insert(nw.letters.end(), mid.letters.begin(), mid.letters.end());
      nw.letters.insert(nw.letters.end(),
                        w.letters.begin() + static_cast<std::ptrdiff_t>(position + L),
                        w.letters.end());
      out.add(nw, c);
    }
    return out;
  }

  SchematicRule concrete_rule(Word const& lhs, LinComb const& rhs,
                              std::string label) {
    SchematicRule r;
    r.label = std::move(label);
    r.kind = lhs.module ? RuleKind::Module : RuleKind::Algebra;
    r.tail = TailKind::None;
    for (auto const& l : lhs.letters) {
      r.lhs.push_back(LetterPattern::concrete(l));
    }
    for (auto const& [w, c] : rhs.terms()) {
      if (w.module != lhs.module) {
        throw SemanticError("concrete rule mixes module and algebra words");
      }
      RhsTerm t;
      t.coeff.constant = c;
      for (auto const& l : w.letters) {
        t.word.push_back(LetterPattern::concrete(l));
      }
      r.rhs.push_back(std::move(t));
    }
    return r;
  }

  namespace {

    std::string pattern_str(std::vector<LetterPattern> const& ps,
                            Alphabet const& a,
                            std::vector<std::string> const& names) {
      std::string out;
      for (auto const& p : ps) {
        if (!out.empty()) {
          out += ' ';
        }
        out += p.is_T ? "T" : a[p.gen].name + "(" + p.mode.str(names) + ")";
      }
      return out;
    }

  }  // namespace

  std::string rule_str(SchematicRule const& r, Alphabet const& a) {
    std::string tail;
    if (r.kind == RuleKind::Module) {
      tail = r.tail == TailKind::None ? " vac" : " u vac";
    }
    std::string out = pattern_str(r.lhs, a, r.vars) + tail + " ->";
    if (r.rhs.empty()) {
      out += " 0";
    }
    bool first = true;
    for (auto const& t : r.rhs) {
      out += first ? " " : " + ";
      first = false;
      for (auto const& sr : t.sums) {
        out += "sum(" + r.vars[sr.var] + "=" + sr.lo.str(r.vars) + ".."
               + sr.hi.str(r.vars) + ") ";
      }
      std::string c = t.coeff.str(r.vars);
      if (c != "1") {
        out += c + " ";
      }
      std::string w = pattern_str(t.word, a, r.vars);
      out += w.empty() ? tail.substr(tail.empty() ? 0 : 1) : w + tail;
      if (w.empty() && tail.empty()) {
        out += "1";
      }
    }
    if (!r.guards.empty()) {
      out += "  [";
      for (std::size_t i = 0; i < r.guards.size(); ++i) {
        out += (i ? ", " : "") + r.guards[i].str(r.vars);
      }
      out += "]";
    }
    return out;
  }

}  // namespace vgsb
