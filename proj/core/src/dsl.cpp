#include "vgsb/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "vgsb/builtins.hpp"
#include "vgsb/envelope.hpp"
#include "vgsb/errors.hpp"

namespace vgsb {

  namespace {

    enum class Tok { Id, Num, Punct, End };

    struct Token {
      Tok kind = Tok::End;
      std::string text;
      int line = 1;
      int column = 1;
    };

    std::string show(Token const& t) {
      return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    }

    std::vector<Token> lex(std::string_view src) {
      std::vector<Token> out;
      int line = 1;
      int col = 1;
      std::size_t i = 0;
      auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
          if (src[i] == '\n') {
            ++line;
            col = 1;
          } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
            ++col;
          }
        }
      };
      while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          advance(1);
          continue;
        }
        if (c == '#') {
          while (i < src.size() && src[i] != '\n') {
            advance(1);
          }
          continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j]))
                                    || src[j] == '_' || src[j] == '\'')) {
            ++j;
          }
          t.kind = Tok::Id;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
            ++j;
          }
          t.kind = Tok::Num;
        } else if (src.substr(i, 3) == "\xE2\x88\x92") {
          t.kind = Tok::Punct;
          t.text = "-";
          advance(3);
          out.push_back(t);
          continue;
        } else if (std::string_view("():;,=+-/^*").find(c) != std::string_view::npos) {
          j = i + 1;
          t.kind = Tok::Punct;
        } else {
          throw ParseError("syntax error: unexpected character '" + std::string(1, c) + "'",
                           line, col);
        }
        t.text = std::string(src.substr(i, j - i));
        advance(j - i);
        out.push_back(t);
      }
      Token end;
      end.line = line;
      end.column = col;
      out.push_back(end);
      return out;
    }

    bool reserved(std::string const& s) {
      return s == "T" || s == "vac" || s == "lambda";
    }

    class Parser {
     public:
      explicit Parser(std::string_view src) : toks_(lex(src)) {}

      Token const& peek() const {
        return toks_[pos_];
      }
      Token next() {
        Token t = toks_[pos_];
        if (t.kind != Tok::End) {
          ++pos_;
        }
        return t;
      }
      bool at_end() const {
        return peek().kind == Tok::End;
      }
      bool is(char const* p) const {
        return peek().kind == Tok::Punct && peek().text == p;
      }
      bool is_word(char const* w) const {
        return peek().kind == Tok::Id && peek().text == w;
      }
      bool accept(char const* p) {
        if (is(p)) {
          next();
          return true;
        }
        return false;
      }

      [[noreturn]] void fail(std::vector<std::string> const& expected) const {
        std::string set;
        for (auto const& e : expected) {
          set += (set.empty() ? "" : ", ") + e;
        }
        std::string what = expected.size() == 1 ? "expected " : "expected one of ";
        throw ParseError("syntax error: " + what + set + " but found " + show(peek()),
                         peek().line, peek().column);
      }
      [[noreturn]] void fail_at(Token const& t, std::string const& msg) const {
        throw ParseError(msg, t.line, t.column);
      }

      void expect(char const* p) {
        if (!accept(p)) {
          fail({std::string("'") + p + "'"});
        }
      }
      Token ident() {
        if (peek().kind != Tok::Id) {
          fail({"identifier"});
        }
        return next();
      }
      std::int64_t nat() {
        if (peek().kind != Tok::Num) {
          fail({"natural number"});
        }
        Token t = next();
        if (t.text.size() > 12) {
          fail_at(t, "number too large: " + t.text);
        }
        return std::stoll(t.text);
      }
      std::int64_t integer() {
        bool neg = accept("-");
        std::int64_t n = nat();
        return neg ? -n : n;
      }
      Rational unsigned_rational() {
        std::int64_t p = nat();
        if (accept("/")) {
          Token at = peek();
          std::int64_t q = nat();
          if (q == 0) {
            fail_at(at, "zero denominator");
          }
          return Rational(p, q);
        }
        return Rational(p);
      }
      Rational rational() {
        bool neg = accept("-");
        Rational r = unsigned_rational();
        return neg ? -r : r;
      }

     private:
      std::vector<Token> toks_;
      std::size_t pos_ = 0;
    };

    class Names {
     public:
      explicit Names(std::vector<Generator> const& g) : gens_(g) {}
      int find(Parser const& p, Token const& t) const {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
          if (gens_[i].name == t.text) {
            return static_cast<int>(i);
          }
        }
        p.fail_at(t, "unknown generator '" + t.text + "'");
      }

     private:
      std::vector<Generator> const& gens_;
    };

    // Sign for the first term, then "+" or "-" before each following one.
    template <class F>
    void signed_terms(Parser& p, F&& term) {
      bool neg = p.accept("-");
      for (;;) {
        term(neg ? Rational(-1) : Rational(1));
        if (p.accept("+")) {
          neg = false;
        } else if (p.accept("-")) {
          neg = true;
        } else {
          return;
        }
      }
    }

    bool starts_factor(Parser const& p) {
      return p.peek().kind == Tok::Id;
    }

    LinComb parse_lincomb(Parser& p, Names const& names, bool module_only) {
      LinComb out;
      signed_terms(p, [&](Rational sign) {
        Token start = p.peek();
        Rational c(1);
        if (p.peek().kind == Tok::Num) {
          c = p.unsigned_rational();
        }
        if (!starts_factor(p)) {
          p.fail({"generator", "'T'", "'vac'"});
        }
        std::vector<Letter> letters;
        bool vac = false;
        while (starts_factor(p)) {
          Token t = p.next();
          if (vac) {
            p.fail_at(t, "'vac' must be the rightmost factor");
          }
          if (t.text == "vac") {
            vac = true;
          } else if (t.text == "T") {
            letters.push_back(Letter::T());
          } else {
            int g = names.find(p, t);
            p.expect("(");
            std::int64_t n = p.integer();
            p.expect(")");
            letters.push_back(Letter::mode_of(g, n));
          }
        }
        if (module_only && !vac) {
          throw SemanticError("non-module relation term at line " + std::to_string(start.line)
                              + ", column " + std::to_string(start.column)
                              + ": the rightmost factor must be vac");
        }
        out.add(Word(std::move(letters), vac), sign * c);
      });
      return out;
    }

    Bracket parse_bracket(Parser& p, Names const& names) {
      Bracket out;
      signed_terms(p, [&](Rational sign) {
        Rational c(1);
        if (p.peek().kind == Tok::Num) {
          c = p.unsigned_rational();
        }
        int lpow = 0;
        int tpow = 0;
        for (;;) {
          if (p.is_word("lambda") || p.is_word("T")) {
            bool lam = p.next().text == "lambda";
            int k = 1;
            if (p.accept("^")) {
              k = static_cast<int>(p.nat());
            }
            (lam ? lpow : tpow) += k;
            continue;
          }
          break;
        }
        Token g = p.ident();
        out.add(lpow, 0, TElement::gen(names.find(p, g), sign * c, tpow));
      });
      return out;
    }

    std::vector<Rational> parse_novikov(Parser& p, Names const& names, std::size_t dim) {
      std::vector<Rational> out(dim);
      signed_terms(p, [&](Rational sign) {
        Rational c(1);
        if (p.peek().kind == Tok::Num) {
          c = p.unsigned_rational();
        }
        Token g = p.ident();
        out[names.find(p, g)] += sign * c;
      });
      return out;
    }

    std::pair<int, int> pair_of(Parser& p, Names const& names) {
      p.expect("(");
      int a = names.find(p, p.ident());
      p.expect(",");
      int b = names.find(p, p.ident());
      p.expect(")");
      return {a, b};
    }

    char const* kind_name(DocKind k) {
      switch (k) {
        case DocKind::Conformal:
          return "conformal";
        case DocKind::Novikov:
          return "novikov";
        default:
          return "vertex";
      }
    }

    class DocParser {
     public:
      explicit DocParser(std::string_view src) : p_(src), names_(d_.generators) {}

      Document run() {
        while (!p_.at_end()) {
          statement();
        }
        finish();
        return std::move(d_);
      }

     private:
      void only(Token const& kw, std::initializer_list<DocKind> kinds) {
        if (std::find(kinds.begin(), kinds.end(), d_.kind) == kinds.end()) {
          p_.fail_at(kw, "'" + kw.text + "' is not allowed in a "
                             + kind_name(d_.kind) + " file");
        }
      }

      void statement() {
        static const std::vector<std::string> kKeywords = {
            "'bracket'", "'central'", "'generators'", "'kind'", "'locality'", "'name'",
            "'order'", "'product'", "'quotient'", "'relation'", "'system'", "'weight'"};
        if (p_.peek().kind != Tok::Id) {
          p_.fail(kKeywords);
        }
        Token kw = p_.peek();
        std::string const& k = kw.text;
        if (k != "kind" && k != "name" && k != "generators" && k != "locality"
            && k != "weight" && k != "central" && k != "order" && k != "relation"
            && k != "quotient" && k != "system" && k != "bracket" && k != "product") {
          p_.fail(kKeywords);
        }
        p_.next();
        p_.expect(":");
        if (k == "kind") {
          kind(kw);
        } else if (k == "name") {
          d_.name = p_.ident().text;
        } else if (k == "generators") {
          generators();
        } else if (k == "locality") {
          only(kw, {DocKind::Vertex});
          locality();
        } else if (k == "weight") {
          only(kw, {DocKind::Vertex, DocKind::Conformal});
          weight();
        } else if (k == "central") {
          only(kw, {DocKind::Vertex, DocKind::Conformal});
          central();
        } else if (k == "order") {
          order();
        } else if (k == "relation") {
          only(kw, {DocKind::Vertex});
          LinComb lhs = parse_lincomb(p_, names_, true);
          p_.expect("=");
          d_.presentation.relations.push_back(lhs - parse_lincomb(p_, names_, true));
        } else if (k == "quotient") {
          only(kw, {DocKind::Vertex, DocKind::Conformal});
          quotient();
        } else if (k == "system") {
          only(kw, {DocKind::Vertex});
          Token s = p_.ident();
          if (s.text != "weyl" && s.text != "abelian") {
            p_.fail_at(s, "unknown system '" + s.text + "' (expected weyl or abelian)");
          }
          d_.system = s.text;
        } else if (k == "bracket") {
          only(kw, {DocKind::Conformal});
          auto xy = pair_of(p_, names_);
          p_.expect("=");
          d_.brackets.emplace_back(xy, parse_bracket(p_, names_));
        } else {
          only(kw, {DocKind::Novikov});
          auto xy = pair_of(p_, names_);
          p_.expect("=");
          d_.products.emplace_back(xy, parse_novikov(p_, names_, d_.generators.size()));
        }
        p_.expect(";");
      }

      void kind(Token const& kw) {
        if (!d_.generators.empty() || kind_set_) {
          p_.fail_at(kw, "'kind' must be the first statement");
        }
        Token t = p_.ident();
        if (t.text == "vertex") {
          d_.kind = DocKind::Vertex;
        } else if (t.text == "conformal") {
          d_.kind = DocKind::Conformal;
        } else if (t.text == "novikov") {
          d_.kind = DocKind::Novikov;
        } else {
          p_.fail_at(t, "unknown kind '" + t.text + "' (expected vertex, conformal or novikov)");
        }
        kind_set_ = true;
      }

      void generators() {
        if (!d_.brackets.empty() || !d_.products.empty()
            || !d_.presentation.relations.empty() || !d_.quotients.empty()) {
          p_.fail_at(p_.peek(), "generators must be declared before they are used");
        }
        do {
          Token t = p_.ident();
          if (reserved(t.text)) {
            p_.fail_at(t, "'" + t.text + "' is reserved");
          }
          for (auto const& g : d_.generators) {
            if (g.name == t.text) {
              p_.fail_at(t, "duplicate generator '" + t.text + "'");
            }
          }
          Generator g;
          g.name = t.text;
          g.rank = static_cast<int>(d_.generators.size());
          d_.generators.push_back(g);
        } while (p_.accept(","));
      }

      void locality() {
        do {
          Token at = p_.peek();
          auto [a, b] = pair_of(p_, names_);
          p_.expect("=");
          int n = static_cast<int>(p_.nat());
          for (auto key : {std::pair{a, b}, std::pair{b, a}}) {
            auto [it, fresh] = d_.presentation.locality.emplace(key, n);
            if (!fresh && it->second != n) {
              throw SemanticError("asymmetric locality for (" + d_.generators[a].name + ","
                                  + d_.generators[b].name + ") at line "
                                  + std::to_string(at.line) + ", column "
                                  + std::to_string(at.column));
            }
          }
        } while (p_.accept(","));
      }

      void weight() {
        do {
          int g = names_.find(p_, p_.ident());
          p_.expect("=");
          d_.generators[g].weight = p_.rational();
        } while (p_.accept(","));
      }

      void central() {
        int g = names_.find(p_, p_.ident());
        d_.generators[g].central = true;
        if (p_.is_word("torsion")) {
          p_.next();
          d_.generators[g].torsion = static_cast<int>(p_.nat());
        }
      }

      void order() {
        Token at = p_.peek();
        std::vector<int> seen;
        do {
          seen.push_back(names_.find(p_, p_.ident()));
        } while (p_.accept(","));
        std::vector<int> sorted = seen;
        std::sort(sorted.begin(), sorted.end());
        bool perm = sorted.size() == d_.generators.size();
        for (std::size_t i = 0; perm && i < sorted.size(); ++i) {
          perm = sorted[i] == static_cast<int>(i);
        }
        if (!perm) {
          p_.fail_at(at, "order must list every generator exactly once");
        }
        for (std::size_t r = 0; r < seen.size(); ++r) {
          d_.generators[seen[r]].rank = static_cast<int>(r);
        }
      }

      void quotient() {
        Token at = p_.peek();
        LinComb lhs = parse_lincomb(p_, names_, true);
        p_.expect("=");
        LinComb rhs = parse_lincomb(p_, names_, true);
        if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one()) {
          p_.fail_at(at, "quotient lhs must be a single word with coefficient 1");
        }
        d_.quotients.emplace_back(lhs.terms().begin()->first, rhs);
      }

      void finish() {
        if (d_.kind == DocKind::Vertex) {
          d_.presentation.generators = d_.generators;
          d_.presentation.validate();
        }
      }

      Parser p_;
      Document d_;
      Names names_;
      bool kind_set_ = false;
    };

    std::string join(std::vector<std::string> const& parts, std::string const& sep) {
      std::string out;
      for (auto const& s : parts) {
        out += (out.empty() ? "" : sep) + s;
      }
      return out;
    }

    // Terms as (coefficient, body), rendered "a - 2 b + 1/2 c".
    std::string signed_sum(std::vector<std::pair<Rational, std::string>> const& terms) {
      if (terms.empty()) {
        return "0";
      }
      std::string out;
      for (auto const& [c, body] : terms) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
          out += c.sign() < 0 ? "-" : "";
        } else {
          out += c.sign() < 0 ? " - " : " + ";
        }
        out += (mag.is_one() ? "" : mag.str() + " ") + body;
      }
      return out;
    }

    std::string module_str(LinComb const& c, Alphabet const& a) {
      return c.is_zero() ? "0 vac" : c.str(a);
    }

    std::string power(char const* sym, int k) {
      if (k == 0) {
        return "";
      }
      return std::string(sym) + (k == 1 ? "" : "^" + std::to_string(k)) + " ";
    }

  }  // namespace

  Document parse_document(std::string_view src) {
    return DocParser(src).run();
  }

  LinComb parse_expr(std::string_view src, Alphabet const& a) {
    Parser p(src);
    Names names(a.generators());
    LinComb out = parse_lincomb(p, names, false);
    if (!p.at_end()) {
      p.fail({"'+'", "'-'", "end of input"});
    }
    return out;
  }

  std::string serialize(Document const& d) {
    std::string out;
    if (d.kind != DocKind::Vertex) {
      out += std::string("kind: ") + kind_name(d.kind) + ";\n";
    }
    if (!d.name.empty()) {
      out += "name: " + d.name + ";\n";
    }
    std::vector<std::string> names;
    std::vector<std::string> weights;
    bool ranked = true;
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
      auto const& g = d.generators[i];
      names.push_back(g.name);
      if (g.weight) {
        weights.push_back(g.name + " = " + g.weight->str());
      }
      ranked = ranked && g.rank == static_cast<int>(i);
    }
    if (!names.empty()) {
      out += "generators: " + join(names, ", ") + ";\n";
    }
    if (!weights.empty()) {
      out += "weight: " + join(weights, ", ") + ";\n";
    }
    for (auto const& g : d.generators) {
      if (g.central) {
        out += "central: " + g.name
               + (g.torsion > 0 ? " torsion " + std::to_string(g.torsion) : "") + ";\n";
      }
    }
    if (!ranked) {
      std::vector<Generator> by_rank = d.generators;
      std::sort(by_rank.begin(), by_rank.end(),
                [](Generator const& a, Generator const& b) { return a.rank < b.rank; });
      std::vector<std::string> o;
      for (auto const& g : by_rank) {
        o.push_back(g.name);
      }
      out += "order: " + join(o, ", ") + ";\n";
    }
    Alphabet al(d.generators);
    if (d.kind == DocKind::Vertex) {
      std::vector<std::string> loc;
      for (auto const& [k, n] : d.presentation.locality) {
        if (k.first <= k.second) {
          loc.push_back("(" + d.generators[k.first].name + "," + d.generators[k.second].name
                        + ")=" + std::to_string(n));
        }
      }
      if (!loc.empty()) {
        out += "locality: " + join(loc, ", ") + ";\n";
      }
      for (auto const& r : d.presentation.relations) {
        auto lead = r.leading(al.order());
        if (!lead) {
          out += "relation: 0 vac = 0 vac;\n";
          continue;
        }
        Rational c = r.coeff(*lead);
        LinComb lhs(*lead, c);
        LinComb rhs = lhs - r;
        out += "relation: " + lhs.str(al) + " = " + module_str(rhs, al) + ";\n";
      }
      if (!d.system.empty()) {
        out += "system: " + d.system + ";\n";
      }
    }
    for (auto const& [xy, b] : d.brackets) {
      std::vector<std::pair<Rational, std::string>> terms;
      for (auto const& [k, el] : b.terms()) {
        for (auto const& [gt, c] : el.terms()) {
          terms.emplace_back(c, power("lambda", k.first) + power("T", gt.second)
                                    + d.generators[gt.first].name);
        }
      }
      out += "bracket: (" + d.generators[xy.first].name + ", "
             + d.generators[xy.second].name + ") = " + signed_sum(terms) + ";\n";
    }
    for (auto const& [xy, v] : d.products) {
      std::vector<std::pair<Rational, std::string>> terms;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) {
          terms.emplace_back(v[k], d.generators[k].name);
        }
      }
      out += "product: (" + d.generators[xy.first].name + ", "
             + d.generators[xy.second].name + ") = " + signed_sum(terms) + ";\n";
    }
    for (auto const& [w, rhs] : d.quotients) {
      out += "quotient: " + al.word_str(w) + " = " + module_str(rhs, al) + ";\n";
    }
    return out;
  }

  ConformalAlgebra conformal_of(Document const& d) {
    if (d.kind != DocKind::Conformal) {
      throw SemanticError("not a conformal algebra file");
    }
    ConformalAlgebra c(d.generators);
    std::map<std::pair<int, int>, Bracket> table;
    for (auto const& [xy, b] : d.brackets) {
      table[xy] += b;
    }
    for (auto const& [xy, b] : table) {
      c.set_bracket(xy.first, xy.second, b);
    }
    c.name = d.name;
    return c;
  }

  NovikovAlgebra novikov_of(Document const& d) {
    if (d.kind != DocKind::Novikov) {
      throw SemanticError("not a Novikov algebra file");
    }
    std::vector<std::string> names;
    for (auto const& g : d.generators) {
      names.push_back(g.name);
    }
    NovikovAlgebra v = NovikovAlgebra::zero(names);
    for (auto const& [xy, coeffs] : d.products) {
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        v.product[xy.first][xy.second][k] += coeffs[k];
      }
    }
    return v;
  }

  Document document_of(ConformalAlgebra const& c) {
    Document d;
    d.kind = DocKind::Conformal;
    d.name = c.name;
    d.generators = c.generators();
    int n = static_cast<int>(c.size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!c.bracket(x, y).is_zero()) {
          d.brackets.push_back({{x, y}, c.bracket(x, y)});
        }
      }
    }
    return d;
  }

  Document document_of(NovikovAlgebra const& v) {
    Document d;
    d.kind = DocKind::Novikov;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      Generator g;
      g.name = v.names[i];
      g.rank = static_cast<int>(i);
      d.generators.push_back(g);
    }
    int n = static_cast<int>(v.dim());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto const& row = v.product[i][j];
        if (std::any_of(row.begin(), row.end(), [](Rational const& r) { return !r.is_zero(); })) {
          d.products.push_back({{i, j}, row});
        }
      }
    }
    return d;
  }

  Document document_of(VertexPresentation const& p) {
    Document d;
    d.generators = p.generators;
    d.presentation = p;
    return d;
  }

  RuleSystem system_of(Document const& d) {
    RuleSystem sys;
    if (d.kind == DocKind::Novikov) {
      throw SemanticError("a Novikov table has no rule system; use the novikov command");
    }
    if (d.kind == DocKind::Conformal) {
      sys = envelope_pbw_system(conformal_of(d));
    } else if (d.system.empty()) {
      sys = coefficient_rules(d.presentation);
      sys.name = d.name.empty() ? "presentation" : d.name;
    } else {
      VertexPresentation ref = d.system == "weyl" ? weyl_presentation() : abelian_presentation();
      if (serialize(document_of(ref)) != serialize(document_of(d.presentation))) {
        throw SemanticError("system '" + d.system + "' does not match the presentation");
      }
      sys = d.system == "weyl" ? weyl_system() : abelian_system();
    }
    for (auto const& [w, rhs] : d.quotients) {
      quotient_identify(sys, w, rhs);
    }
    return sys;
  }

  GammaPoly parse_gamma(std::string_view s) {
    std::string t;
    for (char c : s) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        t += c;
      }
    }
    if (t.empty()) {
      throw ParseError("empty gamma-polynomial");
    }
    GammaPoly out;
    std::size_t i = 0;
    auto digits = [&] {
      std::size_t b = i;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        ++i;
      }
      return t.substr(b, i - b);
    };
    auto bad = [&] { throw ParseError("malformed gamma-polynomial '" + std::string(s) + "'"); };
    while (i < t.size()) {
      Rational sign(1);
      if (t[i] == '+' || t[i] == '-') {
        sign = Rational(t[i] == '-' ? -1 : 1);
        ++i;
      } else if (i != 0) {
        bad();
      }
      Rational c(1);
      bool has_coeff = false;
      std::string num = digits();
      if (!num.empty()) {
        has_coeff = true;
        std::string text = num;
        if (i < t.size() && t[i] == '/') {
          ++i;
          std::string den = digits();
          if (den.empty()) {
            bad();
          }
          text += "/" + den;
        }
        c = Rational::parse(text);
      }
      int deg = 0;
      if (has_coeff && i < t.size() && t[i] == '*') {
        ++i;
        if (i >= t.size() || t[i] != 'g') {
          bad();
        }
      }
      if (i < t.size() && t[i] == 'g') {
        ++i;
        deg = 1;
        if (i < t.size() && t[i] == '^') {
          ++i;
          std::string e = digits();
          if (e.empty()) {
            bad();
          }
          deg = std::stoi(e);
        }
      } else if (!has_coeff) {
        bad();
      }
      GammaPoly term(sign * c);
      for (int k = 0; k < deg; ++k) {
        term *= GammaPoly::gamma();
      }
      out += term;
    }
    return out;
  }

  std::string gamma_str(GammaPoly const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
      Rational c = p.coeff(k);
      if (c.is_zero()) {
        continue;
      }
      Rational mag = c.sign() < 0 ? -c : c;
      out += c.sign() < 0 ? "-" : (out.empty() ? "" : "+");
      if (k == 0) {
        out += mag.str();
        continue;
      }
      if (!mag.is_one()) {
        out += mag.str() + "*";
      }
      out += k == 1 ? "g" : "g^" + std::to_string(k);
    }
    return out;
  }

  LeftSymmetricAlgebra parse_lsym(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("basis") || !j.contains("mult")) {
      throw ParseError("left-symmetric algebra: expected an object with dim, basis and mult");
    }
    if (!j["dim"].is_number_unsigned()) {
      throw ParseError("left-symmetric algebra: dim must be a natural number");
    }
    std::size_t d = j["dim"].get<std::size_t>();
    std::vector<std::string> names;
    if (!j["basis"].is_array() || j["basis"].size() != d) {
      throw ParseError("left-symmetric algebra: basis must list dim names");
    }
    for (auto const& b : j["basis"]) {
      if (!b.is_string()) {
        throw ParseError("left-symmetric algebra: basis names must be strings");
      }
      names.push_back(b.get<std::string>());
    }
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size()) {
      throw ParseError("left-symmetric algebra: duplicate basis name");
    }
    LeftSymmetricAlgebra a = LeftSymmetricAlgebra::zero(names);
    auto const& m = j["mult"];
    auto shape = [&](nlohmann::json const& x) { return x.is_array() && x.size() == d; };
    if (!shape(m)) {
      throw ParseError("left-symmetric algebra: mult must be a dim x dim x dim array");
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (!shape(m[i])) {
        throw ParseError("left-symmetric algebra: mult must be a dim x dim x dim array");
      }
      for (std::size_t k = 0; k < d; ++k) {
        if (!shape(m[i][k])) {
          throw ParseError("left-symmetric algebra: mult must be a dim x dim x dim array");
        }
        for (std::size_t l = 0; l < d; ++l) {
          auto const& e = m[i][k][l];
          GammaPoly c;
          if (e.is_number_integer()) {
            c = GammaPoly(e.get<std::int64_t>());
          } else if (e.is_string()) {
            c = parse_gamma(e.get<std::string>());
          } else {
            throw ParseError("left-symmetric algebra: entries must be integers or strings");
          }
          a.set(static_cast<int>(i), static_cast<int>(k), static_cast<int>(l), c);
        }
      }
    }
    return a;
  }

  nlohmann::json lsym_json(LeftSymmetricAlgebra const& a) {
    nlohmann::json m = nlohmann::json::array();
    for (auto const& row : a.product) {
      nlohmann::json r = nlohmann::json::array();
      for (auto const& e : row) {
        nlohmann::json v = nlohmann::json::array();
        for (auto const& c : e) {
          v.push_back(gamma_str(c));
        }
        r.push_back(v);
      }
      m.push_back(r);
    }
    return {{"basis", a.names}, {"dim", a.dim()}, {"mult", m}};
  }

}  // namespace vgsb
