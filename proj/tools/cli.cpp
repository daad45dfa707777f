#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vgsb/basis.hpp"
#include "vgsb/builtins.hpp"
#include "vgsb/completion.hpp"
#include "vgsb/conformal.hpp"
#include "vgsb/dsl.hpp"
#include "vgsb/envelope.hpp"
#include "vgsb/errors.hpp"
#include "vgsb/forks.hpp"
#include "vgsb/lsym.hpp"
#include "vgsb/reducer.hpp"
#include "vgsb/vertex_ops.hpp"

namespace vgsb::cli {

  namespace {

    using json = nlohmann::json;

    struct Result {
      json inputs = json::object();
      json result = json::object();
      json diagnostics = json::object();
      std::string text;
      int code = kOk;
    };

    std::string read_source(std::string const& file, std::istream& in) {
      std::stringstream ss;
      if (file == "-") {
        ss << in.rdbuf();
        return ss.str();
      }
      std::ifstream f(file);
      if (!f) {
        throw ParseError("cannot read '" + file + "'");
      }
      ss << f.rdbuf();
      return ss.str();
    }

    std::string pair_key(std::vector<Generator> const& g, int x, int y) {
      return "(" + g[x].name + "," + g[y].name + ")";
    }

    std::vector<Rational> rational_list(std::string const& s) {
      std::vector<Rational> out;
      std::stringstream ss(s);
      std::string part;
      while (std::getline(ss, part, ',')) {
        out.push_back(Rational::parse(part));
      }
      if (out.empty()) {
        throw ParseError("empty list '" + s + "'");
      }
      return out;
    }

    std::string ls_str(LeftSymmetricAlgebra const& a, LsElement const& e) {
      std::string out;
      for (std::size_t k = 0; k < e.size(); ++k) {
        GammaPoly const& c = e[k];
        if (c.is_zero()) {
          continue;
        }
        if (c.degree() > 0) {
          out += (out.empty() ? "(" : " + (") + gamma_str(c) + ") " + a.names[k];
          continue;
        }
        Rational v = c.coeff(0);
        Rational mag = v.sign() < 0 ? -v : v;
        out += v.sign() < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
        out += (mag.is_one() ? "" : mag.str() + " ") + a.names[k];
      }
      return out.empty() ? "0" : out;
    }

    // check-conformal
    Result check_conformal(Document const& d) {
      Result r;
      ConformalAlgebra c = conformal_of(d);
      AxiomReport rep = check_conformal_axioms(c);
      auto const& g = c.generators();
      int n = static_cast<int>(c.size());
      json brackets = json::object();
      json loc = json::object();
      std::ostringstream t;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          std::string key = pair_key(g, x, y);
          brackets[key] = c.bracket_str(c.bracket(x, y));
          loc[key] = c.locality(x, y);
          t << key << "  locality " << c.locality(x, y) << "  " << c.bracket_str(c.bracket(x, y))
            << "\n";
        }
      }
      r.result = {{"ok", rep.ok}, {"violations", rep.violations}, {"brackets", brackets},
                  {"locality", loc}};
      t << (rep.ok ? "axioms: ok" : "axioms: violated") << "\n";
      for (auto const& v : rep.violations) {
        t << "  " << v << "\n";
      }
      r.text = t.str();
      r.code = rep.ok ? kOk : kViolation;
      return r;
    }

    // novikov
    Result novikov(Document const& d, bool emit) {
      Result r;
      NovikovAlgebra v = novikov_of(d);
      auto fails = check_novikov(v);
      std::ostringstream t;
      json f = json::array();
      for (auto const& x : fails) {
        f.push_back({{"identity", x.identity},
                     {"triple", {v.names[x.u], v.names[x.v], v.names[x.w]}}});
        t << x.identity << " fails at (" << v.names[x.u] << "," << v.names[x.v] << ","
          << v.names[x.w] << ")\n";
      }
      r.result = {{"ok", fails.empty()}, {"failures", f}};
      if (!fails.empty()) {
        r.code = kViolation;
        t << "novikov: violated\n";
        r.text = t.str();
        return r;
      }
      ConformalAlgebra q = quadratic_conformal(v);
      json brackets = json::object();
      int n = static_cast<int>(q.size());
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          std::string key = pair_key(q.generators(), x, y);
          brackets[key] = q.bracket_str(q.bracket(x, y));
          t << key << "  " << q.bracket_str(q.bracket(x, y)) << "\n";
        }
      }
      r.result["brackets"] = brackets;
      r.result["emitted"] = emit ? serialize(document_of(q)) : "";
      t << "novikov: ok\n";
      r.text = emit ? serialize(document_of(q)) : t.str();
      return r;
    }

    // nf
    Result normal_form(Document const& d, std::string const& expr, std::int64_t fuel) {
      Result r;
      RuleSystem sys = system_of(d);
      LinComb e = parse_expr(expr, sys.alphabet());
      Reducer red(sys, fuel > 0 ? fuel : sys.fuel);
      LinComb nf = red.reduce(e);
      Alphabet const& al = sys.alphabet();
      r.result = {{"expr", e.str(al)}, {"normal_form", nf.str(al)}};
      r.diagnostics = {{"steps", red.steps()}, {"rules", sys.rules().size()}};
      r.text = e.str(al) + "\n  ->* " + nf.str(al) + "\n";
      return r;
    }

    // forks
    Result forks(Document const& d, int window, int tails, std::int64_t fuel) {
      Result r;
      RuleSystem sys = system_of(d);
      ForkOptions fo;
      fo.window = window;
      fo.max_tail = tails;
      auto list = enumerate_forks(sys, fo);
      ForkReport rep = check_forks(sys, list, fuel > 0 ? fuel : sys.fuel, 1);
      Alphabet const& al = sys.alphabet();
      json kinds = json::object();
      std::ostringstream t;
      t << "forks: " << rep.total << " (";
      for (int k = 0; k < 5; ++k) {
        char const* name = fork_kind_name(static_cast<ForkKind>(k));
        kinds[name] = rep.by_kind[k];
        t << (k ? ", " : "") << name << " " << rep.by_kind[k];
      }
      t << ")\nconverged: " << rep.converged << "\n";
      json div = json::array();
      for (auto const& [f, diff] : rep.divergent) {
        div.push_back({{"kind", fork_kind_name(f.kind)}, {"word", al.word_str(f.h)},
                       {"difference", diff.str(al)}});
        t << "diverges " << fork_kind_name(f.kind) << " " << al.word_str(f.h) << ": "
          << diff.str(al) << "\n";
      }
      json ex = json::array();
      for (auto const& [f, why] : rep.exhausted) {
        ex.push_back({{"kind", fork_kind_name(f.kind)}, {"word", al.word_str(f.h)},
                      {"reason", why}});
        t << "exhausted " << al.word_str(f.h) << ": " << why << "\n";
      }
      r.result = {{"total", rep.total}, {"converged", rep.converged}, {"by_kind", kinds},
                  {"divergent", div}, {"exhausted", ex}};
      r.diagnostics = {{"window", window}, {"tails", tails}, {"rules", sys.rules().size()}};
      r.code = !rep.divergent.empty() ? kViolation : !rep.exhausted.empty() ? kLimit : kOk;
      r.text = t.str();
      return r;
    }

    // complete
    Result completion(Document const& d, CompletionOptions const& co) {
      Result r;
      RuleSystem sys = system_of(d);
      CompletionResult res = complete(sys, co);
      Alphabet const& al = res.system.alphabet();
      json added = json::array();
      std::ostringstream t;
      for (int id : res.added) {
        std::string s = rule_str(res.system.rule(id), al);
        added.push_back(s);
        t << "  " << s << "\n";
      }
      r.result = {{"confluent", res.confluent}, {"rounds", res.rounds},
                  {"forks_checked", res.forks_checked}, {"added", added}};
      r.diagnostics = {{"rules_added", res.added.size()}, {"window", co.window},
                       {"max_length", co.max_length}, {"fuel", co.fuel}};
      r.text = std::string(res.confluent ? "confluent" : "not confluent") + " after "
               + std::to_string(res.rounds) + " rounds, " + std::to_string(res.added.size())
               + " rules added\n" + t.str();
      r.code = res.confluent ? kOk : kLimit;
      return r;
    }

    // basis
    Result basis(Document const& d, Rational const& w, int max_len, int window) {
      Result r;
      RuleSystem sys = system_of(d);
      TerminalWords tw = enumerate_terminal_words(sys, w, max_len, window);
      Alphabet const& al = sys.alphabet();
      json words = json::array();
      std::ostringstream t;
      t << "weight " << w.str() << ": " << tw.words.size() << " words"
        << (tw.truncated ? " (truncated by --max-len)" : "") << "\n";
      for (auto const& x : tw.words) {
        words.push_back(al.word_str(x));
        t << "  " << al.word_str(x) << "\n";
      }
      r.result = {{"weight", w.str()}, {"count", tw.words.size()}, {"words", words},
                  {"truncated", tw.truncated}};
      r.diagnostics = {{"window", window}, {"max_len", max_len}};
      r.code = tw.truncated ? kLimit : kOk;
      r.text = t.str();
      return r;
    }

    // dim
    Result dim(Document const& d, Rational const& w, int window, int max_len) {
      Result r;
      RuleSystem sys = system_of(d);
      OracleOptions oo;
      oo.window = window;
      oo.max_len = max_len;
      OracleResult o = dimension_oracle(sys, w, oo);
      TerminalWords tw = enumerate_terminal_words(sys, w, max_len > 0 ? max_len : 12, window);
      auto count = static_cast<std::int64_t>(tw.words.size());
      bool agree = count == o.dimension;
      r.result = {{"weight", w.str()}, {"oracle", o.dimension}, {"terminal", count},
                  {"agree", agree}};
      r.diagnostics = {{"window", window}, {"relations", o.relations},
                       {"ambient_words", o.ambient_words}, {"target_words", o.target_words},
                       {"truncated", tw.truncated}};
      r.text = "weight " + w.str() + ": oracle " + std::to_string(o.dimension) + ", terminal "
               + std::to_string(count) + (agree ? " (agree)" : " (DISAGREE)") + "\n";
      r.code = tw.truncated ? kLimit : agree ? kOk : kViolation;
      return r;
    }

    struct BuiltinArgs {
      std::string name;
      std::string file;
      std::optional<std::string> c;
      std::optional<std::string> f;
      std::optional<std::string> gamma;
      int k = 1;
      std::string N = "0";
    };

    std::vector<std::vector<int>> locality_matrix(std::string const& s, int k) {
      std::vector<std::vector<int>> rows;
      std::stringstream ss(s);
      std::string row;
      while (std::getline(ss, row, ';')) {
        std::vector<int> r;
        for (auto const& x : rational_list(row)) {
          if (!x.is_integer() || x.sign() < 0) {
            throw ParseError("locality entries must be natural numbers");
          }
          r.push_back(static_cast<int>(x.to_int()));
        }
        rows.push_back(r);
      }
      if (rows.size() == 1 && rows[0].size() == 1) {
        return std::vector<std::vector<int>>(k, std::vector<int>(k, rows[0][0]));
      }
      if (rows.size() != static_cast<std::size_t>(k)) {
        throw ParseError("locality matrix must be k x k");
      }
      for (auto const& r : rows) {
        if (r.size() != static_cast<std::size_t>(k)) {
          throw ParseError("locality matrix must be k x k");
        }
      }
      return rows;
    }

    Document with_unit(ConformalAlgebra const& c, std::int64_t mode) {
      Document d = document_of(c);
      int e = c.alphabet().index("e");
      d.quotients.push_back({Word({Letter::mode_of(e, mode)}, true), LinComb::vacuum()});
      return d;
    }

    LeftSymmetricAlgebra load_lsym(std::string const& file, std::istream& in,
                                   std::optional<std::string> const& gamma) {
      json j;
      try {
        j = json::parse(read_source(file, in));
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
      LeftSymmetricAlgebra a = parse_lsym(j);
      return gamma ? a.specialize(Rational::parse(*gamma)) : a;
    }

    // builtin
    Result builtin(BuiltinArgs const& b, std::istream& in) {
      Result r;
      std::string const& n = b.name;
      if (n == "gamma-family") {
        LeftSymmetricAlgebra a = gamma_family();
        if (b.gamma) {
          a = a.specialize(Rational::parse(*b.gamma));
        }
        r.result = {{"algebra", lsym_json(a)}};
        r.text = lsym_json(a).dump(2) + "\n";
        return r;
      }
      Document d;
      if (n == "weyl") {
        d = document_of(weyl_presentation());
        d.system = "weyl";
      } else if (n == "weyl-coefficient") {
        d = document_of(weyl_presentation());
      } else if (n == "abelian") {
        d = document_of(abelian_presentation());
        d.system = "abelian";
      } else if (n == "free") {
        if (b.k < 1) {
          throw ParseError("free: --k must be positive");
        }
        d = document_of(free_presentation(b.k, locality_matrix(b.N, b.k)));
      } else if (n == "virasoro") {
        d = b.c ? with_unit(virasoro_c(Rational::parse(*b.c)), -1) : document_of(virasoro());
      } else if (n == "heisenberg") {
        d = with_unit(heisenberg(rational_list(b.f.value_or("0,1"))), -1);
      } else if (n == "schrodinger-virasoro") {
        d = document_of(schrodinger_virasoro());
      } else if (n == "weyl-pair") {
        d = with_unit(weyl_pair(), -1);
      } else if (n == "comm-pair") {
        d = with_unit(comm_pair(), -2);
      } else if (n == "novikov-virasoro") {
        d = document_of(virasoro_novikov());
      } else if (n == "novikov-schrodinger-virasoro") {
        d = document_of(schrodinger_virasoro_novikov());
      } else if (n == "novikov-zero") {
        d = document_of(NovikovAlgebra::zero({"v"}));
      } else if (n == "vA1") {
        if (b.file.empty()) {
          throw ParseError("vA1 needs a structure-constant file");
        }
        d = document_of(va1_presentation(load_lsym(b.file, in, b.gamma)));
        d.name = "vA1";
      } else {
        throw ParseError("unknown builtin '" + n + "'");
      }
      r.text = serialize(d);
      r.result = {{"text", r.text}};
      return r;
    }

    struct LsymArgs {
      std::string file;
      std::optional<std::string> triple;
      std::optional<std::string> gamma;
      std::optional<std::string> reduce;
      std::int64_t fuel = 1000000;
    };

    // lsym
    Result lsym(LsymArgs const& a, std::istream& in) {
      Result r;
      LeftSymmetricAlgebra alg = load_lsym(a.file, in, a.gamma);
      std::ostringstream t;
      auto fails = lsym_check(alg);
      json f = json::array();
      for (auto const& x : fails) {
        f.push_back({{"triple", {alg.names[x.i], alg.names[x.j], alg.names[x.k]}},
                     {"defect", ls_str(alg, x.defect)}});
        t << "left-symmetry fails at (" << alg.names[x.i] << "," << alg.names[x.j] << ","
          << alg.names[x.k] << "): " << ls_str(alg, x.defect) << "\n";
      }
      auto cls = lcs_class(alg);
      r.result = {{"left_symmetric", fails.empty()}, {"failures", f},
                  {"class", cls ? json(*cls) : json(nullptr)}};
      t << "left-symmetric: " << (fails.empty() ? "yes" : "no") << "\n"
        << "commutator class: " << (cls ? std::to_string(*cls) : "not nilpotent") << "\n";
      r.code = fails.empty() ? kOk : kViolation;
      if (a.triple) {
        std::vector<std::string> names;
        std::stringstream ss(*a.triple);
        std::string part;
        while (std::getline(ss, part, ',')) {
          names.push_back(part);
        }
        if (names.size() != 3) {
          throw ParseError("--triple needs three basis names a,b,c");
        }
        LsElement o = embedding_obstruction(alg, alg.basis(alg.index(names[0])),
                                            alg.basis(alg.index(names[1])),
                                            alg.basis(alg.index(names[2])));
        std::string s = ls_str(alg, o);
        r.result["obstruction"] = s;
        t << "obstruction (" << *a.triple << "): " << s << "\n";
        if (s != "0") {
          r.code = kViolation;
        }
      }
      if (a.reduce) {
        VA1Options opt;
        opt.fuel = a.fuel;
        LinComb e = parse_expr(*a.reduce, va1_presentation(alg).alphabet());
        LinComb nf = reduce_in_VA1(alg, e, opt);
        Alphabet al = va1_presentation(alg).alphabet();
        r.result["normal_form"] = nf.str(al);
        t << e.str(al) << "\n  ->* " << nf.str(al) << "\n";
        r.diagnostics["fuel"] = a.fuel;
      }
      r.text = t.str();
      return r;
    }

    // identities
    Result identities(Document const& d, IdentityOptions const& opt) {
      Result r;
      RuleSystem sys = system_of(d);
      IdentityReport rep = check_vertex_identities(sys, opt);
      r.result = {{"ok", rep.ok}, {"pairs", rep.pairs}, {"triples", rep.triples},
                  {"failures", rep.failures}};
      std::ostringstream t;
      t << "pairs " << rep.pairs << ", triples " << rep.triples << ": "
        << (rep.ok ? "ok" : "FAILED") << "\n";
      for (auto const& f : rep.failures) {
        t << "  " << f << "\n";
      }
      r.text = t.str();
      r.code = rep.ok ? kOk : kViolation;
      return r;
    }

  }  // namespace

  int run_command(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
                  std::ostream& err) {
    CLI::App app{"vgsb: Groebner-Shirshov bases for vertex algebras", "vgsb"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON envelope on stdout");

    std::string file = "-";
    auto with_file = [&](CLI::App* c) {
      c->add_option("FILE", file, "input file, - for stdin");
      return c;
    };
    std::string expr;
    std::int64_t fuel = 0;
    int window = 6;
    int tails = 2;
    int rounds = 12;
    int max_len = 8;
    std::string weight;
    bool emit = false;
    int samples = 50;
    std::uint64_t seed = 1;
    std::string max_weight = "3";

    auto* c_conf = with_file(app.add_subcommand("check-conformal", "conformal axioms"));
    auto* c_nov = with_file(app.add_subcommand("novikov", "Novikov identities"));
    c_nov->add_flag("--emit", emit, "print the quadratic conformal algebra");
    auto* c_nf = with_file(app.add_subcommand("nf", "normal form"));
    c_nf->add_option("--expr", expr)->required();
    c_nf->add_option("--fuel", fuel);
    auto* c_forks = with_file(app.add_subcommand("forks", "check all forks"));
    c_forks->add_option("--window", window);
    c_forks->add_option("--tails", tails);
    c_forks->add_option("--fuel", fuel);
    CompletionOptions co;
    co.max_length = 3;
    auto* c_comp = with_file(app.add_subcommand("complete", "bounded completion"));
    c_comp->add_option("--window", co.window);
    c_comp->add_option("--rounds", co.max_rounds);
    c_comp->add_option("--fuel", co.fuel);
    c_comp->add_option("--max-len", co.max_length);
    c_comp->add_option("--tails", co.max_tail);
    int basis_window = 10;
    auto* c_basis = with_file(app.add_subcommand("basis", "terminal words of a weight"));
    c_basis->add_option("--weight", weight)->required();
    c_basis->add_option("--max-len", max_len);
    c_basis->add_option("--window", basis_window);
    int dim_len = 0;
    auto* c_dim = with_file(app.add_subcommand("dim", "dimension oracle"));
    c_dim->add_option("--weight", weight)->required();
    c_dim->add_option("--window", basis_window)->required();
    c_dim->add_option("--max-len", dim_len);
    BuiltinArgs bargs;
    auto* c_bi = app.add_subcommand("builtin", "print a built-in presentation");
    c_bi->add_option("NAME", bargs.name)->required();
    c_bi->add_option("FILE", bargs.file);
    c_bi->add_option("--c", bargs.c);
    c_bi->add_option("--f", bargs.f, "cocycle coefficients of lambda^0, lambda^1, ...");
    c_bi->add_option("--gamma", bargs.gamma);
    c_bi->add_option("--k", bargs.k);
    c_bi->add_option("--N", bargs.N, "n, or rows a,b;c,d");
    LsymArgs largs;
    auto* c_ls = app.add_subcommand("lsym", "left-symmetric algebra checks");
    c_ls->add_option("FILE", largs.file)->required();
    c_ls->add_option("--triple", largs.triple);
    c_ls->add_option("--gamma", largs.gamma);
    c_ls->add_option("--reduce", largs.reduce, "reduce in V(A,1)");
    c_ls->add_option("--fuel", largs.fuel);
    auto* c_id = with_file(app.add_subcommand("identities", "vertex identity checks"));
    c_id->add_option("--samples", samples);
    c_id->add_option("--seed", seed);
    c_id->add_option("--max-weight", max_weight);

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int c = app.exit(e, out, err);
      return c == 0 ? kOk : kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    Result r;
    r.inputs["file"] = file;
    int code = kOk;
    std::string error;
    try {
      auto doc = [&] { return parse_document(read_source(file, in)); };
      if (sub == c_conf) {
        r = check_conformal(doc());
      } else if (sub == c_nov) {
        r = novikov(doc(), emit);
        r.inputs["emit"] = emit;
      } else if (sub == c_nf) {
        r = normal_form(doc(), expr, fuel);
        r.inputs["expr"] = expr;
      } else if (sub == c_forks) {
        r = forks(doc(), window, tails, fuel);
        r.inputs["window"] = window;
        r.inputs["tails"] = tails;
      } else if (sub == c_comp) {
        r = completion(doc(), co);
        r.inputs["window"] = co.window;
        r.inputs["rounds"] = co.max_rounds;
      } else if (sub == c_basis) {
        r = basis(doc(), Rational::parse(weight), max_len, basis_window);
        r.inputs["weight"] = weight;
      } else if (sub == c_dim) {
        r = dim(doc(), Rational::parse(weight), basis_window, dim_len);
        r.inputs["weight"] = weight;
      } else if (sub == c_bi) {
        r = builtin(bargs, in);
        r.inputs = {{"name", bargs.name}};
        if (bargs.c) {
          r.inputs["c"] = *bargs.c;
        }
        if (bargs.f) {
          r.inputs["f"] = *bargs.f;
        }
        if (bargs.gamma) {
          r.inputs["gamma"] = *bargs.gamma;
        }
        if (!bargs.file.empty()) {
          r.inputs["file"] = bargs.file;
        }
      } else if (sub == c_ls) {
        r = lsym(largs, in);
        r.inputs = {{"file", largs.file}};
        if (largs.triple) {
          r.inputs["triple"] = *largs.triple;
        }
        if (largs.gamma) {
          r.inputs["gamma"] = *largs.gamma;
        }
        if (largs.reduce) {
          r.inputs["reduce"] = *largs.reduce;
        }
      } else if (sub == c_id) {
        IdentityOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        opt.max_weight = Rational::parse(max_weight);
        r = identities(doc(), opt);
        r.inputs["samples"] = samples;
        r.inputs["seed"] = seed;
        r.inputs["max_weight"] = max_weight;
      }
      if (r.inputs.find("file") == r.inputs.end() && sub != c_bi) {
        r.inputs["file"] = file;
      }
      code = r.code;
    } catch (ParseError const& e) {
      code = kUsage;
      error = e.what();
    } catch (SemanticError const& e) {
      code = kUsage;
      error = e.what();
    } catch (LimitError const& e) {
      code = kLimit;
      error = e.what();
    } catch (ViolationError const& e) {
      code = kViolation;
      error = e.what();
    } catch (Error const& e) {
      code = kUsage;
      error = e.what();
    }

    if (!error.empty()) {
      err << "vgsb " << sub->get_name() << ": " << error << "\n";
      r.result = nullptr;
      r.diagnostics["error"] = error;
    }
    if (as_json) {
      r.diagnostics["exit"] = code;
      json env = {{"command", sub->get_name()}, {"inputs", r.inputs}, {"result", r.result},
                  {"diagnostics", r.diagnostics}};
      out << env.dump(2) << "\n";
    } else if (error.empty()) {
      out << r.text;
    }
    return code;
  }

}  // namespace vgsb::cli
