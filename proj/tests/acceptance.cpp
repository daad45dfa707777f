// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vgsb/basis.hpp"
#include "vgsb/builtins.hpp"
#include "vgsb/completion.hpp"
#include "vgsb/conformal.hpp"
#include "vgsb/envelope.hpp"
#include "vgsb/errors.hpp"
#include "vgsb/forks.hpp"
#include "vgsb/lsym.hpp"
#include "vgsb/presentation.hpp"
#include "vgsb/reducer.hpp"
#include "vgsb/vertex_ops.hpp"

using namespace vgsb;

namespace {

  struct Outcome {
    bool pass = true;
    std::string detail;
  };

  // Partitions of n into parts drawn from `parts`, each part in `colors` colors.
  std::int64_t count_partitions(int n, std::vector<int> const& parts, int colors = 1) {
    std::vector<std::int64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (int c = 0; c < colors; ++c) {
      for (int p : parts) {
        for (int k = p; k <= n; ++k) {
          ways[k] += ways[k - p];
        }
      }
    }
    return ways[n];
  }

  std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) {
      out.push_back(i);
    }
    return out;
  }

  Word mw(std::vector<std::pair<int, std::int64_t>> const& letters) {
    std::vector<Letter> l;
    for (auto [g, n] : letters) {
      l.push_back(g < 0 ? Letter::T() : Letter::mode_of(g, n));
    }
    return Word(l, true);
  }

  LinComb lc(std::vector<std::pair<int, std::int64_t>> const& letters, Rational c = Rational(1)) {
    return LinComb(mw(letters), c);
  }

  constexpr int T_ = -1;

  // --- C1 -----------------------------------------------------------------

  struct Family {
    std::string name;
    std::function<bool(Word const&)> match;
  };

  bool is_gen(Word const& h, std::size_t i, int g) {
    return i < h.size() && !h[i].is_T() && h[i].gen == g;
  }
  std::int64_t md(Word const& h, std::size_t i) {
    return h[i].mode;
  }

  std::vector<Family> weyl_fork_families() {
    int x = 0;
    int y = 1;
    std::vector<Family> f;
    auto two = [&](std::string name, int a, int b, bool tail,
                   std::function<bool(std::int64_t, std::int64_t)> cond) {
      f.push_back({name, [=](Word const& h) {
                     return (tail ? h.size() >= 2 : h.size() == 2) && is_gen(h, 0, a)
                            && is_gen(h, 1, b) && cond(md(h, 0), md(h, 1));
                   }});
    };
    auto three = [&](std::string name, int a, int b, int c, bool tail,
                     std::function<bool(std::int64_t, std::int64_t, std::int64_t)> cond) {
      f.push_back({name, [=](Word const& h) {
                     return (tail ? h.size() >= 3 : h.size() == 3) && is_gen(h, 0, a)
                            && is_gen(h, 1, b) && is_gen(h, 2, c)
                            && cond(md(h, 0), md(h, 1), md(h, 2));
                   }});
    };
    two("y(n)x(m)1 n>m>=0", y, x, false, [](auto n, auto m) { return n > m && m >= 0; });
    two("x(n)y(m)1 n>m+1>=1", x, y, false, [](auto n, auto m) { return n > m + 1 && m >= 0; });
    for (int g : {x, y}) {
      f.push_back({std::string(g == x ? "Tx(n)1" : "Ty(n)1") + " n>=0", [=](Word const& h) {
                     return h.size() == 2 && h[0].is_T() && is_gen(h, 1, g) && md(h, 1) >= 0;
                   }});
    }
    two("x(n)x(m)1 n>m>=0", x, x, false, [](auto n, auto m) { return n > m && m >= 0; });
    two("y(n)y(m)1 n>m>=0", y, y, false, [](auto n, auto m) { return n > m && m >= 0; });
    two("x(m+1)y(m)1 m>=0", x, y, false, [](auto a, auto m) { return a == m + 1 && m >= 0; });
    two("y(m)x(m)1 m>=0", y, x, false, [](auto m, auto b) { return b == m && m >= 0; });
    three("y(n)x(m+1)y(m)u n>=m+2", y, x, y, true,
          [](auto n, auto a, auto m) { return a == m + 1 && n >= m + 2; });
    three("x(n)y(m)x(m)u n>m+1", x, y, x, true,
          [](auto n, auto m, auto b) { return b == m && n > m + 1; });
    three("x(n+1)y(n)x(m)u n>=m+1", x, y, x, true,
          [](auto a, auto n, auto m) { return a == n + 1 && n >= m + 1; });
    three("x(n+1)y(n)y(m)u n>=m+1", x, y, y, true,
          [](auto a, auto n, auto m) { return a == n + 1 && n >= m + 1; });
    three("y(n)x(n)y(m)u n>m+1", y, x, y, true,
          [](auto n, auto b, auto m) { return b == n && n > m + 1; });
    three("y(n)x(n)x(m)u n>m", y, x, x, true,
          [](auto n, auto b, auto m) { return b == n && n > m; });
    three("x(n)x(m+1)y(m)1 n>m+1", x, x, y, false,
          [](auto n, auto a, auto m) { return a == m + 1 && n > m + 1; });
    three("y(n)y(m)x(m)u n>m", y, y, x, true,
          [](auto n, auto m, auto b) { return b == m && n > m; });
    f.push_back({"Tx(m+1)y(m)u", [=](Word const& h) {
                   return h.size() >= 3 && h[0].is_T() && is_gen(h, 1, x) && is_gen(h, 2, y)
                          && md(h, 1) == md(h, 2) + 1;
                 }});
    f.push_back({"Ty(m)x(m)u", [=](Word const& h) {
                   return h.size() >= 3 && h[0].is_T() && is_gen(h, 1, y) && is_gen(h, 2, x)
                          && md(h, 1) == md(h, 2);
                 }});
    return f;
  }

  Outcome c1() {
    RuleSystem sys = weyl_system();
    ForkOptions fo;
    fo.window = 6;
    fo.max_tail = 2;
    auto forks = enumerate_forks(sys, fo);
    ForkReport rep = check_forks(sys, forks, sys.fuel);
    std::vector<std::string> missing;
    for (auto const& fam : weyl_fork_families()) {
      bool hit = false;
      for (auto const& f : forks) {
        if (fam.match(f.h)) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        missing.push_back(fam.name);
      }
    }
    Outcome o;
    o.pass = !forks.empty() && rep.divergent.empty() && rep.exhausted.empty()
             && rep.converged == rep.total && missing.empty();
    std::ostringstream s;
    s << rep.total << " forks, " << rep.converged << " converge, "
      << weyl_fork_families().size() - missing.size() << "/" << weyl_fork_families().size()
      << " families covered";
    for (auto const& m : missing) {
      s << "; missing " << m;
    }
    o.detail = s.str();
    return o;
  }

  // --- C2 -----------------------------------------------------------------

  std::vector<LinComb> expected_completion_rules() {
    int x = 0;
    int y = 1;
    std::vector<LinComb> out;
    for (int n = 2; n <= 6; ++n) {
      out.push_back(lc({{x, 0}, {y, -n}}));
    }
    for (int n = -4; n <= 4; ++n) {
      for (int m = -4; m <= 4; ++m) {
        LinComb r = lc({{x, n}, {y, m}}) - lc({{y, m}, {x, n}});
        if (n + m == -1) {
          r -= LinComb::vacuum();
        }
        out.push_back(r);
      }
    }
    return out;
  }

  Outcome c2() {
    RuleSystem start = weyl_coefficient_system();
    CompletionOptions co;
    co.window = 6;
    co.max_length = 3;
    co.max_rounds = 20;
    CompletionResult res = complete(start, co);
    int before = 0;
    int after = 0;
    auto rules = expected_completion_rules();
    for (auto const& r : rules) {
      if (!reduce(r, start, start.fuel).is_zero()) {
        ++before;
      }
      if (!reduce(r, res.system, res.system.fuel).is_zero()) {
        ++after;
      }
    }
    Outcome o;
    o.pass = res.confluent && after == 0 && before > 0;
    o.detail = std::to_string(res.added.size()) + " rules added in "
               + std::to_string(res.rounds) + " rounds; expected relations not derivable: "
               + std::to_string(before) + "/" + std::to_string(rules.size()) + " before, "
               + std::to_string(after) + " after";
    return o;
  }

  // --- C3 -----------------------------------------------------------------

  Outcome c3() {
    RuleSystem sys = weyl_system();
    sys.fuel = 10000000;
    Outcome o;
    std::ostringstream s;
    for (int twice = 1; twice <= 6; ++twice) {
      Rational w(twice, 2);
      TerminalWords tw = enumerate_terminal_words(sys, w, 6, 10);
      bool shape = true;
      for (auto const& word : tw.words) {
        shape = shape && weyl_terminal(word);
      }
      // x(n), y(n) with n <= -1 have weight -n - 1/2: odd parts of 2w, two colors.
      std::vector<int> odd;
      for (int p = 1; p <= twice; p += 2) {
        odd.push_back(p);
      }
      std::int64_t pairs = count_partitions(twice, odd, 2);
      OracleOptions oo;
      oo.window = 10;
      std::int64_t oracle = dimension_oracle(sys, w, oo).dimension;
      auto count = static_cast<std::int64_t>(tw.words.size());
      bool ok = !tw.truncated && shape && count == pairs && oracle == pairs;
      o.pass = o.pass && ok;
      s << (twice > 1 ? ", " : "") << "w=" << w.str() << ": " << count << "/" << pairs << "/"
        << oracle;
    }
    o.detail = "terminal/pairs/oracle " + s.str();
    return o;
  }

  // --- C4 -----------------------------------------------------------------

  Outcome c4() {
    RuleSystem free1 = coefficient_rules(free_presentation(1, {{0}}));
    RuleSystem ab = abelian_system();
    Outcome o;
    std::ostringstream s;
    s << "free";
    for (int w = 0; w <= 6; ++w) {
      std::int64_t p = count_partitions(w, range(1, std::max(w, 1)));
      OracleOptions oo;
      oo.window = std::max(10, 2 * w + 2);
      auto count = static_cast<std::int64_t>(enumerate_terminal_words(free1, Rational(w), 8, 10).words.size());
      std::int64_t oracle = dimension_oracle(free1, Rational(w), oo).dimension;
      o.pass = o.pass && count == p && oracle == p;
      s << " " << count << (oracle == count ? "" : "!");
    }
    s << "; abelian";
    for (int w = 0; w <= 6; ++w) {
      OracleOptions oo;
      oo.window = std::max(10, 2 * w + 2);
      auto count = static_cast<std::int64_t>(enumerate_terminal_words(ab, Rational(w), 8, 10).words.size());
      std::int64_t oracle = dimension_oracle(ab, Rational(w), oo).dimension;
      o.pass = o.pass && count == 1 && oracle == 1;
      s << " " << count << (oracle == count ? "" : "!");
    }
    o.detail = s.str();
    return o;
  }

  // --- C5 -----------------------------------------------------------------

  RuleSystem unit_quotient(ConformalAlgebra const& c, int e, std::int64_t mode) {
    RuleSystem sys = envelope_pbw_system(c);
    quotient_identify(sys, mw({{e, mode}}), LinComb::vacuum());
    return sys;
  }

  Outcome c5() {
    Outcome o;
    std::ostringstream s;
    std::vector<std::int64_t> expected;
    for (int w = 0; w <= 8; ++w) {
      expected.push_back(count_partitions(w, range(2, std::max(w, 2))));
    }
    for (Rational c : {Rational(0), Rational(1, 2), Rational(1)}) {
      ConformalAlgebra vir = virasoro_c(c);
      RuleSystem env = envelope_pbw_system(vir);
      ForkOptions fo;
      fo.window = 6;
      fo.max_tail = 2;
      auto forks = enumerate_forks(env, fo);
      ForkReport rep = check_forks(env, forks, env.fuel);
      bool forks_ok = !forks.empty() && rep.converged == rep.total;

      RuleSystem q = unit_quotient(vir, 1, -1);
      q.fuel = 10000000;
      ForkOptions fq;
      fq.window = 4;
      fq.max_tail = 1;
      ForkReport repq = check_forks(q, enumerate_forks(q, fq), q.fuel);
      forks_ok = forks_ok && repq.converged == repq.total;

      Reducer red(q);
      bool v1 = red.reduce(lc({{0, 1}, {0, -1}})) == lc({{0, -1}}, Rational(2));
      bool v3 = red.reduce(lc({{0, 3}, {0, -1}})) == LinComb(Word::vacuum(), c / Rational(2));

      std::vector<std::int64_t> dims;
      bool oracle_ok = true;
      for (int w = 0; w <= 8; ++w) {
        dims.push_back(static_cast<std::int64_t>(
            enumerate_terminal_words(q, Rational(w), 8, 10).words.size()));
        if (w <= 6) {
          OracleOptions oo;
          oo.window = std::max(10, 2 * w + 2);
          oo.max_len = std::max(1, w / 2);
          oracle_ok = oracle_ok && dimension_oracle(q, Rational(w), oo).dimension == dims.back();
        }
      }
      bool ok = forks_ok && v1 && v3 && dims == expected && oracle_ok;
      o.pass = o.pass && ok;
      s << (s.tellp() > 0 ? "; " : "") << "c=" << c.str() << ": " << rep.total << "+"
        << repq.total << " forks " << (forks_ok ? "converge" : "DIVERGE") << ", products "
        << (v1 && v3 ? "ok" : "WRONG") << ", dims";
      for (auto d : dims) {
        s << " " << d;
      }
      s << (oracle_ok ? " (oracle ok)" : " (oracle MISMATCH)");
    }
    o.detail = s.str();
    return o;
  }

  // --- C6 -----------------------------------------------------------------

  Outcome c6() {
    Outcome o;
    std::ostringstream s;
    ConformalAlgebra h1 = heisenberg({Rational(0), Rational(1)});
    ConformalAlgebra h3 = heisenberg({Rational(0), Rational(0), Rational(0), Rational(1)});
    bool pass1 = check_conformal_axioms(h1).ok && check_conformal_axioms(h3).ok;
    bool rejected = false;
    try {
      heisenberg({Rational(0), Rational(0), Rational(1)});
    } catch (AxiomViolation const&) {
      rejected = true;
    }
    RuleSystem q = unit_quotient(h1, 1, -1);
    bool counts = true;
    s << "lambda, lambda^3 pass: " << (pass1 ? "yes" : "no") << "; lambda^2 rejected: "
      << (rejected ? "yes" : "no") << "; dims";
    for (int w = 0; w <= 6; ++w) {
      TerminalWords tw = enumerate_terminal_words(q, Rational(w), 8, 10);
      // v(n_1)...v(n_k)1 with n_1 <= ... <= n_k < 0
      for (auto const& word : tw.words) {
        for (std::size_t i = 0; i < word.size(); ++i) {
          counts = counts && is_gen(word, i, 0) && md(word, i) < 0
                   && (i == 0 || md(word, i - 1) <= md(word, i));
        }
      }
      auto n = static_cast<std::int64_t>(tw.words.size());
      counts = counts && !tw.truncated && n == count_partitions(w, range(1, std::max(w, 1)));
      s << " " << n;
    }
    o.pass = pass1 && rejected && counts;
    o.detail = s.str();
    return o;
  }

  // --- C7 -----------------------------------------------------------------

  Outcome c7() {
    RuleSystem sys = coefficient_rules(free_presentation(3, {{2, 2, 2}, {2, 2, 2}, {2, 2, 2}}));
    int x = 0;
    int y = 1;
    int z = 2;
    VertexOps ops(sys);
    LinComb lhs = ops.state_product(lc({{x, 1}, {y, -1}}), lc({{z, -1}}), -1);
    LinComb expect = lc({{x, 1}, {y, -1}, {z, -1}}) - lc({{y, -1}, {x, 1}, {z, -1}})
                     - lc({{x, 0}, {y, 0}, {z, -1}}) + lc({{y, 0}, {x, 0}, {z, -1}});
    LinComb rhs = reduce(expect, sys, sys.fuel);
    Outcome o;
    o.pass = lhs == rhs;
    o.detail = "state product = " + ops.str(lhs) + "; expected " + ops.str(rhs);
    return o;
  }

  // --- C8 -----------------------------------------------------------------

  // u e(-1)^l 1 with u as in the Weyl basis, modes in [min_mode, -1], length <= max_len.
  std::set<Word> comm_pair_words(int min_mode, int max_len) {
    std::set<Word> out;
    std::function<void(std::vector<Letter>&)> grow = [&](std::vector<Letter>& u) {
      for (std::size_t l = 0; u.size() + l <= static_cast<std::size_t>(max_len); ++l) {
        std::vector<Letter> w = u;
        w.insert(w.end(), l, Letter::mode_of(2, -1));
        out.insert(Word(w, true));
      }
      if (u.size() == static_cast<std::size_t>(max_len)) {
        return;
      }
      for (int g : {0, 1}) {
        for (int n = min_mode; n <= -1; ++n) {
          if (!u.empty()) {
            Letter const& p = u.back();
            if (n < p.mode) {
              continue;
            }
            if (p.gen == 1 && g == 0 && !(p.mode < n)) {
              continue;
            }
          }
          u.push_back(Letter::mode_of(g, n));
          grow(u);
          u.pop_back();
        }
      }
    };
    std::vector<Letter> u;
    grow(u);
    return out;
  }

  Outcome c8() {
    RuleSystem sys = unit_quotient(comm_pair(), 2, -2);
    sys.fuel = 10000000;
    TerminalWords box = enumerate_terminal_box(sys, -4, 4);
    std::set<Word> got(box.words.begin(), box.words.end());
    std::set<Word> want = comm_pair_words(-4, 4);
    std::size_t small = comm_pair_words(-3, 3).size();
    std::int64_t oracle = dimension_oracle_box(sys, -3, 3, 2, 6).dimension;
    std::size_t engine_small = enumerate_terminal_box(sys, -3, 3).words.size();

    VertexOps ops(sys);
    LinComb x = ops.reduce(generator_state(sys, 0));
    LinComb y = ops.reduce(generator_state(sys, 1));
    LinComb assoc = ops.dot(ops.dot(x, x), y) - ops.dot(x, ops.dot(x, y));
    LinComb expect = lc({{0, -2}, {2, -1}}, Rational(2));

    Outcome o;
    o.pass = got == want && oracle == static_cast<std::int64_t>(small)
             && engine_small == small && assoc == expect;
    o.detail = "box(-4,4): " + std::to_string(got.size()) + " terminal words, "
               + std::to_string(want.size()) + " from the basis formula"
               + (got == want ? " (identical)" : " (DIFFER)") + "; box(-3,3) oracle "
               + std::to_string(oracle) + " vs " + std::to_string(small)
               + "; associator = " + ops.str(assoc);
    return o;
  }

  // --- C9 -----------------------------------------------------------------

  Outcome c9() {
    auto t0 = std::chrono::steady_clock::now();
    bool novikov_ok = true;
    for (auto const& v : {virasoro_novikov(), schrodinger_virasoro_novikov(),
                          NovikovAlgebra::zero({"v"})}) {
      novikov_ok = novikov_ok && check_novikov(v).empty()
                   && check_conformal_axioms(quadratic_conformal(v)).ok;
    }
    Generator g;
    g.name = "v";
    g.weight = Rational(2);
    ConformalAlgebra bad({g});
    Bracket b;
    b.add(0, 0, TElement::gen(0, Rational(1), 1));
    b.add(1, 0, TElement::gen(0, Rational(3)));
    bad.set_bracket(0, 0, b);
    AxiomReport rep = check_conformal_axioms(bad);
    bool skew_fails = !rep.ok && !rep.violations.empty()
                      && rep.violations.front().rfind("skew", 0) == 0;
    bool vir_ok = true;
    for (Rational c : {Rational(0), Rational(1, 2), Rational(1), Rational(-22, 5)}) {
      vir_ok = vir_ok && check_conformal_axioms(virasoro_c(c)).ok;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    o.pass = novikov_ok && skew_fails && vir_ok && secs < 5.0;
    o.detail = std::string("quadratic algebras ") + (novikov_ok ? "pass" : "FAIL")
               + "; (T+3lambda)v " + (skew_fails ? "fails skew" : "NOT rejected") + "; Vir_c "
               + (vir_ok ? "passes" : "FAILS") + "; " + std::to_string(secs).substr(0, 4) + " s";
    return o;
  }

  // --- C10 ----------------------------------------------------------------

  Outcome c10() {
    LeftSymmetricAlgebra a = gamma_family();
    bool lsym = lsym_check(a).empty();
    auto cls = lcs_class(a);
    LsElement x = a.basis(0);
    LsElement obs = embedding_obstruction(a, x, x, x);
    bool obs_ok = obs == LsElement{GammaPoly(0), GammaPoly(0), GammaPoly(-3)};
    std::ostringstream s;
    s << "left-symmetric " << (lsym ? "yes" : "no") << ", class "
      << (cls ? std::to_string(*cls) : "none") << ", obstruction(x,x,x) = " << a.str(obs)
      << "; cubic products vanish at gamma";
    bool cubic = true;
    VA1Options opt;
    opt.fuel = 10000;
    for (Rational gm : {Rational(0), Rational(1, 3), Rational(1), Rational(-2), Rational(5, 7)}) {
      LeftSymmetricAlgebra sp = a.specialize(gm);
      RuleSystem sys = va1_system(sp, opt);
      int zero = 0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          for (int k = 0; k < 3; ++k) {
            LinComb e = lc({{T_, 0}, {T_, 0}, {i, 0}, {j, 0}, {k, -1}});
            LinComb nf = (i == 0 && j == 1 && k == 2) ? reduce_in_VA1(sp, e, opt)
                                                       : Reducer(sys, opt.fuel).reduce(e);
            zero += nf.is_zero() ? 1 : 0;
          }
        }
      }
      cubic = cubic && zero == 27;
      s << " " << gm.str() << ":" << zero << "/27";
    }
    Outcome o;
    o.pass = lsym && cls == 2 && obs_ok && cubic;
    o.detail = s.str();
    return o;
  }

  // --- C11 ----------------------------------------------------------------

  Outcome c11() {
    auto t0 = std::chrono::steady_clock::now();
    IdentityOptions opt;
    opt.samples = 50;
    opt.seed = 1;
    opt.max_weight = Rational(3);
    IdentityReport weyl = check_vertex_identities(weyl_system(), opt);
    RuleSystem vir = unit_quotient(virasoro_c(Rational(1, 2)), 1, -1);
    vir.fuel = 10000000;
    IdentityReport v = check_vertex_identities(vir, opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    o.pass = weyl.ok && v.ok && secs < 120.0;
    o.detail = "Weyl " + std::to_string(weyl.pairs) + " pairs/" + std::to_string(weyl.triples)
               + " triples " + (weyl.ok ? "ok" : "FAIL") + ", Vir_1/2 "
               + std::to_string(v.pairs) + "/" + std::to_string(v.triples) + " "
               + (v.ok ? "ok" : "FAIL") + "; " + std::to_string(secs).substr(0, 5) + " s";
    if (!weyl.ok) {
      o.detail += "; " + weyl.failures.front();
    }
    if (!v.ok) {
      o.detail += "; " + v.failures.front();
    }
    return o;
  }

}  // namespace

int main() {
  struct Criterion {
    char const* id;
    char const* title;
    Outcome (*run)();
  };
  Criterion all[] = {
      {"C1", "Weyl GSB confluence", c1},
      {"C2", "Weyl completion", c2},
      {"C3", "Weyl basis", c3},
      {"C4", "free and abelian dimensions", c4},
      {"C5", "Virasoro PBW", c5},
      {"C6", "Heisenberg", c6},
      {"C7", "worked product", c7},
      {"C8", "commutative pair", c8},
      {"C9", "conformal axiom suite", c9},
      {"C10", "left-symmetric suite", c10},
      {"C11", "vertex identities", c11},
  };
  int failed = 0;
  for (auto const& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += o.pass ? 0 : 1;
    std::ostringstream t;
    t.precision(1);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << o.detail
              << " [" << t.str() << " s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
