#include "vgsb/forks.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

namespace vgsb {

  char const* fork_kind_name(ForkKind k) {
    switch (k) {
      case ForkKind::C1: return "C1";
      case ForkKind::C2: return "C2";
      case ForkKind::CM1: return "CM1";
      case ForkKind::CM2: return "CM2";
      case ForkKind::CM3: return "CM3";
    }
    return "?";
  }

  namespace {

    std::vector<int> lhs_vars(SchematicRule const& r) {
      std::vector<int> vars;
      for (auto const& p : r.lhs) {
        if (p.is_T) {
          continue;
        }
        for (std::size_t v = 0; v < p.mode.coef.size(); ++v) {
          if (p.mode.coef[v] != 0
              && std::find(vars.begin(), vars.end(), static_cast<int>(v)) == vars.end()) {
            vars.push_back(static_cast<int>(v));
          }
        }
      }
      return vars;
    }

    // Calls f for every assignment of the unbound `vars` in [-w, w].
    void for_each_assignment(std::vector<int> const& vars, std::size_t i, int w,
                             Subst& s, std::function<void(Subst&)> const& f) {
      while (i < vars.size() && s.bound[vars[i]]) {
        ++i;
      }
      if (i == vars.size()) {
        f(s);
        return;
      }
      for (int x = -w; x <= w; ++x) {
        s.set(vars[i], x);
        for_each_assignment(vars, i + 1, w, s, f);
      }
      s.unset(vars[i]);
    }

    bool guards_hold(SchematicRule const& r, Subst const& s) {
      for (auto const& g : r.guards) {
        if (!g.holds(s)) {
          return false;
        }
      }
      return true;
    }

    std::vector<std::vector<Letter>> tail_words(Alphabet const& a, int window,
                                                int max_tail) {
      std::vector<Letter> letters;
      for (std::size_t g = 0; g < a.size(); ++g) {
        for (int n = -window; n <= -1; ++n) {
          letters.push_back(Letter::mode_of(static_cast<int>(g), n));
        }
      }
      std::vector<std::vector<Letter>> out{{}};
      std::size_t begin = 0;
      for (int len = 1; len <= max_tail; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (auto const& l : letters) {
            auto t = out[i];
            t.push_back(l);
            out.push_back(std::move(t));
          }
        }
        begin = end;
      }
      return out;
    }

    ForkKind classify(SchematicRule const& ra, SchematicRule const& rb,
                      std::size_t d) {
      std::size_t la = ra.length();
      std::size_t lb = rb.length();
      bool contained = d + lb <= la || (d == 0 && lb >= la);
      bool ma = ra.kind == RuleKind::Module;
      bool mb = rb.kind == RuleKind::Module;
      if (!ma && !mb) {
        return contained ? ForkKind::C1 : ForkKind::C2;
      }
      if (ma && mb) {
        return ForkKind::CM3;
      }
      bool alg_inside = ma ? d + lb <= la : (d == 0 && lb >= la);
      return alg_inside ? ForkKind::CM1 : ForkKind::CM2;
    }

    void enumerate_pair(RuleSystem const& sys, int a, int b, std::size_t d,
                        ForkOptions const& opt,
                        std::vector<std::vector<Letter>> const& tails,
                        std::vector<Fork>& out) {
      auto const& ra = sys.rule(a);
      auto const& rb = sys.rule(b);
      std::size_t la = ra.length();
      std::size_t lb = rb.length();
      if (d >= la || (a == b && d == 0) || (d == 0 && a > b)) {
        return;
      }
      std::size_t skel = std::max(la, d + lb);
      if ((ra.anchored() && skel != la) || (rb.anchored() && skel != d + lb)) {
        return;
      }
      bool module = ra.kind == RuleKind::Module || rb.kind == RuleKind::Module;
      bool no_tail = !module || ra.anchored() || rb.anchored();
      static const std::vector<std::vector<Letter>> kEmptyTail{{}};
      auto const& use_tails = no_tail ? kEmptyTail : tails;
      ForkKind kind = classify(ra, rb, d);
      std::int64_t w = opt.window;

      auto va = lhs_vars(ra);
      auto vb = lhs_vars(rb);
      Subst sa(ra.vars.size());
      for_each_assignment(va, 0, opt.window, sa, [&](Subst& s1) {
        if (!guards_hold(ra, s1)) {
          return;
        }
        auto A = ra.instantiate_lhs(s1);
        Subst sb(rb.vars.size());
        std::size_t shared = std::min(la, d + lb) - d;
        if (!unify_pattern(rb, 0, A, d, shared, sb)) {
          return;
        }
        for_each_assignment(vb, 0, opt.window, sb, [&](Subst& s2) {
          if (!guards_hold(rb, s2)) {
            return;
          }
          auto B = rb.instantiate_lhs(s2);
          std::vector<Letter> skeleton = A;
          for (std::size_t i = la - d; i < lb; ++i) {
            skeleton.push_back(B[i]);
          }
          for (auto const& l : skeleton) {
            if (!l.is_T() && (l.mode < -w || l.mode > w)) {
              return;
            }
          }
          for (auto const& t : use_tails) {
            if (opt.max_length > 0
                && skeleton.size() + t.size() > static_cast<std::size_t>(opt.max_length)) {
              continue;
            }
            Word h;
            h.letters = skeleton;
            h.letters.insert(h.letters.end(), t.begin(), t.end());
            h.module = module;
            auto m1 = match_rule(ra, h, 0);
            auto m2 = match_rule(rb, h, d);
            if (!m1 || !m2) {
              continue;
            }
            Fork f;
            f.kind = kind;
            f.rule1 = a;
            f.rule2 = b;
            f.position2 = d;
            f.subst1 = std::move(*m1);
            f.subst2 = std::move(*m2);
            f.h = std::move(h);
            out.push_back(std::move(f));
          }
        });
      });
    }

  }  // namespace

  void enumerate_pair_forks(RuleSystem const& sys, int a, int b,
                            ForkOptions const& opt, std::vector<Fork>& out) {
    auto tails = tail_words(sys.alphabet(), opt.window, opt.max_tail);
    for (std::size_t d = 0; d < sys.rule(a).length(); ++d) {
      enumerate_pair(sys, a, b, d, opt, tails, out);
    }
  }

  std::vector<Fork> enumerate_forks(RuleSystem const& sys, ForkOptions const& opt) {
    auto tails = tail_words(sys.alphabet(), opt.window, opt.max_tail);
    std::vector<Fork> out;
    int n = static_cast<int>(sys.rules().size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (std::max(a, b) < opt.min_new_rule) {
          continue;
        }
        for (std::size_t d = 0; d < sys.rule(a).length(); ++d) {
          enumerate_pair(sys, a, b, d, opt, tails, out);
        }
      }
    }
    return out;
  }

  std::pair<LinComb, LinComb> fork_reducts(Fork const& f, RuleSystem const& sys) {
    return {apply_rule(sys.rule(f.rule1), f.subst1, f.h, 0),
            apply_rule(sys.rule(f.rule2), f.subst2, f.h, f.position2)};
  }

  ForkResult check_fork(Fork const& f, Reducer& reducer) {
    ForkResult r;
    auto [h1, h2] = fork_reducts(f, reducer.system());
    LinComb g1 = reducer.reduce(h1);
    LinComb g2 = reducer.reduce(h2);
    if (g1 == g2) {
      r.converges = true;
      r.common = std::move(g1);
    } else {
      r.difference = g1 - g2;
    }
    return r;
  }

  ForkResult check_fork(Fork const& f, RuleSystem const& sys, std::int64_t fuel) {
    Reducer reducer(sys, fuel);
    return check_fork(f, reducer);
  }

  ForkReport check_forks(RuleSystem const& sys, std::vector<Fork> const& forks,
                         std::int64_t fuel, unsigned threads) {
    if (threads == 0) {
      threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, forks.size() / 64 + 1));
    std::vector<std::optional<ForkResult>> results(forks.size());
    std::vector<std::string> errors(forks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      Reducer reducer(sys, fuel);
      constexpr std::size_t kChunk = 32;
      for (;;) {
        std::size_t begin = next.fetch_add(kChunk);
        if (begin >= forks.size()) {
          break;
        }
        std::size_t end = std::min(forks.size(), begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) {
          reducer.reset_steps();
          try {
            results[i] = check_fork(forks[i], reducer);
          } catch (FuelExhausted const& e) {
            errors[i] = e.what();
            reducer.clear_memo();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    ForkReport rep;
    rep.total = forks.size();
    for (std::size_t i = 0; i < forks.size(); ++i) {
      rep.by_kind[static_cast<int>(forks[i].kind)]++;
      if (!results[i]) {
        rep.exhausted.emplace_back(forks[i], errors[i]);
      } else if (results[i]->converges) {
        rep.converged++;
      } else {
        rep.divergent.emplace_back(forks[i], results[i]->difference);
      }
    }
    return rep;
  }

}  // namespace vgsb
