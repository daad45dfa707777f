#include "vgsb/basis.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "vgsb/errors.hpp"
#include "vgsb/reducer.hpp"

namespace vgsb {

  namespace {

    bool redex_at_front(RuleSystem const& sys, Word const& w, std::vector<int>& buf) {
      buf.clear();
      sys.candidates(w[0], buf);
      for (int id : buf) {
        if (match_rule(sys.rule(id), w, 0)) {
          return true;
        }
      }
      return false;
    }

    Word prefixed(Letter const& l, Word const& w) {
      Word out;
      out.module = w.module;
      out.letters.reserve(w.size() + 1);
      out.letters.push_back(l);
      out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
      return out;
    }

    // Can `rem` be written as a sum of at most `slots` values in [lo, hi]?
    bool feasible(Rational const& rem, int slots, Rational const& lo, Rational const& hi) {
      for (int r = 0; r <= slots; ++r) {
        if (Rational(r) * lo <= rem && rem <= Rational(r) * hi) {
          return true;
        }
      }
      return false;
    }

    struct WordRange {
      int lo = -1;
      int hi = -1;
      int max_len = 0;
      int max_nonneg = 0;
      std::optional<Rational> weight;
      bool algebra = false;  // words without the vacuum (prefixes)
    };

    // Words in the range, built right to left. With `terminal` every suffix
    // must be free of a redex at its first letter (equivalently the word is
    // terminal). `overflow` is set when a qualifying word one letter longer
    // than max_len exists.
    std::vector<Word> collect_words(RuleSystem const& sys, WordRange const& r, bool terminal,
                                    bool* overflow) {
      Alphabet const& a = sys.alphabet();
      std::vector<Letter> letters;
      std::vector<Rational> weights;
      for (std::size_t g = 0; g < a.size(); ++g) {
        for (int n = r.lo; n <= r.hi; ++n) {
          letters.push_back(Letter::mode_of(static_cast<int>(g), n));
          weights.push_back(r.weight ? a.weight(letters.back()) : Rational(0));
        }
      }
      Rational wlo(0);
      Rational whi(0);
      if (!weights.empty()) {
        wlo = *std::min_element(weights.begin(), weights.end());
        whi = *std::max_element(weights.begin(), weights.end());
      }
      int limit = r.max_len + (overflow ? 1 : 0);
      std::vector<Word> out;
      std::vector<int> buf;
      auto dfs = [&](auto&& self, Word const& w, Rational const& wt, int nonneg) -> void {
        if (!r.weight || wt == *r.weight) {
          if (static_cast<int>(w.size()) > r.max_len) {
            *overflow = true;
            return;
          }
          out.push_back(w);
        }
        if (static_cast<int>(w.size()) >= limit) {
          return;
        }
        for (std::size_t i = 0; i < letters.size(); ++i) {
          bool nn = letters[i].mode >= 0;
          if (nn && nonneg >= r.max_nonneg) {
            continue;
          }
          Rational nw = wt + weights[i];
          if (r.weight && !feasible(*r.weight - nw, limit - 1 - static_cast<int>(w.size()),
                                    wlo, whi)) {
            continue;
          }
          Word next = prefixed(letters[i], w);
          if (terminal && redex_at_front(sys, next, buf)) {
            continue;
          }
          self(self, next, nw, nonneg + (nn ? 1 : 0));
        }
      };
      dfs(dfs, Word({}, !r.algebra), Rational(0), 0);
      return out;
    }

    void sort_words(std::vector<Word>& words, OrderSpec const& order) {
      std::sort(words.begin(), words.end(),
                [&](Word const& a, Word const& b) { return order.less(a, b); });
    }

  }  // namespace

  TerminalWords enumerate_terminal_words(RuleSystem const& sys, Rational const& weight,
                                         int max_len, int window) {
    WordRange r{-window, window, max_len, max_len, weight};
    TerminalWords out;
    out.words = collect_words(sys, r, true, &out.truncated);
    sort_words(out.words, sys.alphabet().order());
    return out;
  }

  TerminalWords enumerate_terminal_box(RuleSystem const& sys, int min_mode, int max_len) {
    WordRange r{min_mode, -1, max_len, 0, std::nullopt};
    TerminalWords out;
    out.words = collect_words(sys, r, true, nullptr);
    sort_words(out.words, sys.alphabet().order());
    return out;
  }

  LinComb eliminate_T(LinComb const& c, Alphabet const& a) {
    LinComb out;
    std::vector<std::pair<Word, Rational>> work(c.terms().begin(), c.terms().end());
    while (!work.empty()) {
      auto [w, coef] = std::move(work.back());
      work.pop_back();
      std::size_t i = w.size();
      while (i > 0 && !w[i - 1].is_T()) {
        --i;
      }
      if (i == 0) {
        out.add(w, coef);
        continue;
      }
      Word head(std::vector<Letter>(w.letters.begin(), w.letters.begin() + (i - 1)), false);
      Word tail(std::vector<Letter>(w.letters.begin() + i, w.letters.end()), true);
      LinComb d = apply_T_derivation(LinComb(tail, coef), a).prepend(head);
      for (auto const& [dw, dc] : d.terms()) {
        work.emplace_back(dw, dc);
      }
    }
    return out;
  }

  namespace {

    // Echelon form over Q for sparse rows; a smaller column index is pivoted
    // first.
    class SparseEchelon {
     public:
      using Row = std::vector<std::pair<int, Rational>>;

      // Returns the pivot column of the reduced row, or -1 if it vanished.
      int insert(Row row) {
        while (!row.empty()) {
          auto it = pivots_.find(row.front().first);
          if (it == pivots_.end()) {
            Rational inv = Rational(1) / row.front().second;
            for (auto& [col, c] : row) {
              c *= inv;
            }
            int col = row.front().first;
            pivots_.emplace(col, std::move(row));
            return col;
          }
          row = subtract(row, it->second, row.front().second);
        }
        return -1;
      }

     private:
      static Row subtract(Row const& a, Row const& b, Rational const& k) {
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() || j < b.size()) {
          if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
          } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(k * b[j].second));
            ++j;
          } else {
            Rational v = a[i].second - k * b[j].second;
            if (!v.is_zero()) {
              out.emplace_back(a[i].first, std::move(v));
            }
            ++i;
            ++j;
          }
        }
        return out;
      }

      std::unordered_map<int, Row> pivots_;
    };


    struct FreePart {
      RuleSystem free;
      std::vector<LinComb> relations;
    };

    // Defining rules minus the concrete module relations (which become the
    // T-free generators of the ideal).
    FreePart split_defining(RuleSystem const& sys) {
      Alphabet const& a = sys.alphabet();
      FreePart fp{RuleSystem(a), {}};
      fp.free.fuel = sys.fuel;
      for (auto const& r : sys.defining()) {
        if (r.is_concrete() && r.anchored()) {
          Subst none(r.vars.size());
          Word lhs(r.instantiate_lhs(none), true);
          LinComb g = eliminate_T(LinComb(lhs) - apply_rule(r, none, lhs, 0), a);
          if (!g.is_zero()) {
            fp.relations.push_back(std::move(g));
          }
          continue;
        }
        fp.free.add_rule(r);
      }
      return fp;
    }

    struct Columns {
      std::unordered_map<Word, int, WordHash> index;
      int first_target = 0;
      std::size_t targets = 0;
    };

    // Non-target words first, then targets; each block descending.
    Columns make_columns(std::vector<Word> const& target, std::vector<Word> const& wider,
                         OrderSpec const& order) {
      std::unordered_map<Word, int, WordHash> in_target;
      for (auto const& w : target) {
        in_target.emplace(w, 0);
      }
      std::vector<Word> rest;
      for (auto const& w : wider) {
        if (!in_target.count(w)) {
          rest.push_back(w);
        }
      }
      std::vector<Word> tg = target;
      auto desc = [&](Word const& x, Word const& y) { return order.less(y, x); };
      std::sort(rest.begin(), rest.end(), desc);
      std::sort(tg.begin(), tg.end(), desc);
      Columns c;
      for (auto const& w : rest) {
        c.index.emplace(w, static_cast<int>(c.index.size()));
      }
      c.first_target = static_cast<int>(c.index.size());
      for (auto const& w : tg) {
        c.index.emplace(w, static_cast<int>(c.index.size()));
      }
      c.targets = tg.size();
      return c;
    }

    struct RowSink {
      Columns const& cols;
      SparseEchelon ech;
      OracleResult res;
      std::int64_t target_pivots = 0;

      void push(LinComb const& rel) {
        SparseEchelon::Row row;
        row.reserve(rel.size());
        for (auto const& [w, c] : rel.terms()) {
          auto it = cols.index.find(w);
          if (it == cols.index.end()) {
            return;
          }
          row.emplace_back(it->second, c);
        }
        if (row.empty()) {
          return;
        }
        std::sort(row.begin(), row.end(),
                  [](auto const& x, auto const& y) { return x.first < y.first; });
        ++res.relations;
        if (ech.insert(std::move(row)) >= cols.first_target) {
          ++target_pivots;
        }
      }

      OracleResult finish() {
        res.target_words = cols.targets;
        res.ambient_words = cols.index.size();
        res.dimension = static_cast<std::int64_t>(cols.targets) - target_pivots;
        return res;
      }
    };

    bool reachable(LinComb const& h, int lo) {
      for (auto const& [w, c] : h.terms()) {
        if (std::all_of(w.letters.begin(), w.letters.end(),
                        [&](Letter const& l) { return l.mode >= lo; })) {
          return true;
        }
      }
      return false;
    }

    std::optional<Rational> homogeneous_weight(LinComb const& h, Alphabet const& a) {
      std::optional<Rational> wt;
      for (auto const& [w, c] : h.terms()) {
        Rational x = a.weight(w);
        if (wt && *wt != x) {
          throw NotGraded("relation is not homogeneous");
        }
        wt = x;
      }
      return wt;
    }

    // Rows NF(u * T^k g) over the free part, for every terminal prefix u in
    // `urange` (weight adjusted per k when graded).
    void push_ideal_rows(FreePart const& fp, WordRange urange, RowSink& sink) {
      Alphabet const& a = fp.free.alphabet();
      Reducer red(fp.free, fp.free.fuel);
      std::optional<Rational> total = urange.weight;
      for (auto const& g : fp.relations) {
        LinComb h = g;
        for (int k = 0; !h.is_zero() && reachable(h, urange.lo) && k <= 64; ++k) {
          if (total) {
            urange.weight = *total - *homogeneous_weight(h, a);
          }
          for (auto const& u : collect_words(fp.free, urange, true, nullptr)) {
            sink.push(red.reduce(h.prepend(u)));
          }
          h = apply_T_derivation(h, a);
        }
      }
    }

  }  // namespace

  OracleResult dimension_oracle(RuleSystem const& sys, Rational const& weight,
                                OracleOptions const& opt) {
    Alphabet const& a = sys.alphabet();
    if (!a.graded()) {
      throw NotGraded("dimension oracle needs a graded system");
    }
    std::optional<Rational> min_pos;
    for (std::size_t g = 0; g < a.size(); ++g) {
      Rational delta = *a[g].weight;
      if (delta.sign() < 0) {
        throw NotGraded("dimension oracle needs nonnegative conformal weights");
      }
      if (weight - delta + Rational(1) > Rational(opt.window)) {
        throw WindowTooSmall("window " + std::to_string(opt.window)
                             + " cannot hold every mode of weight " + weight.str());
      }
      if (delta.is_zero()) {
        continue;
      }
      if (!min_pos || delta < *min_pos) {
        min_pos = delta;
      }
    }
    bool zero_weight = std::any_of(a.generators().begin(), a.generators().end(),
                                   [](Generator const& g) { return g.weight->is_zero(); });
    int len = opt.max_len;
    if (len <= 0) {
      if (zero_weight || !min_pos) {
        throw LimitError("dimension oracle: weight-zero generators need an explicit max_len");
      }
      len = static_cast<int>((weight / *min_pos).floor());
    }
    int nonneg = opt.nonneg_letters > 0 ? opt.nonneg_letters : std::max(1, len - 2);
    FreePart fp = split_defining(sys);
    WordRange target{-opt.window, -1, len, 0, weight};
    WordRange wider{-opt.window, opt.nonneg_cap, len + 2, nonneg + 1, weight};
    Columns cols = make_columns(collect_words(fp.free, target, true, nullptr),
                                collect_words(fp.free, wider, true, nullptr), a.order());
    RowSink sink{cols, {}, {}, 0};
    push_ideal_rows(fp, WordRange{-opt.window, opt.nonneg_cap, len, nonneg, weight,
                                  true},
                    sink);
    return sink.finish();
  }

  OracleResult dimension_oracle_box(RuleSystem const& sys, int min_mode, int max_len,
                                    int nonneg_cap, int extra_depth, int nonneg_letters) {
    FreePart fp = split_defining(sys);
    int lo = min_mode - extra_depth;
    WordRange target{min_mode, -1, max_len, 0, std::nullopt};
    WordRange wider{lo, nonneg_cap, max_len, nonneg_letters + 1, std::nullopt};
    Columns cols = make_columns(collect_words(fp.free, target, true, nullptr),
                                collect_words(fp.free, wider, true, nullptr),
                                sys.alphabet().order());
    RowSink sink{cols, {}, {}, 0};
    push_ideal_rows(fp, WordRange{lo, nonneg_cap, max_len, nonneg_letters, std::nullopt, true},
                    sink);
    return sink.finish();
  }

}  // namespace vgsb
