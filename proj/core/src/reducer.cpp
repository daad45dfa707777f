#include "vgsb/reducer.hpp"

#include <algorithm>

namespace vgsb {

  std::optional<Redex> find_redex(RuleSystem const& sys, Word const& w) {
    std::vector<int> cand;
    for (std::size_t p = 0; p < w.size(); ++p) {
      sys.candidates(w[p], cand);
      for (int id : cand) {
        if (auto s = match_rule(sys.rule(id), w, p)) {
          return Redex{id, p, std::move(*s)};
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Redex> all_redexes(RuleSystem const& sys, Word const& w) {
    std::vector<Redex> out;
    std::vector<int> cand;
    for (std::size_t p = 0; p < w.size(); ++p) {
      sys.candidates(w[p], cand);
      for (int id : cand) {
        if (auto s = match_rule(sys.rule(id), w, p)) {
          out.push_back(Redex{id, p, std::move(*s)});
        }
      }
    }
    return out;
  }

  std::optional<LinComb> rewrite_step(LinComb const& c, RuleSystem const& sys) {
    std::vector<std::pair<Word, Rational>> words(c.terms().begin(),
                                                 c.terms().end());
    auto const& order = sys.alphabet().order();
    std::sort(words.begin(), words.end(), [&](auto const& a, auto const& b) {
      return order.compare_words(a.first, b.first) > 0;
    });
    for (auto const& [w, coef] : words) {
      if (auto r = find_redex(sys, w)) {
        LinComb out = c;
        out.add(w, -coef);
        out.add_scaled(apply_rule(sys.rule(r->rule), r->subst, w, r->position),
                       coef);
        return out;
      }
    }
    return std::nullopt;
  }

  Reducer::Reducer(RuleSystem const& sys) : Reducer(sys, sys.fuel) {}

  Reducer::Reducer(RuleSystem const& sys, std::int64_t fuel)
      : sys_(sys), fuel_(fuel) {}

  void Reducer::shuffle(std::uint64_t seed) {
    rng_.emplace(seed);
    memo_.clear();
  }

  bool Reducer::is_terminal(Word const& w) const {
    return !find_redex(sys_, w).has_value();
  }

  LinComb const& Reducer::normal_form(Word const& w) {
    if (auto it = memo_.find(w); it != memo_.end()) {
      return it->second;
    }
    std::optional<Redex> r;
    if (rng_) {
      auto all = all_redexes(sys_, w);
      if (!all.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        r = std::move(all[pick(*rng_)]);
      }
    } else {
      r = find_redex(sys_, w);
    }
    if (!r) {
      return memo_.emplace(w, LinComb(w)).first->second;
    }
    if (++steps_ > fuel_) {
      throw FuelExhausted("rewriting fuel exhausted", LinComb(w));
    }
    if (!active_.insert(w).second) {
      throw FuelExhausted("rewriting cycle detected", LinComb(w));
    }
    LinComb next = apply_rule(sys_.rule(r->rule), r->subst, w, r->position);
    LinComb out;
    try {
      for (auto const& [nw, c] : next.terms()) {
        out.add_scaled(normal_form(nw), c);
      }
    } catch (...) {
      active_.erase(w);
      throw;
    }
    active_.erase(w);
    return memo_.emplace(w, std::move(out)).first->second;
  }

  LinComb Reducer::reduce(Word const& w) {
    return normal_form(w);
  }

  LinComb Reducer::reduce(LinComb const& c) {
    std::vector<std::pair<Word, Rational>> words(c.terms().begin(),
                                                 c.terms().end());
    auto const& order = sys_.alphabet().order();
    std::sort(words.begin(), words.end(), [&](auto const& a, auto const& b) {
      return order.compare_words(a.first, b.first) > 0;
    });
    LinComb out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      try {
        out.add_scaled(normal_form(words[i].first), words[i].second);
      } catch (FuelExhausted const& e) {
        LinComb partial = out;
        for (std::size_t j = i; j < words.size(); ++j) {
          partial.add(words[j].first, words[j].second);
        }
        throw FuelExhausted(e.what(), partial);
      }
    }
    return out;
  }

  LinComb reduce(LinComb const& c, RuleSystem const& sys, std::int64_t fuel) {
    Reducer r(sys, fuel);
    return r.reduce(c);
  }

}  // namespace vgsb
