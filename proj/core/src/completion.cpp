#include "vgsb/completion.hpp"

#include "vgsb/errors.hpp"

namespace vgsb {

  SchematicRule orient_difference(LinComb const& d, Alphabet const& a) {
    auto lead = d.leading(a.order());
    if (!lead || (lead->module && lead->empty())) {
      throw UnorientableDifference("cannot orient difference " + d.str(a));
    }
    Rational c = d.coeff(*lead);
    LinComb rhs = LinComb(*lead) - Rational(1) / c * d;
    return concrete_rule(*lead, rhs, "completion");
  }

  CompletionResult complete(RuleSystem const& sys, CompletionOptions const& opt) {
    CompletionResult res{sys, {}, 0, 0, false};
    RuleSystem& work = res.system;
    ForkOptions fo;
    fo.window = opt.window;
    fo.max_tail = opt.max_tail;
    fo.min_new_rule = 0;
    fo.max_length = opt.max_length;
    while (res.rounds < opt.max_rounds) {
      ++res.rounds;
      auto forks = enumerate_forks(work, fo);
      res.forks_checked += forks.size();
      std::vector<LinComb> diffs;
      {
        Reducer reducer(work, opt.fuel);
        for (auto const& f : forks) {
          reducer.reset_steps();
          auto r = check_fork(f, reducer);
          if (!r.converges) {
            diffs.push_back(std::move(r.difference));
          }
        }
      }
      int first_new = static_cast<int>(work.rules().size());
      for (auto const& d : diffs) {
        Reducer reducer(work, opt.fuel);
        LinComb g = reducer.reduce(d);
        if (g.is_zero()) {
          continue;
        }
        std::size_t before = work.rules().size();
        int id = work.add_rule(orient_difference(g, work.alphabet()));
        if (work.rules().size() > before) {
          res.added.push_back(id);
        }
      }
      if (static_cast<int>(work.rules().size()) == first_new) {
        res.confluent = true;
        break;
      }
      fo.min_new_rule = first_new;
    }
    return res;
  }

}  // namespace vgsb
