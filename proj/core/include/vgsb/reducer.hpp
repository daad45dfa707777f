#ifndef VGSB_REDUCER_HPP_
#define VGSB_REDUCER_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "vgsb/errors.hpp"
#include "vgsb/lincomb.hpp"
#include "vgsb/system.hpp"

namespace vgsb {

  class FuelExhausted : public LimitError {
   public:
    FuelExhausted(std::string const& msg, LinComb partial)
        : LimitError(msg), partial_(std::move(partial)) {}
    LinComb const& partial() const {
      return partial_;
    }

   private:
    LinComb partial_;
  };

  struct Redex {
    int rule = -1;
    std::size_t position = 0;
    Subst subst;
  };

  // Leftmost position, then lowest rule id.
  std::optional<Redex> find_redex(RuleSystem const& sys, Word const& w);
  std::vector<Redex> all_redexes(RuleSystem const& sys, Word const& w);

  // One rewrite of the largest reducible word; nullopt if c is terminal.
  std::optional<LinComb> rewrite_step(LinComb const& c, RuleSystem const& sys);

  // Normal forms with a per-word memo. Not thread-safe; use one per thread
  // over a shared immutable system. Normal forms are linear, so reducing
  // each word independently is the same as rewriting the whole combination.
  class Reducer {
   public:
    explicit Reducer(RuleSystem const& sys);
    Reducer(RuleSystem const& sys, std::int64_t fuel);

    LinComb reduce(LinComb const& c);
    LinComb reduce(Word const& w);
    bool is_terminal(Word const& w) const;

    // Switches to a random choice among all redexes of each word.
    void shuffle(std::uint64_t seed);

    std::int64_t steps() const {
      return steps_;
    }
    std::int64_t fuel() const {
      return fuel_;
    }
    RuleSystem const& system() const {
      return sys_;
    }
    void reset_steps() {
      steps_ = 0;
    }
    void clear_memo() {
      memo_.clear();
    }

   private:
    LinComb const& normal_form(Word const& w);

    RuleSystem const& sys_;
    std::int64_t fuel_;
    std::int64_t steps_ = 0;
    std::optional<std::mt19937_64> rng_;
    std::unordered_map<Word, LinComb, WordHash> memo_;
    std::unordered_set<Word, WordHash> active_;
  };

  LinComb reduce(LinComb const& c, RuleSystem const& sys, std::int64_t fuel);

}  // namespace vgsb

#endif  // VGSB_REDUCER_HPP_
