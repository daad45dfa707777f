#ifndef VGSB_BASIS_HPP_
#define VGSB_BASIS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "vgsb/rational.hpp"
#include "vgsb/system.hpp"

namespace vgsb {

  struct TerminalWords {
    std::vector<Word> words;  // ascending in the term order
    // Some terminal word longer than max_len might have been cut off.
    bool truncated = false;
  };

  // Terminal module words of exact weight `weight` (graded systems), modes
  // in [-window, window], length <= max_len. Throws NotGraded.
  TerminalWords enumerate_terminal_words(RuleSystem const& sys,
                                         Rational const& weight, int max_len,
                                         int window);

  // Ungraded variant: every terminal word with modes in [min_mode, -1] and
  // length <= max_len.
  TerminalWords enumerate_terminal_box(RuleSystem const& sys, int min_mode,
                                       int max_len);

  // Rewrites every T into the T-derivation of the T-free module word to its
  // right (T1 = 0). Central letters outside their torsion range vanish.
  LinComb eliminate_T(LinComb const& c, Alphabet const& a);

  struct OracleOptions {
    int window = 10;
    int max_len = 0;        // 0: weight-driven bound
    int nonneg_cap = 1;     // largest nonnegative mode in a prefix
    // Nonnegative letters allowed in a prefix; 0 picks max(1, len - 2) where
    // len is the longest target word.
    int nonneg_letters = 0;
  };

  struct OracleResult {
    std::int64_t dimension = 0;
    std::size_t target_words = 0;
    std::size_t ambient_words = 0;
    std::size_t relations = 0;
  };

  // Independent dimension count from the defining relations only. The
  // concrete module relations g generate the ideal; every other defining
  // rule reduces u * T^k g (u over modes [-window, nonneg_cap] with at most
  // `nonneg_letters` nonnegative modes) to words terminal for those rules.
  // The result is |S| - dim(span S ∩ span rows) where S is the set of such
  // terminal words of the weight with negative modes. Throws WindowTooSmall
  // if the window cannot hold every negative mode of that weight.
  OracleResult dimension_oracle(RuleSystem const& sys, Rational const& weight,
                                OracleOptions const& opt);

  // Ungraded box variant: S has modes in [min_mode, -1] and length <=
  // max_len; prefixes and the surrounding words reach down to
  // min_mode - extra_depth and up to nonneg_cap, prefixes with at most
  // nonneg_letters nonnegative modes.
  OracleResult dimension_oracle_box(RuleSystem const& sys, int min_mode,
                                    int max_len, int nonneg_cap, int extra_depth,
                                    int nonneg_letters = 1);

}  // namespace vgsb

#endif  // VGSB_BASIS_HPP_
