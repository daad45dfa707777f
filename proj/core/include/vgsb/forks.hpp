#ifndef VGSB_FORKS_HPP_
#define VGSB_FORKS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vgsb/lincomb.hpp"
#include "vgsb/reducer.hpp"
#include "vgsb/system.hpp"

namespace vgsb {

  enum class ForkKind { C1, C2, CM1, CM2, CM3 };

  char const* fork_kind_name(ForkKind k);

  // A word h with two one-step reductions: rule1 at position 0 and rule2 at
  // `position2`. The reducts are recomputed on demand to keep forks small.
  struct Fork {
    ForkKind kind = ForkKind::C1;
    Word h;
    int rule1 = -1;
    int rule2 = -1;
    std::size_t position2 = 0;
    Subst subst1;
    Subst subst2;
  };

  // The two one-step reducts (h1, h2).
  std::pair<LinComb, LinComb> fork_reducts(Fork const& f, RuleSystem const& sys);

  struct ForkOptions {
    int window = 6;
    int max_tail = 2;
    // Restrict to pairs where at least one rule id is >= this (used by
    // completion to enumerate only forks involving new rules).
    int min_new_rule = 0;
    // Skip overlap words longer than this (0 = no limit).
    int max_length = 0;
  };

  std::vector<Fork> enumerate_forks(RuleSystem const& sys, ForkOptions const& opt);

  // Forks between rule pair (a, b) with b starting `d` letters after a.
  void enumerate_pair_forks(RuleSystem const& sys, int a, int b,
                            ForkOptions const& opt, std::vector<Fork>& out);

  struct ForkResult {
    bool converges = false;
    LinComb common;      // terminal form when converging
    LinComb difference;  // g1 - g2 when diverging
  };

  // Throws FuelExhausted.
  ForkResult check_fork(Fork const& f, Reducer& reducer);
  ForkResult check_fork(Fork const& f, RuleSystem const& sys, std::int64_t fuel);

  struct ForkReport {
    std::size_t total = 0;
    std::size_t converged = 0;
    std::vector<std::pair<Fork, LinComb>> divergent;
    std::vector<std::pair<Fork, std::string>> exhausted;
    std::vector<std::size_t> by_kind = std::vector<std::size_t>(5, 0);
  };

  // Checks every fork, in parallel over `threads` workers (0 = hardware).
  ForkReport check_forks(RuleSystem const& sys, std::vector<Fork> const& forks,
                         std::int64_t fuel, unsigned threads = 0);

}  // namespace vgsb

#endif  // VGSB_FORKS_HPP_
