#ifndef VGSB_COMPLETION_HPP_
#define VGSB_COMPLETION_HPP_

#include <cstdint>
#include <vector>

#include "vgsb/forks.hpp"
#include "vgsb/system.hpp"

namespace vgsb {

  struct CompletionOptions {
    int window = 6;
    int max_tail = 0;
    int max_length = 0;
    int max_rounds = 12;
    std::int64_t fuel = 100000;
  };

  struct CompletionResult {
    RuleSystem system;
    std::vector<int> added;  // ids of the new concrete rules, in order
    int rounds = 0;
    std::size_t forks_checked = 0;
    // No divergent fork remained inside the window.
    bool confluent = false;
  };

  // Enumerates forks, orients every nonzero reduced difference into a new
  // concrete rule and repeats on the forks involving new rules. Works on a
  // copy of `sys`. Throws FuelExhausted or UnorientableDifference.
  CompletionResult complete(RuleSystem const& sys, CompletionOptions const& opt);

  // The leading word of d becomes the lhs. Throws UnorientableDifference
  // when d's leading word is the bare vacuum.
  SchematicRule orient_difference(LinComb const& d, Alphabet const& a);

}  // namespace vgsb

#endif  // VGSB_COMPLETION_HPP_
