#ifndef VGSB_SYSTEM_HPP_
#define VGSB_SYSTEM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vgsb/rule.hpp"
#include "vgsb/word.hpp"

namespace vgsb {

  // A rewriting system over an alphabet. `rules` drive reduction; `defining`
  // holds the presentation's relations as rules and is what the dimension
  // oracle imposes (it may coincide with a prefix of `rules`).
  class RuleSystem {
   public:
    RuleSystem() = default;
    explicit RuleSystem(Alphabet a) : alphabet_(std::move(a)) {}

    Alphabet const& alphabet() const {
      return alphabet_;
    }
    std::vector<SchematicRule> const& rules() const {
      return rules_;
    }
    SchematicRule const& rule(int id) const {
      return rules_.at(id);
    }

    // Validates and appends; returns the id. A rule equal to an existing one
    // up to renaming of variables is not added again (existing id returned).
    int add_rule(SchematicRule r);
    void add_defining(SchematicRule r);
    std::vector<SchematicRule> const& defining() const {
      return defining_;
    }

    // Ids of rules whose first lhs letter may match `l`, ascending.
    void candidates(Letter const& l, std::vector<int>& out) const;

    std::map<std::pair<int, int>, int> locality;
    std::int64_t fuel = 100000;
    int window = 6;
    std::string name;

   private:
    Alphabet alphabet_;
    std::vector<SchematicRule> rules_;
    std::vector<SchematicRule> defining_;
    std::unordered_map<std::string, int> keys_;
    std::vector<std::vector<int>> schematic_by_gen_;  // index gen + 1
    std::map<Letter, std::vector<int>> concrete_by_letter_;
  };

  // Canonical text of a rule used for deduplication (variable names erased).
  std::string rule_key(SchematicRule const& r);

}  // namespace vgsb

#endif  // VGSB_SYSTEM_HPP_
