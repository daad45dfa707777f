#include "vgsb/system.hpp"

#include <algorithm>

namespace vgsb {

  std::string rule_key(SchematicRule const& r) {
    std::vector<std::string> anon;
    for (std::size_t i = 0; i < r.vars.size(); ++i) {
      anon.push_back("$" + std::to_string(i));
    }
    std::string k = r.kind == RuleKind::Module ? "M" : "A";
    k += std::to_string(static_cast<int>(r.tail)) + "|";
    for (auto const& l : r.tail_letters) {
      k += std::to_string(l.gen) + ":" + std::to_string(l.mode) + ",";
    }
    k += "|";
    auto pat = [&](std::vector<LetterPattern> const& ps) {
      for (auto const& p : ps) {
        k += p.is_T ? std::string("T") : std::to_string(p.gen) + "(" + p.mode.str(anon) + ")";
        k += " ";
      }
    };
    pat(r.lhs);
    k += "|";
    for (auto const& g : r.guards) {
      k += g.str(anon) + ";";
    }
    k += "|";
    for (auto const& t : r.rhs) {
      for (auto const& s : t.sums) {
        k += "S" + std::to_string(s.var) + "=" + s.lo.str(anon) + ".." + s.hi.str(anon) + " ";
      }
      k += t.coeff.str(anon) + " ";
      pat(t.word);
      k += "+";
    }
    return k;
  }

  int RuleSystem::add_rule(SchematicRule r) {
    validate_rule(r);
    std::string key = rule_key(r);
    if (auto it = keys_.find(key); it != keys_.end()) {
      return it->second;
    }
    int id = static_cast<int>(rules_.size());
    r.id = id;
    keys_.emplace(std::move(key), id);
    auto const& first = r.lhs.front();
    if (!first.is_T && first.mode.is_constant()) {
      concrete_by_letter_[Letter::mode_of(first.gen, first.mode.constant)]
          .push_back(id);
    } else {
      std::size_t slot = first.is_T ? 0 : static_cast<std::size_t>(first.gen + 1);
      if (schematic_by_gen_.size() <= slot) {
        schematic_by_gen_.resize(slot + 1);
      }
      schematic_by_gen_[slot].push_back(id);
    }
    rules_.push_back(std::move(r));
    return id;
  }

  void RuleSystem::add_defining(SchematicRule r) {
    validate_rule(r);
    r.id = static_cast<int>(defining_.size());
    defining_.push_back(std::move(r));
  }

  void RuleSystem::candidates(Letter const& l, std::vector<int>& out) const {
    out.clear();
    std::size_t slot = l.is_T() ? 0 : static_cast<std::size_t>(l.gen + 1);
    static const std::vector<int> kEmpty;
    auto const& a = slot < schematic_by_gen_.size() ? schematic_by_gen_[slot] : kEmpty;
    auto it = l.is_T() ? concrete_by_letter_.end() : concrete_by_letter_.find(l);
    auto const& b = it == concrete_by_letter_.end() ? kEmpty : it->second;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  }

}  // namespace vgsb
