#include "vgsb/word.hpp"

#include <limits>

#include "vgsb/errors.hpp"

namespace vgsb {

  bool Word::has_T() const {
    for (auto const& l : letters) {
      if (l.is_T()) {
        return true;
      }
    }
    return false;
  }

  std::strong_ordering operator<=>(Word const& a, Word const& b) {
    if (auto c = a.module <=> b.module; c != 0) {
      return c;
    }
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < a.letters.size(); ++i) {
      if (auto c = a.letters[i] <=> b.letters[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t Word::hash() const {
    std::size_t h = module ? 0x51ed27ULL : 0x1bd11bULL;
    for (auto const& l : letters) {
      std::size_t v = (static_cast<std::size_t>(l.gen + 1) << 40)
                      ^ static_cast<std::size_t>(l.mode);
      h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  Word concat(Word const& left, Word const& right) {
    if (left.module) {
      throw SemanticError("cannot append letters after the vacuum");
    }
    Word out;
    out.letters.reserve(left.size() + right.size());
    out.letters = left.letters;
    out.letters.insert(out.letters.end(), right.letters.begin(),
                       right.letters.end());
    out.module = right.module;
    return out;
  }

  OrderSpec::OrderSpec(std::vector<Generator> const& gens) {
    rank_.reserve(gens.size());
    for (auto const& g : gens) {
      rank_.push_back(g.rank);
      central_.push_back(g.central);
    }
  }

  namespace {

    // e(-1) < e(0) < e(1) < ... < e(-2) < e(-3) < ...
    std::int64_t central_key(std::int64_t n) {
      constexpr std::int64_t kHuge = std::numeric_limits<std::int64_t>::max() / 4;
      return n >= -1 ? n + 1 : kHuge - n;
    }

  }  // namespace

  std::strong_ordering OrderSpec::compare_letters(Letter const& a,
                                                  Letter const& b) const {
    if (a.is_T() || b.is_T()) {
      return a.is_T() <=> b.is_T();
    }
    bool ca = central_[a.gen];
    bool cb = central_[b.gen];
    if (ca != cb) {
      return ca <=> cb;
    }
    if (ca) {
      if (auto c = central_key(a.mode) <=> central_key(b.mode); c != 0) {
        return c;
      }
      return rank_[a.gen] <=> rank_[b.gen];
    }
    if (auto c = a.mode <=> b.mode; c != 0) {
      return c;
    }
    return rank_[a.gen] <=> rank_[b.gen];
  }

  std::strong_ordering OrderSpec::compare_words(Word const& a,
                                                Word const& b) const {
    if (auto c = a.size() <=> b.size(); c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (auto c = compare_letters(a[i], b[i]); c != 0) {
        return c;
      }
    }
    return a.module <=> b.module;
  }

  Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (gens_[i].name == gens_[j].name) {
          throw SemanticError("duplicate generator '" + gens_[i].name + "'");
        }
      }
      if (gens_[i].torsion != 0 && !gens_[i].central) {
        throw SemanticError("torsion given for non-central generator '"
                            + gens_[i].name + "'");
      }
    }
    order_ = OrderSpec(gens_);
  }

  std::optional<int> Alphabet::find(std::string const& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].name == name) {
        return static_cast<int>(i);
      }
    }
    return std::nullopt;
  }

  int Alphabet::index(std::string const& name) const {
    auto i = find(name);
    if (!i) {
      throw SemanticError("unknown generator '" + name + "'");
    }
    return *i;
  }

  bool Alphabet::graded() const {
    for (auto const& g : gens_) {
      if (!g.weight) {
        return false;
      }
    }
    return !gens_.empty();
  }

  std::string Alphabet::letter_str(Letter const& l) const {
    if (l.is_T()) {
      return "T";
    }
    return gens_.at(l.gen).name + "(" + std::to_string(l.mode) + ")";
  }

  std::string Alphabet::word_str(Word const& w) const {
    std::string out;
    for (auto const& l : w.letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += letter_str(l);
    }
    if (w.module) {
      if (!out.empty()) {
        out += ' ';
      }
      out += "vac";
    }
    return out.empty() ? "1" : out;
  }

  Rational Alphabet::weight(Letter const& l) const {
    if (l.is_T()) {
      return Rational(1);
    }
    auto const& g = gens_.at(l.gen);
    if (!g.weight) {
      throw NotGraded("generator '" + g.name + "' has no weight");
    }
    return *g.weight - Rational(l.mode) - Rational(1);
  }

  Rational Alphabet::weight(Word const& w) const {
    Rational total;
    for (auto const& l : w.letters) {
      total += weight(l);
    }
    return total;
  }

}  // namespace vgsb
