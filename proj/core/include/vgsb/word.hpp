#ifndef VGSB_WORD_HPP_
#define VGSB_WORD_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgsb/rational.hpp"

namespace vgsb {

  struct Generator {
    std::string name;
    int rank = 0;
    std::optional<Rational> weight;
    bool central = false;
    // 0 means no torsion (T^k g != 0 for all k).
    int torsion = 0;
  };

  // T is encoded with gen == kT; mode is then ignored and kept at 0.
  inline constexpr int kT = -1;

  struct Letter {
    int gen = kT;
    std::int64_t mode = 0;

    static Letter T() {
      return Letter{};
    }
    static Letter mode_of(int g, std::int64_t n) {
      return Letter{g, n};
    }
    bool is_T() const {
      return gen == kT;
    }
    friend bool operator==(Letter const&, Letter const&) = default;
    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  // Sequence of letters; a module word additionally ends at the vacuum.
  struct Word {
    std::vector<Letter> letters;
    bool module = false;

    Word() = default;
    Word(std::vector<Letter> l, bool m) : letters(std::move(l)), module(m) {}

    static Word vacuum() {
      return Word({}, true);
    }

    std::size_t size() const {
      return letters.size();
    }
    bool empty() const {
      return letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return letters[i];
    }
    bool has_T() const;

    friend bool operator==(Word const&, Word const&) = default;
    // Structural order for containers; unrelated to the term order.
    friend std::strong_ordering operator<=>(Word const& a, Word const& b);

    std::size_t hash() const;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const {
      return w.hash();
    }
  };

  Word concat(Word const& left, Word const& right);

  // The term order. Built from the generator list; rank is the index into it.
  class OrderSpec {
   public:
    OrderSpec() = default;
    explicit OrderSpec(std::vector<Generator> const& gens);

    std::strong_ordering compare_letters(Letter const& a, Letter const& b) const;
    std::strong_ordering compare_words(Word const& a, Word const& b) const;
    bool less(Word const& a, Word const& b) const {
      return compare_words(a, b) < 0;
    }

   private:
    std::vector<int> rank_;
    std::vector<bool> central_;
  };

  // Generators of a presentation, with name lookup and printing helpers.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Generator> gens);

    std::vector<Generator> const& generators() const {
      return gens_;
    }
    std::size_t size() const {
      return gens_.size();
    }
    Generator const& operator[](std::size_t i) const {
      return gens_[i];
    }
    std::optional<int> find(std::string const& name) const;
    int index(std::string const& name) const;  // throws SemanticError
    OrderSpec const& order() const {
      return order_;
    }
    bool graded() const;

    std::string letter_str(Letter const& l) const;
    // "x(0) y(-1) vac"; the bare vacuum prints as "vac".
    std::string word_str(Word const& w) const;

    // wt(z(n)) = weight(z) - n - 1, wt(T) = 1. Throws NotGraded.
    Rational weight(Letter const& l) const;
    Rational weight(Word const& w) const;

   private:
    std::vector<Generator> gens_;
    OrderSpec order_;
  };

}  // namespace vgsb

#endif  // VGSB_WORD_HPP_
