#ifndef VGSB_LINCOMB_HPP_
#define VGSB_LINCOMB_HPP_

#include <map>
#include <optional>
#include <string>

#include "vgsb/rational.hpp"
#include "vgsb/word.hpp"

namespace vgsb {

  // Finitely supported map Word -> Rational; zero coefficients never stored.
  class LinComb {
   public:
    using Terms = std::map<Word, Rational>;

    LinComb() = default;
    explicit LinComb(Word w, Rational c = Rational(1)) {
      add(std::move(w), c);
    }

    static LinComb vacuum() {
      return LinComb(Word::vacuum());
    }

    void add(Word const& w, Rational const& c);
    LinComb& operator+=(LinComb const& o);
    LinComb& operator-=(LinComb const& o);
    LinComb& operator*=(Rational const& c);
    void add_scaled(LinComb const& o, Rational const& c);

    friend LinComb operator+(LinComb a, LinComb const& b) {
      return a += b;
    }
    friend LinComb operator-(LinComb a, LinComb const& b) {
      return a -= b;
    }
    friend LinComb operator*(Rational const& c, LinComb a) {
      return a *= c;
    }
    friend bool operator==(LinComb const&, LinComb const&) = default;

    bool is_zero() const {
      return terms_.empty();
    }
    std::size_t size() const {
      return terms_.size();
    }
    Terms const& terms() const {
      return terms_;
    }
    Rational coeff(Word const& w) const;

    // Largest word under the term order; nullopt for zero.
    std::optional<Word> leading(OrderSpec const& order) const;

    // Left-multiplies every word by `prefix` (an algebra word).
    LinComb prepend(Word const& prefix) const;

    std::string str(Alphabet const& a) const;

   private:
    Terms terms_;
  };

  // [T, w] on T-free module words: each letter z(n) in turn becomes
  // -n z(n-1); T on the vacuum is 0. Central letters shifted outside their
  // torsion range are dropped. Throws SemanticError if T occurs.
  LinComb apply_T_derivation(LinComb const& c, Alphabet const& a);

}  // namespace vgsb

#endif  // VGSB_LINCOMB_HPP_
