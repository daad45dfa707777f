#include "vgsb/lincomb.hpp"

#include "vgsb/errors.hpp"

namespace vgsb {

  void LinComb::add(Word const& w, Rational const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  LinComb& LinComb::operator+=(LinComb const& o) {
    for (auto const& [w, c] : o.terms_) {
      add(w, c);
    }
    return *this;
  }

  LinComb& LinComb::operator-=(LinComb const& o) {
    for (auto const& [w, c] : o.terms_) {
      add(w, -c);
    }
    return *this;
  }

  LinComb& LinComb::operator*=(Rational const& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) {
      v *= c;
    }
    return *this;
  }

  void LinComb::add_scaled(LinComb const& o, Rational const& c) {
    if (c.is_zero()) {
      return;
    }
    for (auto const& [w, v] : o.terms_) {
      add(w, v * c);
    }
  }

  Rational LinComb::coeff(Word const& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::optional<Word> LinComb::leading(OrderSpec const& order) const {
    std::optional<Word> best;
    for (auto const& [w, c] : terms_) {
      if (!best || order.compare_words(w, *best) > 0) {
        best = w;
      }
    }
    return best;
  }

  LinComb LinComb::prepend(Word const& prefix) const {
    LinComb out;
    for (auto const& [w, c] : terms_) {
      out.add(concat(prefix, w), c);
    }
    return out;
  }

  std::string LinComb::str(Alphabet const& a) const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [w, c] : terms_) {
      Rational mag = c.sign() < 0 ? -c : c;
      if (out.empty()) {
        out += c.sign() < 0 ? "-" : "";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      if (!mag.is_one()) {
        out += mag.str() + " ";
      }
      out += a.word_str(w);
    }
    return out;
  }

  LinComb apply_T_derivation(LinComb const& c, Alphabet const& a) {
    LinComb out;
    for (auto const& [w, coef] : c.terms()) {
      if (!w.module) {
        throw SemanticError("apply_T_derivation expects module words");
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        Letter const& l = w[i];
        if (l.is_T()) {
          throw SemanticError("apply_T_derivation: word contains T");
        }
        if (l.mode == 0) {
          continue;
        }
        auto const& g = a[l.gen];
        if (g.torsion > 0 && (l.mode - 1 < -g.torsion || l.mode - 1 >= 0)) {
          continue;
        }
        Word shifted = w;
        shifted.letters[i].mode -= 1;
        out.add(shifted, coef * Rational(-l.mode));
      }
    }
    return out;
  }

}  // namespace vgsb
