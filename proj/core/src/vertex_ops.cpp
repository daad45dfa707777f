#include "vgsb/vertex_ops.hpp"

#include <algorithm>
#include <random>

#include "vgsb/basis.hpp"
#include "vgsb/errors.hpp"

namespace vgsb {

  namespace {

    Word letter_word(Letter l) {
      return Word({l}, false);
    }

    Rational sign(std::int64_t k) {
      return Rational(k % 2 == 0 ? 1 : -1);
    }

  }  // namespace

  VertexOps::VertexOps(RuleSystem const& sys) : VertexOps(sys, sys.fuel) {}

  VertexOps::VertexOps(RuleSystem const& sys, std::int64_t fuel)
      : sys_(sys), red_(sys, fuel), graded_(sys.alphabet().graded()) {}

  std::int64_t VertexOps::weight_start(std::optional<Rational> const& w) const {
    if (!w) {
      return 0;
    }
    return std::max<std::int64_t>(0, w->floor() + 1);
  }

  std::optional<Rational> VertexOps::max_weight(LinComb const& c) const {
    if (!graded_ || c.is_zero()) {
      return std::nullopt;
    }
    std::optional<Rational> m;
    for (auto const& [w, coef] : c.terms()) {
      Rational x = sys_.alphabet().weight(w);
      if (!m || *m < x) {
        m = x;
      }
    }
    return m;
  }

  LinComb VertexOps::T(LinComb const& a) {
    return red_.reduce(a.prepend(letter_word(Letter::T())));
  }

  TAction<LinComb> VertexOps::t_action() {
    return [this](LinComb const& c) { return T(c); };
  }

  LinComb VertexOps::mode_action(int x, std::int64_t n, LinComb const& a) {
    if (n >= -1) {
      return red_.reduce(a.prepend(letter_word(Letter::mode_of(x, n))));
    }
    // Unrolled recursion: x(-1-p)a = 1/p! sum_i (-1)^i C(p,i) T^{p-i} x(-1) T^i a.
    std::int64_t p = -1 - n;
    LinComb out;
    LinComb ti = red_.reduce(a);
    for (std::int64_t i = 0; i <= p; ++i) {
      LinComb term = mode_action(x, -1, ti);
      for (std::int64_t r = 0; r < p - i && !term.is_zero(); ++r) {
        term = T(term);
      }
      out.add_scaled(term, sign(i) * generalized_binomial(p, i));
      ti = T(ti);
      if (ti.is_zero()) {
        break;
      }
    }
    out *= Rational(1) / factorial(p);
    return out;
  }

  LinComb VertexOps::word_product(Word const& a, Word const& b, std::int64_t n) {
    if (b.empty()) {
      // a_(-1-p) 1 = T^p a / p!
      if (n >= 0) {
        return LinComb();
      }
      std::int64_t p = -1 - n;
      LinComb out = red_.reduce(a);
      for (std::int64_t r = 0; r < p && !out.is_zero(); ++r) {
        out = T(out);
      }
      out *= Rational(1) / factorial(p);
      return out;
    }
    auto key = std::make_tuple(a, b, n);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    if (b[0].is_T()) {
      throw SemanticError("state_product: right factor " +
                          sys_.alphabet().word_str(b) + " is not T-free");
    }
    // a_(n) y(m)s = y(m) a_(n)s - sum_i C(m,i) (y_(i)a)_(m+n-i) s
    int y = b[0].gen;
    std::int64_t m = b[0].mode;
    Word s(std::vector<Letter>(b.letters.begin() + 1, b.letters.end()), true);
    LinComb out = red_.reduce(word_product(a, s, n).prepend(letter_word(b[0])));
    std::int64_t start = 0;
    if (graded_) {
      Alphabet const& al = sys_.alphabet();
      start = weight_start(al.weight(a) + *al[y].weight - Rational(1));
    }
    LinComb ya(a);
    int zeros = 0;
    for (std::int64_t i = 0; i < start || zeros < zero_run; ++i) {
      if (i >= start + cap) {
        throw TruncationUnsound("state_product: " + sys_.alphabet().letter_str(b[0]) +
                                " did not annihilate " + sys_.alphabet().word_str(a) +
                                " within " + std::to_string(cap) + " modes");
      }
      LinComb yia = mode_action(y, i, ya);
      zeros = yia.is_zero() ? zeros + 1 : 0;
      Rational f = generalized_binomial(m, i);
      if (yia.is_zero() || f.is_zero()) {
        continue;
      }
      LinComb term;
      for (auto const& [w, c] : yia.terms()) {
        term.add_scaled(word_product(w, s, m + n - i), c);
      }
      out.add_scaled(term, -f);
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  LinComb VertexOps::state_product(LinComb const& a, LinComb const& b, std::int64_t n) {
    red_.reset_steps();
    LinComb ra = red_.reduce(a);
    LinComb rb = red_.reduce(b);
    LinComb out;
    for (auto const& [w, c] : ra.terms()) {
      for (auto const& [v, d] : rb.terms()) {
        out.add_scaled(word_product(w, v, n), c * d);
      }
    }
    return out;
  }

  LambdaPoly<LinComb> VertexOps::lambda_bracket(LinComb const& a, LinComb const& b) {
    LambdaPoly<LinComb> out;
    std::int64_t start = 0;
    if (auto wa = max_weight(red_.reduce(a)), wb = max_weight(red_.reduce(b)); wa && wb) {
      start = weight_start(*wa + *wb - Rational(1));
    }
    int zeros = 0;
    for (int n = 0; n < start || zeros < zero_run; ++n) {
      if (n >= start + cap) {
        throw TruncationUnsound("lambda_bracket: products did not vanish within " +
                                std::to_string(cap) + " terms");
      }
      LinComb p = state_product(a, b, n);
      zeros = p.is_zero() ? zeros + 1 : 0;
      p *= Rational(1) / factorial(n);
      out.add(n, 0, p);
    }
    return out;
  }

  LinComb generator_state(RuleSystem const&, int g) {
    return LinComb(Word({Letter::mode_of(g, -1)}, true));
  }

  LinComb commutator_defect(VertexOps& ops, LinComb const& a, LinComb const& b) {
    LinComb d = ops.dot(a, b) - ops.dot(b, a);
    d -= integrate_neg_T(ops.lambda_bracket(a, b), ops.t_action());
    return d;
  }

  LambdaPoly<LinComb> derivation_defect(VertexOps& ops, LinComb const& a,
                                        LinComb const& b, LinComb const& c) {
    LambdaPoly<LinComb> d = ops.lambda_bracket(a, ops.dot(b, c));
    LambdaPoly<LinComb> ab = ops.lambda_bracket(a, b);
    LambdaPoly<LinComb> rhs;
    LambdaPoly<LinComb> inner;
    for (auto const& [k, coef] : ab.terms()) {
      rhs.add(k.first, 0, ops.dot(coef, c));
      LambdaPoly<LinComb> bc = ops.lambda_bracket(coef, c);
      for (auto const& [m, cc] : bc.terms()) {
        inner.add(k.first, m.first, cc);
      }
    }
    LambdaPoly<LinComb> ac = ops.lambda_bracket(a, c);
    for (auto const& [k, coef] : ac.terms()) {
      rhs.add(k.first, 0, ops.dot(b, coef));
    }
    rhs += integrate_mu(inner);
    d -= rhs;
    return d;
  }

  namespace {

    std::string poly_str(VertexOps const& ops, LambdaPoly<LinComb> const& p) {
      std::string s;
      for (auto const& [k, c] : p.terms()) {
        if (!s.empty()) {
          s += " + ";
        }
        s += "lambda^" + std::to_string(k.first) + " (" + ops.str(c) + ")";
      }
      return s;
    }

    std::vector<LinComb> random_pool(RuleSystem const& sys, IdentityOptions const& opt,
                                     std::mt19937_64& rng) {
      Alphabet const& al = sys.alphabet();
      mpz_class den = 1;
      for (auto const& g : al.generators()) {
        mpz_class d = g.weight->mpq().get_den();
        den = den * d / gcd(den, d);
      }
      std::vector<Word> words;
      Rational step(mpq_class(1, den));
      for (Rational w(0); w <= opt.max_weight; w = w + step) {
        auto tw = enumerate_terminal_words(sys, w, opt.max_len, opt.window);
        words.insert(words.end(), tw.words.begin(), tw.words.end());
      }
      std::vector<LinComb> pool;
      if (words.empty()) {
        return pool;
      }
      std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
      std::uniform_int_distribution<int> coeff(1, 3);
      std::uniform_int_distribution<int> terms(1, 2);
      for (int i = 0; i < opt.samples; ++i) {
        LinComb s;
        int t = terms(rng);
        for (int j = 0; j < t; ++j) {
          Word const& w = words[pick(rng)];
          int num = coeff(rng);
          int den = coeff(rng);
          s.add(w, Rational(num, den));
        }
        if (s.is_zero()) {
          s = LinComb(words[pick(rng)]);
        }
        pool.push_back(s);
      }
      return pool;
    }

  }  // namespace

  IdentityReport check_vertex_identities(RuleSystem const& sys,
                                         IdentityOptions const& opt) {
    if (!sys.alphabet().graded()) {
      throw NotGraded("identity check needs a weight for every generator");
    }
    VertexOps ops(sys);
    IdentityReport rep;
    auto pair = [&](LinComb const& a, LinComb const& b) {
      ++rep.pairs;
      LinComb d = commutator_defect(ops, a, b);
      if (!d.is_zero()) {
        rep.ok = false;
        rep.failures.push_back("commutator a = " + ops.str(a) + ", b = " + ops.str(b) +
                               ": defect " + ops.str(d));
      }
    };
    auto triple = [&](LinComb const& a, LinComb const& b, LinComb const& c) {
      ++rep.triples;
      auto d = derivation_defect(ops, a, b, c);
      if (!d.is_zero()) {
        rep.ok = false;
        rep.failures.push_back("derivation a = " + ops.str(a) + ", b = " + ops.str(b) +
                               ", c = " + ops.str(c) + ": defect " + poly_str(ops, d));
      }
    };

    int k = static_cast<int>(sys.alphabet().size());
    std::vector<LinComb> gens;
    for (int g = 0; g < k; ++g) {
      gens.push_back(ops.reduce(generator_state(sys, g)));
    }
    for (auto const& a : gens) {
      for (auto const& b : gens) {
        pair(a, b);
        for (auto const& c : gens) {
          triple(a, b, c);
        }
      }
    }

    std::mt19937_64 rng(opt.seed);
    auto pool = random_pool(sys, opt, rng);
    if (!pool.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (int i = 0; i < opt.samples; ++i) {
        pair(pool[i], pool[pick(rng)]);
        triple(pool[i], pool[pick(rng)], pool[pick(rng)]);
      }
    }
    return rep;
  }

}  // namespace vgsb
