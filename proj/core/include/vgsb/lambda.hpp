#ifndef VGSB_LAMBDA_HPP_
#define VGSB_LAMBDA_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "vgsb/errors.hpp"
#include "vgsb/rational.hpp"

namespace vgsb {

  // Polynomial in lambda and mu with coefficients in C. Stored in ordinary
  // powers: terms[{i, j}] is the coefficient of lambda^i mu^j. The n-th
  // product is n! times the coefficient of lambda^n.
  //
  // C must provide +=, *= Rational and is_zero().
  template <class C>
  class LambdaPoly {
   public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, C>;

    void add(int i, int j, C const& c) {
      if (c.is_zero()) {
        return;
      }
      auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
          terms_.erase(it);
        }
      }
    }
    LambdaPoly& operator+=(LambdaPoly const& o) {
      for (auto const& [k, c] : o.terms_) {
        add(k.first, k.second, c);
      }
      return *this;
    }
    LambdaPoly& operator-=(LambdaPoly const& o) {
      for (auto const& [k, c] : o.terms_) {
        C neg = c;
        neg *= Rational(-1);
        add(k.first, k.second, neg);
      }
      return *this;
    }
    LambdaPoly& operator*=(Rational const& r) {
      if (r.is_zero()) {
        terms_.clear();
      }
      for (auto& [k, c] : terms_) {
        c *= r;
      }
      return *this;
    }
    friend bool operator==(LambdaPoly const&, LambdaPoly const&) = default;

    bool is_zero() const {
      return terms_.empty();
    }
    Terms const& terms() const {
      return terms_;
    }
    C coeff(int i, int j = 0) const {
      auto it = terms_.find(Key{i, j});
      return it == terms_.end() ? C{} : it->second;
    }
    int lambda_degree() const {
      int d = -1;
      for (auto const& [k, c] : terms_) {
        d = std::max(d, k.first);
      }
      return d;
    }
    bool mu_free() const {
      for (auto const& [k, c] : terms_) {
        if (k.second != 0) {
          return false;
        }
      }
      return true;
    }

   private:
    Terms terms_;
  };

  // Applies T to a coefficient; supplied by the caller's context.
  template <class C>
  using TAction = std::function<C(C const&)>;

  template <class C>
  C apply_T_power(TAction<C> const& t, C c, int k) {
    for (int i = 0; i < k && !c.is_zero(); ++i) {
      c = t(c);
    }
    return c;
  }

  // Integral over lambda from -T to 0: lambda^n c contributes
  // (-1)^n T^{n+1} c / (n+1).
  template <class C>
  C integrate_neg_T(LambdaPoly<C> const& p, TAction<C> const& t) {
    if (!p.mu_free()) {
      throw SemanticError("integrate_lambda(-T,0): polynomial depends on mu");
    }
    C out{};
    for (auto const& [k, c] : p.terms()) {
      int n = k.first;
      C term = apply_T_power(t, c, n + 1);
      term *= Rational(n % 2 == 0 ? 1 : -1, n + 1);
      out += term;
    }
    return out;
  }

  // Integral over mu from 0 to lambda: lambda^i mu^j -> lambda^{i+j+1}/(j+1).
  template <class C>
  LambdaPoly<C> integrate_mu(LambdaPoly<C> const& p) {
    LambdaPoly<C> out;
    for (auto const& [k, c] : p.terms()) {
      C term = c;
      term *= Rational(1, k.second + 1);
      out.add(k.first + k.second + 1, 0, term);
    }
    return out;
  }

  // lambda -> -lambda - T, T acting on coefficients from the left.
  template <class C>
  LambdaPoly<C> substitute_skew(LambdaPoly<C> const& p, TAction<C> const& t) {
    if (!p.mu_free()) {
      throw SemanticError("substitute_skew: polynomial depends on mu");
    }
    LambdaPoly<C> out;
    for (auto const& [k, c] : p.terms()) {
      int n = k.first;
      for (int a = 0; a <= n; ++a) {
        C term = apply_T_power(t, c, n - a);
        Rational f = generalized_binomial(n, a);
        if (n % 2 != 0) {
          f = -f;
        }
        term *= f;
        out.add(a, 0, term);
      }
    }
    return out;
  }

}  // namespace vgsb

#endif  // VGSB_LAMBDA_HPP_
