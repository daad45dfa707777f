#ifndef VGSB_RATIONAL_HPP_
#define VGSB_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace vgsb {

  // Exact rational number backed by GMP. Always canonical (reduced, positive
  // denominator); there is no floating point anywhere in the engine.
  class Rational {
   public:
    Rational() = default;
    Rational(std::int64_t n)  // NOLINT(runtime/explicit)
        : value_(static_cast<long>(n)) {}
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class v) : value_(std::move(v)) {
      value_.canonicalize();
    }

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    // "p/q", with "/q" omitted when q == 1.
    std::string str() const;

    bool is_zero() const {
      return sgn(value_) == 0;
    }
    bool is_one() const {
      return value_ == 1;
    }
    bool is_integer() const {
      return value_.get_den() == 1;
    }
    int sign() const {
      return sgn(value_);
    }
    // Precondition: is_integer() and the value fits.
    std::int64_t to_int() const;
    // Largest integer <= value.
    std::int64_t floor() const;

    mpq_class const& mpq() const {
      return value_;
    }

    Rational operator-() const {
      return Rational(mpq_class(-value_));
    }
    Rational& operator+=(Rational const& o) {
      value_ += o.value_;
      return *this;
    }
    Rational& operator-=(Rational const& o) {
      value_ -= o.value_;
      return *this;
    }
    Rational& operator*=(Rational const& o) {
      value_ *= o.value_;
      return *this;
    }
    // Throws std::domain_error on division by zero.
    Rational& operator/=(Rational const& o);

    friend Rational operator+(Rational a, Rational const& b) {
      return a += b;
    }
    friend Rational operator-(Rational a, Rational const& b) {
      return a -= b;
    }
    friend Rational operator*(Rational a, Rational const& b) {
      return a *= b;
    }
    friend Rational operator/(Rational a, Rational const& b) {
      return a /= b;
    }
    friend bool operator==(Rational const& a, Rational const& b) {
      return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b) {
      int c = cmp(a.value_, b.value_);
      return c < 0   ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::size_t hash() const;

   private:
    mpq_class value_;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& r);

  // n(n-1)...(n-s+1)/s!, defined for every integer n and s >= 0. Negative s
  // yields 0 so that sums may run past their natural range.
  Rational generalized_binomial(std::int64_t n, std::int64_t s);

  // Same value as an exact integer; n(n-1)...(n-s+1)/s! is always integral.
  std::int64_t binomial_int(std::int64_t n, std::int64_t s);

  Rational factorial(std::int64_t n);

}  // namespace vgsb

template <>
struct std::hash<vgsb::Rational> {
  std::size_t operator()(vgsb::Rational const& r) const {
    return r.hash();
  }
};

#endif  // VGSB_RATIONAL_HPP_
