#include "vgsb/rational.hpp"

#include <stdexcept>

#include "vgsb/errors.hpp"

namespace vgsb {

  Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
  }

  Rational Rational::parse(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) {
      ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) {
      --e;
    }
    std::string s(text.substr(b, e - b));
    if (!s.empty() && s[0] == '+') {
      s.erase(0, 1);
    }
    auto valid = [](std::string const& part, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && i < part.size() && part[i] == '-') {
        ++i;
      }
      if (i == part.size()) {
        return false;
      }
      for (; i < part.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
          return false;
        }
      }
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num, true) || !valid(den, false)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(n, d));
  }

  std::string Rational::str() const {
    if (value_.get_den() == 1) {
      return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  std::int64_t Rational::to_int() const {
    if (!is_integer() || !value_.get_num().fits_slong_p()) {
      throw std::domain_error("Rational::to_int: not a machine integer");
    }
    return value_.get_num().get_si();
  }

  Rational& Rational::operator/=(Rational const& o) {
    if (o.is_zero()) {
      throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
  }

  std::size_t Rational::hash() const {
    std::size_t h = 0;
    auto mix = [&h](mpz_class const& z) {
      std::size_t n = mpz_size(z.get_mpz_t());
      std::size_t v = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
      for (std::size_t i = 0; i < n; ++i) {
        v = v * 0x9E3779B97F4A7C15ULL + mpz_getlimbn(z.get_mpz_t(), i);
      }
      h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    };
    mix(value_.get_num());
    mix(value_.get_den());
    return h;
  }

  std::ostream& operator<<(std::ostream& os, Rational const& r) {
    return os << r.str();
  }

  Rational generalized_binomial(std::int64_t n, std::int64_t s) {
    if (s < 0) {
      return Rational(0);
    }
    mpz_class num = 1;
    mpz_class den = 1;
    for (std::int64_t i = 0; i < s; ++i) {
      num *= static_cast<long>(n - i);
      den *= static_cast<long>(i + 1);
    }
    return Rational(mpq_class(num, den));
  }

  std::int64_t binomial_int(std::int64_t n, std::int64_t s) {
    return generalized_binomial(n, s).to_int();
  }

  Rational factorial(std::int64_t n) {
    mpz_class f = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
      f *= static_cast<long>(i);
    }
    return Rational(mpq_class(f));
  }

  std::int64_t Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q.get_si();
  }

}  // namespace vgsb
