#include <random>

#include "doctest.h"
#include "vgsb/dsl.hpp"
#include "vgsb/lsym.hpp"

using namespace vgsb;

namespace {
  using Mat = std::vector<std::vector<Rational>>;

  std::optional<Mat> inverse(Mat m) {
    std::size_t n = m.size();
    Mat inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      inv[i][i] = Rational(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m[p][c].is_zero()) {
        ++p;
      }
      if (p == n) {
        return std::nullopt;
      }
      std::swap(m[p], m[c]);
      std::swap(inv[p], inv[c]);
      Rational s = Rational(1) / m[c][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[c][j] *= s;
        inv[c][j] *= s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r != c && !m[r][c].is_zero()) {
          Rational f = m[r][c];
          for (std::size_t j = 0; j < n; ++j) {
            m[r][j] -= f * m[c][j];
            inv[r][j] -= f * inv[c][j];
          }
        }
      }
    }
    return inv;
  }

  // t, t^2, t^3 in Q[t]/(t^4), rewritten in the basis f_i = sum_k P[i][k] e_k.
  LeftSymmetricAlgebra truncated_poly(Mat const& p, Mat const& pinv) {
    auto e_mul = [](int i, int j) {
      std::vector<Rational> out(3);
      if (i + j + 2 <= 3) {
        out[static_cast<std::size_t>(i + j + 1)] = Rational(1);
      }
      return out;
    };
    LeftSymmetricAlgebra a = LeftSymmetricAlgebra::zero({"a", "b", "c"});
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        std::vector<Rational> acc(3);
        for (int k = 0; k < 3; ++k) {
          for (int l = 0; l < 3; ++l) {
            Rational s = p[i][k] * p[j][l];
            if (s.is_zero()) {
              continue;
            }
            auto kl = e_mul(k, l);
            for (int m = 0; m < 3; ++m) {
              acc[m] += s * kl[m];
            }
          }
        }
        for (int r = 0; r < 3; ++r) {
          Rational c;
          for (int m = 0; m < 3; ++m) {
            c += acc[m] * pinv[m][r];
          }
          a.set(i, j, r, GammaPoly(c));
        }
      }
    }
    return a;
  }
}  // namespace

TEST_CASE("commutative associative tables have no obstruction") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  int built = 0;
  while (built < 10) {
    Mat p(3, std::vector<Rational>(3));
    for (auto& row : p) {
      for (auto& x : row) {
        x = Rational(d(rng));
      }
    }
    auto pinv = inverse(p);
    if (!pinv) {
      continue;
    }
    ++built;
    LeftSymmetricAlgebra a = truncated_poly(p, *pinv);
    CHECK(lsym_check(a).empty());
    CHECK(lcs_class(a) == 1);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(a.mul(a.basis(i), a.basis(j)) == a.mul(a.basis(j), a.basis(i)));
        for (int k = 0; k < 3; ++k) {
          LsElement o = embedding_obstruction(a, a.basis(i), a.basis(j), a.basis(k));
          for (auto const& c : o) {
            CHECK(c.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("the obstruction is trilinear") {
  LeftSymmetricAlgebra a = gamma_family();
  LsElement x = a.basis(a.index("x"));
  LsElement y = a.basis(a.index("y"));
  LsElement z = a.basis(a.index("z"));
  LsElement xy(3);
  for (std::size_t k = 0; k < 3; ++k) {
    xy[k] = x[k] + GammaPoly(Rational(2)) * y[k];
  }
  auto lhs = embedding_obstruction(a, xy, x, z);
  auto r1 = embedding_obstruction(a, x, x, z);
  auto r2 = embedding_obstruction(a, y, x, z);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(lhs[k] == r1[k] + GammaPoly(Rational(2)) * r2[k]);
  }
  auto s = embedding_obstruction(a, x, x, x);
  CHECK(a.str(s) == "-3 z");
}

TEST_CASE("the gamma family is left-symmetric for every gamma") {
  LeftSymmetricAlgebra a = gamma_family();
  CHECK(a.symbolic());
  CHECK(lsym_check(a).empty());
  CHECK(lcs_class(a) == 2);
}

TEST_CASE("gamma polynomials render and parse back") {
  GammaPoly g = GammaPoly::gamma();
  std::vector<GammaPoly> samples = {GammaPoly(), GammaPoly(Rational(1)) - g, -g,
                                    GammaPoly(Rational(1, 2)) + GammaPoly(Rational(2)) * g * g,
                                    g * g * g - GammaPoly(Rational(-3, 7))};
  for (auto const& p : samples) {
    CHECK(parse_gamma(gamma_str(p)) == p);
  }
  CHECK(gamma_str(GammaPoly(Rational(1)) - g) == "1-g");
  CHECK(gamma_str(-g) == "-g");
  CHECK((g * g - GammaPoly(Rational(1))).eval(Rational(3)) == Rational(8));
}

TEST_CASE("lsym JSON round trip") {
  LeftSymmetricAlgebra a = gamma_family();
  nlohmann::json j = lsym_json(a);
  CHECK(lsym_json(parse_lsym(j)) == j);
}
