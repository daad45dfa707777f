#ifndef VGSB_LSYM_HPP_
#define VGSB_LSYM_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vgsb/completion.hpp"
#include "vgsb/lincomb.hpp"
#include "vgsb/presentation.hpp"
#include "vgsb/rational.hpp"

namespace vgsb {

  // Polynomial in one formal parameter gamma over Q.
  class GammaPoly {
   public:
    GammaPoly() = default;
    GammaPoly(Rational c);  // NOLINT(runtime/explicit)
    GammaPoly(std::int64_t c) : GammaPoly(Rational(c)) {}  // NOLINT(runtime/explicit)
    static GammaPoly gamma();

    GammaPoly& operator+=(GammaPoly const& o);
    GammaPoly& operator-=(GammaPoly const& o);
    GammaPoly& operator*=(GammaPoly const& o);
    friend GammaPoly operator+(GammaPoly a, GammaPoly const& b) {
      return a += b;
    }
    friend GammaPoly operator-(GammaPoly a, GammaPoly const& b) {
      return a -= b;
    }
    friend GammaPoly operator*(GammaPoly a, GammaPoly const& b) {
      return a *= b;
    }
    GammaPoly operator-() const;
    friend bool operator==(GammaPoly const&, GammaPoly const&) = default;

    bool is_zero() const {
      return c_.empty();
    }
    int degree() const;  // -1 for zero
    Rational coeff(int k) const;
    Rational eval(Rational const& g) const;
    // Ascending powers: "1 - gamma", "-3", "1/2 + 2 gamma^2".
    std::string str() const;

   private:
    std::map<int, Rational> c_;
  };

  using LsElement = std::vector<GammaPoly>;

  struct LeftSymmetricAlgebra {
    std::vector<std::string> names;
    // product[i][j][k]: coefficient of e_k in e_i e_j.
    std::vector<std::vector<LsElement>> product;

    std::size_t dim() const {
      return names.size();
    }
    static LeftSymmetricAlgebra zero(std::vector<std::string> names);
    void set(int i, int j, int k, GammaPoly c);
    int index(std::string const& name) const;  // throws SemanticError
    bool symbolic() const;
    LeftSymmetricAlgebra specialize(Rational const& g) const;

    LsElement basis(int i) const;
    LsElement mul(LsElement const& a, LsElement const& b) const;
    LsElement commutator(LsElement const& a, LsElement const& b) const;
    std::string str(LsElement const& a) const;
  };

  struct LsymFailure {
    int i = 0;
    int j = 0;
    int k = 0;
    // (x.y).z - x.(y.z) - (y.x).z + y.(x.z)
    LsElement defect;
  };

  // Left-symmetric identity on all basis triples, gamma kept symbolic.
  std::vector<LsymFailure> lsym_check(LeftSymmetricAlgebra const& a);

  // Nilpotency class of the commutator algebra over Q(gamma): the least c
  // with C^{c+1} = 0 where C^1 = A, C^{k+1} = [C^k, A]. nullopt when the
  // series stabilizes at a nonzero term.
  std::optional<int> lcs_class(LeftSymmetricAlgebra const& a);

  // [ab,c] + [bc,a] + [ca,b].
  LsElement embedding_obstruction(LeftSymmetricAlgebra const& alg, LsElement const& a,
                                  LsElement const& b, LsElement const& c);

  // xx = x+y, xy = (1-gamma)z, yx = -gamma z, yy = gamma z.
  LeftSymmetricAlgebra gamma_family();

  // Vert(X, N=1 | a(-1)b(-1)1 - (ab)(-1)1) over the basis of a numeric
  // algebra. Throws SemanticError for symbolic tables.
  VertexPresentation va1_presentation(LeftSymmetricAlgebra const& a);

  struct VA1Options {
    // false: only T, vacuum, locality and multiplication rules.
    bool complete = true;
    int window = 4;
    int max_length = 3;
    int max_rounds = 20;
    std::int64_t fuel = 1000000;
  };

  // Coefficient rules of va1_presentation, closed by bounded completion
  // when opt.complete is set.
  RuleSystem va1_system(LeftSymmetricAlgebra const& a, VA1Options const& opt = {});

  // Reduces expr in va1_system(a). Throws SemanticError unless a is numeric,
  // left-symmetric and of class <= 3.
  LinComb reduce_in_VA1(LeftSymmetricAlgebra const& a, LinComb const& expr,
                        VA1Options const& opt = {});

}  // namespace vgsb

#endif  // VGSB_LSYM_HPP_
