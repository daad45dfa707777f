#ifndef VGSB_CONFORMAL_HPP_
#define VGSB_CONFORMAL_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vgsb/lambda.hpp"
#include "vgsb/rational.hpp"
#include "vgsb/word.hpp"

namespace vgsb {

  // Finite combination of T^k g over the generators of a conformal algebra.
  class TElement {
   public:
    using Key = std::pair<int, int>;  // (generator, power of T)

    TElement() = default;
    static TElement gen(int g, Rational c = Rational(1), int tpow = 0);

    void add(int g, int tpow, Rational const& c);
    TElement& operator+=(TElement const& o);
    TElement& operator-=(TElement const& o);
    TElement& operator*=(Rational const& c);
    friend TElement operator+(TElement a, TElement const& b) {
      return a += b;
    }
    friend TElement operator-(TElement a, TElement const& b) {
      return a -= b;
    }
    friend bool operator==(TElement const&, TElement const&) = default;

    bool is_zero() const {
      return terms_.empty();
    }
    std::map<Key, Rational> const& terms() const {
      return terms_;
    }
    Rational coeff(int g, int tpow = 0) const;

   private:
    std::map<Key, Rational> terms_;
  };

  using Bracket = LambdaPoly<TElement>;

  struct AxiomReport {
    bool ok = true;
    std::vector<std::string> violations;
  };

  class ConformalAlgebra {
   public:
    ConformalAlgebra() = default;
    explicit ConformalAlgebra(std::vector<Generator> gens) : gens_(std::move(gens)) {}

    std::vector<Generator> const& generators() const {
      return gens_;
    }
    std::size_t size() const {
      return gens_.size();
    }
    int index(std::string const& name) const;  // throws SemanticError
    Alphabet alphabet() const {
      return Alphabet(gens_);
    }

    // (x o_lambda y) for generators; unset entries are zero.
    void set_bracket(int x, int y, Bracket b);
    Bracket const& bracket(int x, int y) const;

    // T applied to an element; torsion generators lose powers >= torsion.
    TElement apply_T(TElement const& a) const;
    TAction<TElement> t_action() const;

    // Sesquilinear extension of the table.
    Bracket lambda_bracket(TElement const& a, TElement const& b) const;
    // n! times the lambda^n coefficient.
    TElement nth_product(int x, int y, int n) const;
    int locality(int x, int y) const;

    std::string element_str(TElement const& a) const;
    std::string bracket_str(Bracket const& b) const;

    std::string name;

   private:
    std::vector<Generator> gens_;
    std::map<std::pair<int, int>, Bracket> table_;
  };

  // Skew symmetry on all pairs, Jacobi on all triples, and the torsion
  // compatibility of brackets with torsion generators.
  AxiomReport check_conformal_axioms(ConformalAlgebra const& c);

  struct NovikovAlgebra {
    std::vector<std::string> names;
    // product[i][j][k]: coefficient of e_k in e_i o e_j.
    std::vector<std::vector<std::vector<Rational>>> product;

    std::size_t dim() const {
      return names.size();
    }
    static NovikovAlgebra zero(std::vector<std::string> names);
    void set(int i, int j, int k, Rational c);
  };

  struct NovikovFailure {
    int u = 0;
    int v = 0;
    int w = 0;
    std::string identity;  // "left-symmetric" or "right-commutative"
  };

  // Both identities on every basis triple. Empty when the algebra passes.
  std::vector<NovikovFailure> check_novikov(NovikovAlgebra const& v);

  // (u o_lambda v) = T(v o u) + lambda (u o v + v o u). Throws NovikovViolation.
  ConformalAlgebra quadratic_conformal(NovikovAlgebra const& v);

  struct CentralGenerator {
    std::string name;
    int torsion = 1;
    std::optional<Rational> weight;
  };

  // Appends the central generators and adds cocycle(x, y) to (x o_lambda y)
  // for the given generator pairs (names). Throws AxiomViolation when the
  // result fails check_conformal_axioms.
  ConformalAlgebra build_central_extension(
      ConformalAlgebra const& base, std::vector<CentralGenerator> const& central,
      std::vector<std::pair<std::pair<std::string, std::string>, Bracket>> const& cocycle);

  NovikovAlgebra virasoro_novikov();
  NovikovAlgebra schrodinger_virasoro_novikov();

  ConformalAlgebra virasoro();
  ConformalAlgebra virasoro_c(Rational const& c);
  // (v o_lambda v) = f(lambda) e with f given by its coefficients f[i] of lambda^i.
  ConformalAlgebra heisenberg(std::vector<Rational> const& f);
  ConformalAlgebra schrodinger_virasoro();
  ConformalAlgebra abelian(int k);
  // x, y, central e (Te = 0): (x o_lambda y) = e, (y o_lambda x) = -e.
  ConformalAlgebra weyl_pair();
  // x, y, central e with T^2 e = 0: (x o_lambda y) = e, (y o_lambda x) = -e.
  ConformalAlgebra comm_pair();

}  // namespace vgsb

#endif  // VGSB_CONFORMAL_HPP_
