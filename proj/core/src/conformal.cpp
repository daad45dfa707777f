#include "vgsb/conformal.hpp"

#include "vgsb/errors.hpp"

namespace vgsb {

  TElement TElement::gen(int g, Rational c, int tpow) {
    TElement e;
    e.add(g, tpow, c);
    return e;
  }

  void TElement::add(int g, int tpow, Rational const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(Key{g, tpow}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  TElement& TElement::operator+=(TElement const& o) {
    for (auto const& [k, c] : o.terms_) {
      add(k.first, k.second, c);
    }
    return *this;
  }

  TElement& TElement::operator-=(TElement const& o) {
    for (auto const& [k, c] : o.terms_) {
      add(k.first, k.second, -c);
    }
    return *this;
  }

  TElement& TElement::operator*=(Rational const& c) {
    if (c.is_zero()) {
      terms_.clear();
    }
    for (auto& [k, v] : terms_) {
      v *= c;
    }
    return *this;
  }

  Rational TElement::coeff(int g, int tpow) const {
    auto it = terms_.find(Key{g, tpow});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int ConformalAlgebra::index(std::string const& n) const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].name == n) {
        return static_cast<int>(i);
      }
    }
    throw SemanticError("unknown generator '" + n + "'");
  }

  void ConformalAlgebra::set_bracket(int x, int y, Bracket b) {
    for (auto const& [k, c] : b.terms()) {
      if (k.second != 0) {
        throw SemanticError("bracket table entries must not depend on mu");
      }
      for (auto const& [gk, v] : c.terms()) {
        if (gk.first < 0 || gk.first >= static_cast<int>(gens_.size())) {
          throw SemanticError("bracket table refers to an unknown generator");
        }
      }
    }
    if (b.is_zero()) {
      table_.erase({x, y});
    } else {
      table_[{x, y}] = std::move(b);
    }
  }

  Bracket const& ConformalAlgebra::bracket(int x, int y) const {
    static const Bracket kZero;
    auto it = table_.find({x, y});
    return it == table_.end() ? kZero : it->second;
  }

  TElement ConformalAlgebra::apply_T(TElement const& a) const {
    TElement out;
    for (auto const& [k, c] : a.terms()) {
      int d = gens_[k.first].torsion;
      if (d > 0 && k.second + 1 >= d) {
        continue;
      }
      out.add(k.first, k.second + 1, c);
    }
    return out;
  }

  TAction<TElement> ConformalAlgebra::t_action() const {
    return [this](TElement const& a) { return apply_T(a); };
  }

  Bracket ConformalAlgebra::lambda_bracket(TElement const& a, TElement const& b) const {
    Bracket out;
    for (auto const& [ka, ca] : a.terms()) {
      for (auto const& [kb, cb] : b.terms()) {
        Bracket const& base = bracket(ka.first, kb.first);
        int i = ka.second;
        int j = kb.second;
        // (T^i x o T^j y) = (-lambda)^i (T + lambda)^j (x o y)
        Rational sign = i % 2 == 0 ? Rational(1) : Rational(-1);
        for (auto const& [key, c] : base.terms()) {
          for (int r = 0; r <= j; ++r) {
            TElement term = apply_T_power(t_action(), c, r);
            term *= sign * ca * cb * binomial_int(j, r);
            out.add(key.first + i + j - r, 0, term);
          }
        }
      }
    }
    return out;
  }

  TElement ConformalAlgebra::nth_product(int x, int y, int n) const {
    TElement c = bracket(x, y).coeff(n);
    c *= factorial(n);
    return c;
  }

  int ConformalAlgebra::locality(int x, int y) const {
    Bracket const& b = bracket(x, y);
    return b.is_zero() ? 0 : b.lambda_degree() + 1;
  }

  namespace {

    std::string signed_join(std::vector<std::pair<Rational, std::string>> const& parts) {
      if (parts.empty()) {
        return "0";
      }
      std::string out;
      for (auto const& [c, body] : parts) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
          out += c.sign() < 0 ? "-" : "";
        } else {
          out += c.sign() < 0 ? " - " : " + ";
        }
        if (!mag.is_one() || body.empty()) {
          out += mag.str();
          if (!body.empty()) {
            out += " ";
          }
        }
        out += body;
      }
      return out;
    }

  }  // namespace

  std::string ConformalAlgebra::element_str(TElement const& a) const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (auto const& [k, c] : a.terms()) {
      std::string body;
      if (k.second == 1) {
        body = "T ";
      } else if (k.second > 1) {
        body = "T^" + std::to_string(k.second) + " ";
      }
      parts.emplace_back(c, body + gens_[k.first].name);
    }
    return signed_join(parts);
  }

  std::string ConformalAlgebra::bracket_str(Bracket const& b) const {
    if (b.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [k, c] : b.terms()) {
      if (!out.empty()) {
        out += " + ";
      }
      if (k.first == 1) {
        out += "lambda ";
      } else if (k.first > 1) {
        out += "lambda^" + std::to_string(k.first) + " ";
      }
      if (k.second == 1) {
        out += "mu ";
      } else if (k.second > 1) {
        out += "mu^" + std::to_string(k.second) + " ";
      }
      out += "(" + element_str(c) + ")";
    }
    return out;
  }

  namespace {

    // (outer o (inner_l o inner_r)) with the outer bracket in lambda or mu
    // and the inner one in the other variable.
    Bracket nested(ConformalAlgebra const& c, int outer, int inner_l, int inner_r,
                   bool outer_is_lambda) {
      Bracket out;
      for (auto const& [k, coeff] : c.bracket(inner_l, inner_r).terms()) {
        Bracket o = c.lambda_bracket(TElement::gen(outer), coeff);
        for (auto const& [ko, v] : o.terms()) {
          if (outer_is_lambda) {
            out.add(ko.first, k.first, v);
          } else {
            out.add(k.first, ko.first, v);
          }
        }
      }
      return out;
    }

    // ((x o_lambda y) o_{lambda+mu} z)
    Bracket jacobi_rhs(ConformalAlgebra const& c, int x, int y, int z) {
      Bracket out;
      for (auto const& [k, d] : c.bracket(x, y).terms()) {
        Bracket p = c.lambda_bracket(d, TElement::gen(z));
        for (auto const& [kp, v] : p.terms()) {
          int deg = kp.first;
          for (int a = 0; a <= deg; ++a) {
            TElement term = v;
            term *= binomial_int(deg, a);
            out.add(k.first + a, deg - a, term);
          }
        }
      }
      return out;
    }

  }  // namespace

  AxiomReport check_conformal_axioms(ConformalAlgebra const& c) {
    AxiomReport rep;
    int n = static_cast<int>(c.size());
    auto const& g = c.generators();
    auto fail = [&](std::string msg) {
      rep.ok = false;
      rep.violations.push_back(std::move(msg));
    };
    for (int x = 0; x < n; ++x) {
      if (g[x].torsion <= 0) {
        continue;
      }
      for (int y = 0; y < n; ++y) {
        if (!c.bracket(x, y).is_zero() || !c.bracket(y, x).is_zero()) {
          fail("torsion: generator " + g[x].name + " has a nonzero bracket with "
               + g[y].name);
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = x; y < n; ++y) {
        Bracket sum = c.bracket(x, y);
        sum += substitute_skew(c.bracket(y, x), c.t_action());
        if (!sum.is_zero()) {
          fail("skew symmetry: (" + g[x].name + " o_lambda " + g[y].name + ") + ("
               + g[y].name + " o_{-lambda-T} " + g[x].name + ") = " + c.bracket_str(sum));
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          Bracket d = nested(c, x, y, z, true);
          d -= nested(c, y, x, z, false);
          d -= jacobi_rhs(c, x, y, z);
          if (!d.is_zero()) {
            fail("Jacobi: (" + g[x].name + "," + g[y].name + "," + g[z].name
                 + ") defect " + c.bracket_str(d));
          }
        }
      }
    }
    return rep;
  }

  NovikovAlgebra NovikovAlgebra::zero(std::vector<std::string> names) {
    NovikovAlgebra v;
    std::size_t d = names.size();
    v.names = std::move(names);
    v.product.assign(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d)));
    return v;
  }

  void NovikovAlgebra::set(int i, int j, int k, Rational c) {
    product.at(i).at(j).at(k) = std::move(c);
  }

  namespace {

    using Vec = std::vector<Rational>;

    Vec mul(NovikovAlgebra const& v, Vec const& a, Vec const& b) {
      std::size_t d = v.dim();
      Vec out(d);
      for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
          if (b[j].is_zero()) {
            continue;
          }
          Rational f = a[i] * b[j];
          for (std::size_t k = 0; k < d; ++k) {
            out[k] += f * v.product[i][j][k];
          }
        }
      }
      return out;
    }

    Vec basis(std::size_t d, std::size_t i) {
      Vec e(d);
      e[i] = Rational(1);
      return e;
    }

    Vec sub(Vec a, Vec const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= b[i];
      }
      return a;
    }

  }  // namespace

  std::vector<NovikovFailure> check_novikov(NovikovAlgebra const& v) {
    std::vector<NovikovFailure> out;
    std::size_t d = v.dim();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          Vec u = basis(d, i);
          Vec w = basis(d, j);
          Vec z = basis(d, k);
          Vec uw_z = mul(v, mul(v, u, w), z);
          Vec assoc1 = sub(uw_z, mul(v, u, mul(v, w, z)));
          Vec assoc2 = sub(mul(v, mul(v, w, u), z), mul(v, w, mul(v, u, z)));
          int a = static_cast<int>(i);
          int b = static_cast<int>(j);
          int c = static_cast<int>(k);
          if (assoc1 != assoc2) {
            out.push_back({a, b, c, "left-symmetric"});
          }
          if (uw_z != mul(v, mul(v, u, z), w)) {
            out.push_back({a, b, c, "right-commutative"});
          }
        }
      }
    }
    return out;
  }

  ConformalAlgebra quadratic_conformal(NovikovAlgebra const& v) {
    auto bad = check_novikov(v);
    if (!bad.empty()) {
      auto const& f = bad.front();
      throw NovikovViolation(f.identity + " identity fails at (" + v.names[f.u] + ","
                             + v.names[f.v] + "," + v.names[f.w] + ")");
    }
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      Generator g;
      g.name = v.names[i];
      g.rank = static_cast<int>(i);
      gens.push_back(g);
    }
    ConformalAlgebra c(gens);
    int d = static_cast<int>(v.dim());
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        Bracket b;
        TElement t0;
        TElement t1;
        for (int k = 0; k < d; ++k) {
          t0.add(k, 1, v.product[j][i][k]);
          t1.add(k, 0, v.product[i][j][k] + v.product[j][i][k]);
        }
        b.add(0, 0, t0);
        b.add(1, 0, t1);
        c.set_bracket(i, j, std::move(b));
      }
    }
    return c;
  }

  ConformalAlgebra build_central_extension(
      ConformalAlgebra const& base, std::vector<CentralGenerator> const& central,
      std::vector<std::pair<std::pair<std::string, std::string>, Bracket>> const& cocycle) {
    std::vector<Generator> gens = base.generators();
    for (auto const& cg : central) {
      if (cg.torsion < 0) {
        throw SemanticError("negative torsion degree");
      }
      Generator g;
      g.name = cg.name;
      g.rank = static_cast<int>(gens.size());
      g.weight = cg.weight;
      g.central = true;
      g.torsion = cg.torsion;
      gens.push_back(g);
    }
    ConformalAlgebra c(gens);
    c.name = base.name;
    int n = static_cast<int>(base.size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        c.set_bracket(x, y, base.bracket(x, y));
      }
    }
    for (auto const& [pair, phi] : cocycle) {
      int x = c.index(pair.first);
      int y = c.index(pair.second);
      for (auto const& [k, v] : phi.terms()) {
        for (auto const& [gk, coef] : v.terms()) {
          if (!gens[gk.first].central) {
            throw SemanticError("cocycle values must lie in the central part");
          }
        }
      }
      Bracket b = c.bracket(x, y);
      b += phi;
      c.set_bracket(x, y, std::move(b));
    }
    AxiomReport rep = check_conformal_axioms(c);
    if (!rep.ok) {
      throw AxiomViolation("central extension fails the axioms: " + rep.violations.front());
    }
    return c;
  }

  namespace {

    Generator plain(std::string name, int rank, std::optional<Rational> weight) {
      Generator g;
      g.name = std::move(name);
      g.rank = rank;
      g.weight = std::move(weight);
      return g;
    }

    Bracket constant_bracket(TElement c, int lambda_pow = 0) {
      Bracket b;
      b.add(lambda_pow, 0, c);
      return b;
    }

    // Rank-2 abelian x, y plus central e: (x o y) = e, (y o x) = -e.
    ConformalAlgebra pair_extension(int torsion, std::optional<Rational> weight,
                                    std::optional<Rational> e_weight, std::string name) {
      ConformalAlgebra base({plain("x", 0, weight), plain("y", 1, weight)});
      int e = 2;
      ConformalAlgebra c = build_central_extension(
          base, {{"e", torsion, e_weight}},
          {{{"x", "y"}, constant_bracket(TElement::gen(e))},
           {{"y", "x"}, constant_bracket(TElement::gen(e, Rational(-1)))}});
      c.name = std::move(name);
      return c;
    }

  }  // namespace

  NovikovAlgebra virasoro_novikov() {
    NovikovAlgebra v = NovikovAlgebra::zero({"v"});
    v.set(0, 0, 0, Rational(1));
    return v;
  }

  NovikovAlgebra schrodinger_virasoro_novikov() {
    NovikovAlgebra v = NovikovAlgebra::zero({"v", "u", "w"});
    v.set(0, 0, 0, Rational(1));
    v.set(0, 1, 1, Rational(1, 2));
    v.set(1, 0, 1, Rational(1));
    v.set(1, 1, 2, Rational(1));
    v.set(2, 0, 2, Rational(1));
    return v;
  }

  ConformalAlgebra virasoro() {
    ConformalAlgebra q = quadratic_conformal(virasoro_novikov());
    std::vector<Generator> gens = q.generators();
    gens[0].weight = Rational(2);
    ConformalAlgebra c(gens);
    c.set_bracket(0, 0, q.bracket(0, 0));
    c.name = "virasoro";
    return c;
  }

  ConformalAlgebra virasoro_c(Rational const& cc) {
    ConformalAlgebra c = build_central_extension(
        virasoro(), {{"e", 1, Rational(0)}},
        {{{"v", "v"}, constant_bracket(TElement::gen(1, cc / Rational(12)), 3)}});
    c.name = "virasoro_c";
    return c;
  }

  ConformalAlgebra heisenberg(std::vector<Rational> const& f) {
    ConformalAlgebra base({plain("v", 0, Rational(1))});
    Bracket phi;
    for (std::size_t i = 0; i < f.size(); ++i) {
      phi.add(static_cast<int>(i), 0, TElement::gen(1, f[i]));
    }
    ConformalAlgebra c = build_central_extension(base, {{"e", 1, Rational(0)}},
                                                 {{{"v", "v"}, phi}});
    c.name = "heisenberg";
    return c;
  }

  ConformalAlgebra schrodinger_virasoro() {
    ConformalAlgebra c = quadratic_conformal(schrodinger_virasoro_novikov());
    c.name = "schrodinger_virasoro";
    return c;
  }

  ConformalAlgebra abelian(int k) {
    if (k < 1) {
      throw SemanticError("abelian: rank must be positive");
    }
    std::vector<Generator> gens;
    static const char* kSmall[] = {"x", "y", "z"};
    for (int i = 0; i < k; ++i) {
      std::string name = k == 1 ? "v" : k <= 3 ? kSmall[i] : "g" + std::to_string(i + 1);
      gens.push_back(plain(name, i, Rational(1)));
    }
    ConformalAlgebra c(gens);
    c.name = "abelian";
    return c;
  }

  ConformalAlgebra weyl_pair() {
    return pair_extension(1, Rational(1, 2), Rational(0), "weyl_pair");
  }

  ConformalAlgebra comm_pair() {
    return pair_extension(2, std::nullopt, std::nullopt, "comm_pair");
  }

}  // namespace vgsb
