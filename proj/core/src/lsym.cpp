#include "vgsb/lsym.hpp"

#include <algorithm>
#include <iterator>

#include "vgsb/errors.hpp"
#include "vgsb/reducer.hpp"

namespace vgsb {

  GammaPoly::GammaPoly(Rational c) {
    if (!c.is_zero()) {
      c_[0] = c;
    }
  }

  GammaPoly GammaPoly::gamma() {
    GammaPoly g;
    g.c_[1] = Rational(1);
    return g;
  }

  GammaPoly& GammaPoly::operator+=(GammaPoly const& o) {
    for (auto const& [k, v] : o.c_) {
      Rational& r = c_[k];
      r += v;
      if (r.is_zero()) {
        c_.erase(k);
      }
    }
    return *this;
  }

  GammaPoly& GammaPoly::operator-=(GammaPoly const& o) {
    return *this += -o;
  }

  GammaPoly& GammaPoly::operator*=(GammaPoly const& o) {
    GammaPoly out;
    for (auto const& [i, a] : c_) {
      for (auto const& [j, b] : o.c_) {
        GammaPoly t;
        t.c_[i + j] = a * b;
        out += t;
      }
    }
    *this = std::move(out);
    return *this;
  }

  GammaPoly GammaPoly::operator-() const {
    GammaPoly out = *this;
    for (auto& [k, v] : out.c_) {
      v = -v;
    }
    return out;
  }

  int GammaPoly::degree() const {
    return c_.empty() ? -1 : c_.rbegin()->first;
  }

  Rational GammaPoly::coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
  }

  Rational GammaPoly::eval(Rational const& g) const {
    Rational out(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      int next = std::next(it) == c_.rend() ? 0 : std::next(it)->first;
      out += it->second;
      for (int e = it->first; e > next; --e) {
        out *= g;
      }
    }
    return out;
  }

  std::string GammaPoly::str() const {
    if (c_.empty()) {
      return "0";
    }
    std::string s;
    for (auto const& [k, v] : c_) {
      Rational a = v;
      if (s.empty()) {
        if (a.sign() < 0) {
          s = "-";
          a = -a;
        }
      } else {
        s += a.sign() < 0 ? " - " : " + ";
        if (a.sign() < 0) {
          a = -a;
        }
      }
      if (k == 0) {
        s += a.str();
        continue;
      }
      if (!a.is_one()) {
        s += a.str() + " ";
      }
      s += k == 1 ? "gamma" : "gamma^" + std::to_string(k);
    }
    return s;
  }

  LeftSymmetricAlgebra LeftSymmetricAlgebra::zero(std::vector<std::string> names) {
    LeftSymmetricAlgebra a;
    std::size_t d = names.size();
    a.names = std::move(names);
    a.product.assign(d, std::vector<LsElement>(d, LsElement(d)));
    return a;
  }

  void LeftSymmetricAlgebra::set(int i, int j, int k, GammaPoly c) {
    product.at(i).at(j).at(k) = std::move(c);
  }

  int LeftSymmetricAlgebra::index(std::string const& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) {
        return static_cast<int>(i);
      }
    }
    throw SemanticError("unknown basis element '" + name + "'");
  }

  bool LeftSymmetricAlgebra::symbolic() const {
    for (auto const& row : product) {
      for (auto const& e : row) {
        for (auto const& c : e) {
          if (c.degree() > 0) {
            return true;
          }
        }
      }
    }
    return false;
  }

  LeftSymmetricAlgebra LeftSymmetricAlgebra::specialize(Rational const& g) const {
    LeftSymmetricAlgebra out = *this;
    for (auto& row : out.product) {
      for (auto& e : row) {
        for (auto& c : e) {
          c = GammaPoly(c.eval(g));
        }
      }
    }
    return out;
  }

  LsElement LeftSymmetricAlgebra::basis(int i) const {
    LsElement e(dim());
    e.at(i) = GammaPoly(1);
    return e;
  }

  LsElement LeftSymmetricAlgebra::mul(LsElement const& a, LsElement const& b) const {
    std::size_t d = dim();
    LsElement out(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (b[j].is_zero()) {
          continue;
        }
        GammaPoly ab = a[i] * b[j];
        for (std::size_t k = 0; k < d; ++k) {
          if (!product[i][j][k].is_zero()) {
            out[k] += ab * product[i][j][k];
          }
        }
      }
    }
    return out;
  }

  LsElement LeftSymmetricAlgebra::commutator(LsElement const& a, LsElement const& b) const {
    LsElement out = mul(a, b);
    LsElement ba = mul(b, a);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] -= ba[k];
    }
    return out;
  }

  std::string LeftSymmetricAlgebra::str(LsElement const& a) const {
    std::string s;
    for (std::size_t k = 0; k < a.size(); ++k) {
      GammaPoly const& c = a[k];
      if (c.is_zero()) {
        continue;
      }
      if (c.degree() > 0) {
        s += (s.empty() ? "(" : " + (") + c.str() + ") " + names[k];
        continue;
      }
      Rational v = c.coeff(0);
      if (s.empty()) {
        s = v.sign() < 0 ? "-" : "";
      } else {
        s += v.sign() < 0 ? " - " : " + ";
      }
      if (v.sign() < 0) {
        v = -v;
      }
      s += (v.is_one() ? "" : v.str() + " ") + names[k];
    }
    return s.empty() ? "0" : s;
  }

  namespace {

    bool is_zero(LsElement const& a) {
      for (auto const& c : a) {
        if (!c.is_zero()) {
          return false;
        }
      }
      return true;
    }

    LsElement combine(LsElement const& a, LsElement const& b, GammaPoly const& fb) {
      LsElement out = a;
      for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] += b[k] * fb;
      }
      return out;
    }

    // Fraction-free elimination over Q[gamma]; returns independent rows
    // spanning the same Q(gamma)-space.
    std::vector<LsElement> echelon(std::vector<LsElement> rows, std::size_t d) {
      std::vector<LsElement> out;
      for (std::size_t col = 0; col < d; ++col) {
        auto piv = std::find_if(rows.begin(), rows.end(),
                                [&](LsElement const& r) { return !r[col].is_zero(); });
        if (piv == rows.end()) {
          continue;
        }
        LsElement p = *piv;
        rows.erase(piv);
        for (auto& r : rows) {
          if (r[col].is_zero()) {
            continue;
          }
          GammaPoly f = r[col];
          LsElement scaled(d);
          for (std::size_t k = 0; k < d; ++k) {
            scaled[k] = r[k] * p[col];
          }
          r = combine(scaled, p, -f);
        }
        out.push_back(std::move(p));
      }
      return out;
    }

  }  // namespace

  std::vector<LsymFailure> lsym_check(LeftSymmetricAlgebra const& a) {
    std::vector<LsymFailure> out;
    int d = static_cast<int>(a.dim());
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          LsElement x = a.basis(i);
          LsElement y = a.basis(j);
          LsElement z = a.basis(k);
          LsElement lhs = combine(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)), GammaPoly(-1));
          LsElement rhs = combine(a.mul(a.mul(y, x), z), a.mul(y, a.mul(x, z)), GammaPoly(-1));
          LsElement defect = combine(lhs, rhs, GammaPoly(-1));
          if (!is_zero(defect)) {
            out.push_back(LsymFailure{i, j, k, defect});
          }
        }
      }
    }
    return out;
  }

  std::optional<int> lcs_class(LeftSymmetricAlgebra const& a) {
    std::size_t d = a.dim();
    if (d == 0) {
      return 0;
    }
    std::vector<LsElement> cur;
    for (std::size_t i = 0; i < d; ++i) {
      cur.push_back(a.basis(static_cast<int>(i)));
    }
    for (int c = 1;; ++c) {
      std::vector<LsElement> brackets;
      for (auto const& u : cur) {
        for (std::size_t j = 0; j < d; ++j) {
          brackets.push_back(a.commutator(u, a.basis(static_cast<int>(j))));
        }
      }
      std::vector<LsElement> next = echelon(std::move(brackets), d);
      if (next.empty()) {
        return c;
      }
      if (next.size() == cur.size()) {
        return std::nullopt;
      }
      cur = std::move(next);
    }
  }

  LsElement embedding_obstruction(LeftSymmetricAlgebra const& alg, LsElement const& a,
                                  LsElement const& b, LsElement const& c) {
    LsElement out = alg.commutator(alg.mul(a, b), c);
    out = combine(out, alg.commutator(alg.mul(b, c), a), GammaPoly(1));
    out = combine(out, alg.commutator(alg.mul(c, a), b), GammaPoly(1));
    return out;
  }

  LeftSymmetricAlgebra gamma_family() {
    LeftSymmetricAlgebra a = LeftSymmetricAlgebra::zero({"x", "y", "z"});
    GammaPoly g = GammaPoly::gamma();
    a.set(0, 0, 0, 1);
    a.set(0, 0, 1, 1);
    a.set(0, 1, 2, GammaPoly(1) - g);
    a.set(1, 0, 2, -g);
    a.set(1, 1, 2, g);
    return a;
  }

  VertexPresentation va1_presentation(LeftSymmetricAlgebra const& a) {
    if (a.symbolic()) {
      throw SemanticError("V(A,1) needs a numeric multiplication table; specialize gamma");
    }
    VertexPresentation p;
    int d = static_cast<int>(a.dim());
    for (int i = 0; i < d; ++i) {
      Generator g;
      g.name = a.names[i];
      g.rank = i;
      p.generators.push_back(g);
      for (int j = 0; j < d; ++j) {
        p.locality[{i, j}] = 1;
      }
    }
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        LinComb r(Word({Letter::mode_of(i, -1), Letter::mode_of(j, -1)}, true));
        for (int k = 0; k < d; ++k) {
          Rational c = a.product[i][j][k].coeff(0);
          if (!c.is_zero()) {
            r.add(Word({Letter::mode_of(k, -1)}, true), -c);
          }
        }
        p.relations.push_back(r);
      }
    }
    return p;
  }

  RuleSystem va1_system(LeftSymmetricAlgebra const& a, VA1Options const& opt) {
    RuleSystem sys = coefficient_rules(va1_presentation(a));
    sys.fuel = opt.fuel;
    sys.name = "V(A,1)";
    if (!opt.complete) {
      return sys;
    }
    CompletionOptions co;
    co.window = opt.window;
    co.max_length = opt.max_length;
    co.max_rounds = opt.max_rounds;
    co.fuel = opt.fuel;
    RuleSystem out = complete(sys, co).system;
    out.name = "V(A,1)";
    out.fuel = opt.fuel;
    return out;
  }

  LinComb reduce_in_VA1(LeftSymmetricAlgebra const& a, LinComb const& expr,
                        VA1Options const& opt) {
    if (!lsym_check(a).empty()) {
      throw SemanticError("V(A,1): algebra is not left-symmetric");
    }
    auto cls = lcs_class(a);
    if (!cls || *cls > 3) {
      throw SemanticError("V(A,1): commutator algebra is not 3-nilpotent");
    }
    RuleSystem sys = va1_system(a, opt);
    Reducer red(sys, opt.fuel);
    return red.reduce(expr);
  }

}  // namespace vgsb
