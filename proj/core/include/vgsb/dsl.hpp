#ifndef VGSB_DSL_HPP_
#define VGSB_DSL_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vgsb/conformal.hpp"
#include "vgsb/lincomb.hpp"
#include "vgsb/lsym.hpp"
#include "vgsb/presentation.hpp"
#include "vgsb/system.hpp"

namespace vgsb {

  enum class DocKind { Vertex, Conformal, Novikov };

  // One parsed .vgsb file.
  //
  //   file  := stmt*
  //   stmt  := "kind:" ("vertex" | "conformal" | "novikov") ";"
  //          | "name:" id ";"
  //          | "generators:" idlist ";"
  //          | "locality:" "(" id "," id ")" "=" nat {"," ...} ";"
  //          | "weight:" id "=" rational {"," ...} ";"
  //          | "central:" id ["torsion" nat] ";"
  //          | "order:" idlist ";"
  //          | "relation:" expr "=" expr ";"
  //          | "quotient:" expr "=" expr ";"
  //          | "system:" id ";"
  //          | "bracket:" "(" id "," id ")" "=" lexpr ";"
  //          | "product:" "(" id "," id ")" "=" nexpr ";"
  //   expr  := ["-"] term {("+" | "-") term}
  //   term  := [rational] factor+
  //   factor:= id "(" int ")" | "T" | "vac"
  //   lexpr := ["-"] lterm {("+" | "-") lterm}
  //   lterm := [rational] {"lambda" ["^" nat] | "T" ["^" nat]} id
  //   nexpr := ["-"] [rational] id {("+" | "-") [rational] id}
  //
  // '#' starts a comment. Relations must end in vac on every term.
  struct Document {
    DocKind kind = DocKind::Vertex;
    std::string name;
    std::vector<Generator> generators;

    // Vertex: presentation.generators == generators.
    VertexPresentation presentation;
    std::string system;  // "", "weyl" or "abelian"

    // Conformal: brackets keyed by generator indices.
    std::vector<std::pair<std::pair<int, int>, Bracket>> brackets;

    // Novikov: product[i][j] as coefficients over the generators.
    std::vector<std::pair<std::pair<int, int>, std::vector<Rational>>> products;

    // lhs word -> rhs, applied after the rules are built.
    std::vector<std::pair<Word, LinComb>> quotients;
  };

  Document parse_document(std::string_view src);
  std::string serialize(Document const& d);

  // Expression in the relation grammar over an alphabet.
  LinComb parse_expr(std::string_view src, Alphabet const& a);

  ConformalAlgebra conformal_of(Document const& d);
  NovikovAlgebra novikov_of(Document const& d);
  Document document_of(ConformalAlgebra const& c);
  Document document_of(NovikovAlgebra const& v);
  Document document_of(VertexPresentation const& p);

  // Rule system of a vertex or conformal document (envelope for the latter),
  // quotients applied. Throws SemanticError for Novikov documents.
  RuleSystem system_of(Document const& d);

  // {"dim": d, "basis": [...], "mult": [i][j][k]}; entries are rationals
  // (numbers or "p/q") or gamma-polynomials written "a+b*g+c*g^2".
  LeftSymmetricAlgebra parse_lsym(nlohmann::json const& j);
  nlohmann::json lsym_json(LeftSymmetricAlgebra const& a);
  GammaPoly parse_gamma(std::string_view s);
  std::string gamma_str(GammaPoly const& p);

}  // namespace vgsb

#endif  // VGSB_DSL_HPP_
