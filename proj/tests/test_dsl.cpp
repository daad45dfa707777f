#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "vgsb/builtins.hpp"
#include "vgsb/dsl.hpp"
#include "vgsb/errors.hpp"

using namespace vgsb;
namespace fs = std::filesystem;

namespace {
  std::string slurp(fs::path const& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::vector<std::string> split_args(std::string const& s) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    bool any = false;
    for (char c : s) {
      if (c == '"') {
        quoted = !quoted;
        any = true;
      } else if (c == ' ' && !quoted) {
        if (any) {
          out.push_back(cur);
        }
        cur.clear();
        any = false;
      } else {
        cur += c;
        any = true;
      }
    }
    if (any) {
      out.push_back(cur);
    }
    return out;
  }

  struct Case {
    std::string name;
    std::vector<std::string> args;
  };

  std::vector<Case> manifest() {
    std::ifstream in("tests/golden/manifest.txt");
    std::vector<Case> out;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') {
        continue;
      }
      auto colon = line.find(':');
      out.push_back({line.substr(0, colon), split_args(line.substr(colon + 1))});
    }
    return out;
  }

  std::pair<int, std::string> run(std::vector<std::string> const& args) {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run_command(args, in, out, err);
    return {code, out.str()};
  }
}  // namespace

TEST_CASE("the Weyl example parses to the built-in presentation") {
  Document d = parse_document(
      "generators: x,y; locality: (x,x)=0,(y,y)=0,(x,y)=1; relation: x(0) y(-1) vac = vac;");
  CHECK(d.kind == DocKind::Vertex);
  CHECK(d.presentation.generators.size() == 2);
  CHECK(d.presentation.relations.size() == 1);
  RuleSystem sys = system_of(d);
  CHECK(reduce(parse_expr("x(0) y(-1) vac", sys.alphabet()), sys, 1000) == LinComb::vacuum());
}

TEST_CASE("the abelian example") {
  Document d = parse_document("generators: e; locality: (e,e)=0; relation: T e(-1) vac = 0 vac;");
  CHECK(d.presentation.relations.size() == 1);
  Alphabet a(d.presentation.generators);
  CHECK(parse_expr("T e(-1) vac", a) == d.presentation.relations[0]);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_document("generators: x; locality (x,x)=0");
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 25);
    CHECK(std::string(e.what()).find("'('") != std::string::npos);
  }
  try {
    parse_document("generators: x;\nrelation: x(0) q(-1) vac = vac;");
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 16);
  }
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_document("generators: x,y; locality: (x,y)=1,(y,x)=2;"), SemanticError);
  CHECK_THROWS_AS(parse_document("generators: x; relation: x(0) = 0 vac;"), SemanticError);
}

TEST_CASE("comments and the unicode minus") {
  Document a = parse_document("# c\ngenerators: x; locality: (x,x)=0; relation: x(-1) vac \xE2\x88\x92 x(-1) vac = 0 vac;");
  Document b = parse_document("generators: x; locality: (x,x)=0; relation: x(-1) vac - x(-1) vac = 0 vac;");
  CHECK(serialize(a) == serialize(b));
}

TEST_CASE("every example serializes to a fixed point") {
  int seen = 0;
  for (auto const& entry : fs::directory_iterator("examples")) {
    if (entry.path().extension() != ".vgsb") {
      continue;
    }
    ++seen;
    std::string once = serialize(parse_document(slurp(entry.path())));
    CHECK_MESSAGE(serialize(parse_document(once)) == once, entry.path().string());
  }
  CHECK(seen > 10);
}

TEST_CASE("built-in presentations survive a text round trip") {
  std::string s = serialize(document_of(weyl_presentation()));
  CHECK(serialize(parse_document(s)) == s);
}

TEST_CASE("commands are deterministic") {
  std::vector<std::string> args = {"forks", "examples/weyl.vgsb", "--window", "4", "--tails", "1", "--json"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.first == 0);
  CHECK(a.second == b.second);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"no-such-command"}).first == cli::kUsage);
  CHECK(run({"basis", "examples/weyl.vgsb"}).first == cli::kUsage);
}

TEST_CASE("golden outputs") {
  bool update = std::getenv("VGSB_UPDATE_GOLDEN") != nullptr;
  auto cases = manifest();
  CHECK(!cases.empty());
  std::set<std::string> referenced;
  for (auto const& c : cases) {
    for (auto const& a : c.args) {
      if (a.rfind("examples/", 0) == 0) {
        referenced.insert(a);
      }
    }
    auto [code, out] = run(c.args);
    fs::path golden = fs::path("tests/golden") / (c.name + ".json");
    if (update) {
      std::ofstream(golden) << out;
      continue;
    }
    REQUIRE_MESSAGE(fs::exists(golden), golden.string());
    CHECK_MESSAGE(out == slurp(golden), c.name);
    auto j = nlohmann::json::parse(out);
    CHECK(j["diagnostics"]["exit"] == code);
  }
  for (auto const& entry : fs::directory_iterator("examples")) {
    auto ext = entry.path().extension();
    if (ext == ".vgsb" || ext == ".json") {
      std::string rel = "examples/" + entry.path().filename().string();
      CHECK_MESSAGE(referenced.count(rel) == 1, rel);
    }
  }
}
