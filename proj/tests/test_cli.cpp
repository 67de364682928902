#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "equidouble/catalogue.hpp"
#include "equidouble/cli.hpp"
#include "equidouble/errors.hpp"

using namespace equidouble;
using json = nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "equidouble");
  std::ostringstream out, err;
  int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

json report(const std::vector<std::string>& args) {
  auto r = invoke(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto p = std::filesystem::temp_directory_path() / ("equidouble_test_" + name);
  std::ofstream(p) << contents;
  return p;
}

// commuting triples in a table, by brute force
long commuting_triples(const FiniteGroup& g) {
  long n = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int c = 0; c < g.order(); ++c)
        if (g.mul(a, b) == g.mul(b, a) && g.mul(a, c) == g.mul(c, a) && g.mul(b, c) == g.mul(c, b)) ++n;
  return n;
}

}  // namespace

TEST_CASE("dw on the 3-torus") {
  auto s3 = catalogue::group("S3");
  auto j = report({"dw", "--presentation", "T3", "--group", "S3"});
  CHECK(j["schema"] == 1);
  CHECK(j["status"] == "pass");
  CHECK(j["anchor"].is_string());
  CHECK(j["homs"] == commuting_triples(*s3));
  CHECK(j["invariant"] == std::to_string(commuting_triples(*s3) / 6));
}

TEST_CASE("dw on surfaces reports the state space dimension") {
  auto j = report({"dw", "--presentation", "Sigma_g", "--genus", "1", "--group", "S3"});
  CHECK(j["surface_state_dim"] == 8);
  auto z = report({"dw", "--presentation", "S3sphere", "--group", "Q8"});
  CHECK(z["invariant"] == "1/8");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({"double", "--group", "NoSuchGroup"}).code == cli::kExitUsage);
  CHECK(invoke({"jdouble", "--extension", "Z9-Z27"}).code == cli::kExitUsage);
  CHECK(invoke({"double"}).code == cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"double", "--group", "S3", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(invoke({"double", "--group", "S3", "--format", "csv"}).code == cli::kExitUsage);
  CHECK(invoke({"double", "--group", "S3", "--budget-dim", "0"}).code == cli::kExitUsage);
  CHECK(invoke({"cech", "--extension", "A3-S3", "--weak-action", "Z2-on-Z3-trivial"}).code == cli::kExitUsage);
  CHECK(invoke({"sectors", "--extension", "A3-S3", "--monodromy", "5"}).code == cli::kExitUsage);
  CHECK_THROWS_AS(cli::parse_args({"equidouble", "smatrix", "--group", "Nope"}), UsageError);
  cli::RunConfig c;
  c.command = "nothing";
  CHECK(cli::run(c).exit_code == cli::kExitUsage);
}

TEST_CASE("help exits cleanly") {
  auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-all") != std::string::npos);
}

TEST_CASE("budgets exit with 3") {
  CHECK(invoke({"double", "--group", "S4", "--budget-dim", "100"}).code == cli::kExitResource);
  CHECK(invoke({"dw", "--presentation", "T3", "--group", "S4", "--budget-homs", "10"}).code == cli::kExitResource);
  CHECK(invoke({"smatrix", "--group", "D4", "--budget-dim", "63"}).code == cli::kExitResource);
}

TEST_CASE("catalogue listing") {
  auto j = report({"catalogue"});
  auto has = [](const json& arr, const std::string& name) {
    for (auto& x : arr) {
      if ((x.is_string() && x == name) || (x.is_object() && x["name"] == name)) return true;
    }
    return false;
  };
  CHECK(has(j["extensions"], "A3-S3"));
  CHECK(has(j["extensions"], "Z2-Z4"));
  CHECK(has(j["presentations"], "T3"));
  CHECK(has(j["groups"], "Q8"));
  CHECK(has(j["nerves"], "circle3"));
}

TEST_CASE("double and jdouble reports") {
  auto d = report({"double", "--group", "S3"});
  CHECK(d["dim"] == 36);
  CHECK(d["hopf"].size() == 10);
  for (auto& a : d["hopf"]) CHECK(a["status"] == "pass");
  for (auto& a : d["ribbon"]) CHECK(a["status"] == "pass");
  auto jd = report({"jdouble", "--extension", "A3-S3"});
  CHECK(jd["dim"] == 18);
  REQUIRE(jd["grading"].size() == 2);
  CHECK(jd["grading"][0]["dim"] == 9);
  CHECK(jd["grading"][1]["dim"] == 9);
  CHECK(jd["restriction"][0]["status"] == "pass");
  auto sampled = report({"double", "--group", "D4", "--sampled"});
  bool any_sampled = false;
  for (auto& a : sampled["hopf"]) any_sampled = any_sampled || a["status"] == "sampled";
  CHECK(any_sampled);
}

TEST_CASE("orbifold report with psi") {
  auto j = report({"orbifold", "--extension", "Z2-Z4", "--check-psi"});
  CHECK(j["dim"] == 16);
  REQUIRE(j["psi"].size() == 5);
  CHECK(j["psi"][0]["axiom"] == "bijective");
  CHECK(j["splitting_diagnostic"]["outcome"] == "none_among_candidates");
  auto plain = report({"orbifold", "--extension", "A3-S3"});
  CHECK_FALSE(plain.contains("psi"));
  CHECK(plain["splitting_diagnostic"]["outcome"] == "found");
}

TEST_CASE("S-matrix as CSV and JSON") {
  auto r = invoke({"smatrix", "--group", "S3", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 9);
  CHECK(lines[1].substr(0, 2) == "1,");
  auto j = report({"smatrix", "--group", "Z3"});
  CHECK(j["labels"].size() == 9);
  CHECK(j["entries"][0][0] == json{{"conductor", 1}, {"coeffs", {"1"}}});
  CHECK(j["entries"][4][4]["conductor"] == 3);
  CHECK_FALSE(j.contains("__csv"));
}

TEST_CASE("simples, sectors and cech") {
  auto s = report({"simples", "--extension", "A3-S3"});
  CHECK(s["count"] == 10);
  CHECK(s["sum_of_squared_dims"] == 18);
  auto d = report({"simples", "--group", "S3"});
  CHECK(d["count"] == 8);
  auto sec = report({"sectors", "--extension", "A3-S3"});
  REQUIRE(sec["sectors"].size() == 2);
  CHECK(sec["sectors"][1]["coset_groupoid"]["orbits"] == 1);
  auto ce = report({"cech", "--extension", "A3-S3", "--monodromy", "1"});
  CHECK(ce["h1"][0]["classes"] == 1);
  auto wa = report({"cech", "--weak-action", "Z2-on-Z2-nonsplit", "--nerve", "point"});
  CHECK(wa["h1"][0]["classes"] == 1);
}

TEST_CASE("verify-all is deterministic across thread counts") {
  auto first = invoke({"verify-all", "--extension", "A3-S3"});
  REQUIRE(first.code == 0);
  auto j = json::parse(first.out);
  for (auto key : {"hopf", "jhopf", "psi", "diagrams", "modularity"}) CHECK(j.contains(key));
  CHECK(j["modularity"]["j_modular"] == true);
  setenv("EQUIDOUBLE_THREADS", "1", 1);
  auto second = invoke({"verify-all", "--extension", "A3-S3"});
  unsetenv("EQUIDOUBLE_THREADS");
  CHECK(second.out == first.out);
  auto cat = invoke({"verify-category", "--extension", "Z2-Z4"});
  CHECK(cat.code == 0);
}

TEST_CASE("file inputs") {
  auto g = temp_file("z3.json", R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]], "labels": ["e","a","b"]})");
  auto j = report({"dw", "--presentation", "S2xS1", "--group", g.string()});
  CHECK(j["invariant"] == "1");
  auto p = temp_file("torus.json", R"({"generators": 2, "relations": [[1,2,-1,-2]]})");
  CHECK(report({"dw", "--presentation", p.string(), "--group", "S3"})["invariant"] == "3");
  auto e = temp_file("ext.json", R"({"group": "Z4", "kernel": [0, 2], "name": "mine"})");
  CHECK(report({"jdouble", "--extension", e.string()})["extension"]["name"] == "mine");
  auto bad = temp_file("bad.json", R"({"order": 2, "table": [[0,1],[1,1]]})");
  CHECK(invoke({"double", "--group", bad.string()}).code == cli::kExitUsage);
  auto junk = temp_file("junk.json", "{not json");
  CHECK(invoke({"double", "--group", junk.string()}).code == cli::kExitUsage);
  for (auto& f : {g, p, e, bad, junk}) std::filesystem::remove(f);
}

TEST_CASE("--out writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "equidouble_test_out.json";
  auto r = invoke({"catalogue", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(json::parse(ss.str())["command"] == "catalogue");
  std::filesystem::remove(path);
}

TEST_CASE("text format") {
  auto r = invoke({"sectors", "--extension", "Z2-Z4", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("schema: 1") == 0);
}
