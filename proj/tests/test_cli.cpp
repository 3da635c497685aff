#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hcmcg/cli.hpp"
#include "hcmcg/cocycles.hpp"
#include "hcmcg/json_io.hpp"
#include "hcmcg/symplectic.hpp"

using namespace hcmcg;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_class(const std::string& name, const AffineSurfaceClass& c, bool translations) {
  std::ofstream(name) << class_to_json(c, translations).dump();
  return name;
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = call({"abelianization", "--g", "2", "--n", "7", "--group", "mcg", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"rank\":0,\"torsion\":[2,2]}\n");
  r = call({"boundary", "--n", "7", "--sgn", "0", "--chi2", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "Σ_Q\n");
}

TEST_CASE("abelianization variants") {
  CHECK(call({"abelianization", "--g", "1", "--n", "9"}).out == "(Z/2)^2 ⊕ Z/4 ⊕ Z/261632 ⊕ Z\n");
  CHECK(call({"--format", "json", "abelianization", "--g", "1", "--n", "5", "--group", "Gg"}).out ==
        "{\"rank\":1,\"torsion\":[4]}\n");
  CHECK(call({"abelianization", "--g", "0", "--n", "3", "--group", "theta"}).out == "Z/28\n");
  CHECK(call({"abelianization", "--g", "1", "--n", "7", "--group", "omega"}).out == "Z/2\n");
  CHECK(call({"abelianization", "--g", "1", "--n", "8", "--group", "spi"}).out == "(Z/2)^2\n");
  CHECK(call({"abelianization", "--g", "1", "--n", "9", "--group", "coinvariants", "--method", "generators"}).out ==
        "Z/2\n");
  CHECK(call({"abelianization", "--g", "2", "--n", "5", "--group", "halfmcg"}).out == "Z/2 ⊕ Z/4\n");
  CHECK(call({"abelianization", "--g", "2", "--n", "5", "--group", "torelli"}).out == "Z/992\n");
}

TEST_CASE("usage errors exit 2 and name the flag") {
  auto r = call({"abelianization", "--n", "7"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--g") != std::string::npos);
  r = call({"abelianization", "--g", "2", "--n", "7", "--group", "nope"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--group") != std::string::npos);
  r = call({"--format", "xml", "table3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--format") != std::string::npos);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  r = call({"boundary", "--n", "5", "--sgn", "eight"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--sgn") != std::string::npos);
  r = call({"--sigma-q", "1,x", "boundary", "--n", "5", "--sgn", "8"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--sigma-q") != std::string::npos);
  r = call({"signature", "--file", "/nonexistent.json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--file") != std::string::npos);
  CHECK(call({"theta"}).code == 2);
  CHECK(call({"splits", "--g", "1", "--n", "9", "--s-pi-2n-sn", "2"}).code == 2);
  CHECK(call({"verify", "--suite", "everything"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("computational errors exit 1 with the library message") {
  auto r = call({"boundary", "--n", "5", "--sgn", "4"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not divisible by 8") != std::string::npos);
  r = call({"theta", "--n", "11"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--sigma-q") != std::string::npos);
  r = call({"theta", "--n", "13"});
  CHECK(r.code == 1);
  CHECK(r.err.find("HCMCG_COKERJ_TABLE") != std::string::npos);
  CHECK(call({"abelianization", "--g", "2", "--n", "6"}).code == 1);
  CHECK(call({"boundary", "--n", "7", "--sgn", "8"}).code == 1);
}

TEST_CASE("extension table and Σ_Q flags") {
  std::ofstream("test_cli_cokerj.json") << R"([{"degree": 23, "torsion": [6]}, {"degree": 31, "torsion": [2]}])";
  auto r = call({"--cokerj-table", "test_cli_cokerj.json", "--sigma-q", "0,3", "theta", "--n", "11", "--format", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("sigma_q").at("name") == "Σ_Q");
  CHECK(j.at("sigma_q").at("element").at("coords") != j.at("sigma_p").at("coords"));
  CHECK(!j.contains("flags"));
  r = call({"--cokerj-table", "test_cli_cokerj.json", "theta", "--n", "15", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("flags") == Json::array({"sigma_q_default_order_2"}));
  r = call({"--cokerj-table", "test_cli_cokerj.json", "splits", "--g", "2", "--n", "15"});
  CHECK(r.out.find("sigma_q_default_order_2") != std::string::npos);
  CHECK(r.out.find("ThmB-case2") != std::string::npos);
}

TEST_CASE("splits and homotopy automorphisms") {
  auto r = call({"splits", "--g", "1", "--n", "7", "--format", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("kreck1").at("value") == "Unknown");
  CHECK(j.at("kreck1").at("citation") == "CorC-i-remark");
  CHECK(j.at("extension").at("citation") == "ThmB-case3");
  r = call({"splits", "--g", "1", "--n", "9", "--haut", "--format", "json"});
  j = Json::parse(r.out);
  CHECK(j.at("symbolic_summand") == "Sπ_18S^9/2");
  CHECK(j.at("h1") == Json::parse(R"({"rank":1,"torsion":[4]})"));
  r = call({"splits", "--g", "1", "--n", "9", "--haut", "--s-pi-2n-sn", "2,2"});
  CHECK(r.out.find("(Z/2)^2 ⊕ Z/4 ⊕ Z") != std::string::npos);
  CHECK(call({"splits", "--g", "1", "--n", "3", "--haut"}).out.find("Z/12") != std::string::npos);
}

TEST_CASE("signature and chi2 from class files") {
  IntMatrix s{{0, -1}, {1, 0}}, r{{1, 2}, {0, 1}};
  AffineSurfaceClass c = AffineSurfaceClass::untranslated(shifted_swap_class(1, s, r, 1));
  std::string file = write_class("test_cli_class.json", c, false);
  auto out = call({"signature", "--file", file, "--format", "json"});
  CHECK(out.code == 0);
  CHECK(Json::parse(out.out).at("signature") == int_to_json(signature_of_class(c.base)));
  out = call({"signature", "--file", file, "--divided", "sgn/8"});
  CHECK(out.code == 0);
  CHECK(call({"chi2", "--file", file}).code == 2);

  std::string torus = write_class("test_cli_torus.json", torus_generator_class(1), true);
  out = call({"chi2", "--file", torus});
  CHECK(out.code == 0);
  CHECK((out.out == "2\n" || out.out == "-2\n"));
  out = call({"chi2", "--file", torus, "--divided", "(chi2-sgn)/8"});
  CHECK(out.code == 1);
  CHECK(out.err.find("divisible") != std::string::npos);
  std::ofstream("test_cli_bad.json") << R"({"g": 1, "h": 1, "pairs": [[[[1,1],[0,1]], [[0,-1],[1,0]]]]})";
  CHECK(call({"signature", "--file", "test_cli_bad.json"}).code == 1);
  std::ofstream("test_cli_garbage.json") << "not json";
  CHECK(call({"signature", "--file", "test_cli_garbage.json"}).code == 1);
}

TEST_CASE("theta index") {
  CHECK(call({"theta", "--g", "2"}).out == "10\n");
  CHECK(call({"theta", "--g", "3", "--format", "json"}).out == "{\"g\":3,\"index\":36}\n");
}

TEST_CASE("JSON output round-trips byte for byte") {
  std::ofstream("test_cli_cokerj2.json") << R"([{"degree": 31, "torsion": [2]}])";
  std::vector<std::vector<std::string>> commands = {
      {"abelianization", "--g", "1", "--n", "9"},
      {"abelianization", "--g", "3", "--n", "5", "--group", "halfmcg"},
      {"splits", "--g", "1", "--n", "5"},
      {"splits", "--g", "2", "--n", "3", "--haut"},
      {"boundary", "--n", "9", "--sgn", "16"},
      {"theta", "--n", "7"},
      {"--cokerj-table", "test_cli_cokerj2.json", "theta", "--n", "15"},
      {"theta", "--g", "4"},
      {"table3"},
      {"verify", "--suite", "spheres"},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    auto r = call(args);
    CAPTURE(args[0]);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).dump() + "\n" == r.out);
  }
  // Big integers survive as decimal strings.
  Json big = int_to_json(Int("123456789012345678901234567890"));
  CHECK(Json::parse(big.dump()).dump() == big.dump());
  CHECK(int_from_json(Json::parse(big.dump())) == Int("123456789012345678901234567890"));
}

TEST_CASE("table3 and verify") {
  auto r = call({"table3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  for (const std::string suite : {"tables", "cocycles", "spheres"}) CHECK(call({"verify", "--suite", suite}).code == 0);
  auto a = call({"verify", "--suite", "cocycles", "--seed", "7"});
  auto b = call({"verify", "--suite", "cocycles", "--seed", "7"});
  CHECK(a.out == b.out);
  // The appendix suite asserts H^1(PSp_2; F_2^2) = 0, which the computation contradicts.
  auto app = call({"verify", "--suite", "appendix"});
  CHECK(app.code == 1);
  CHECK(app.out.find("FAIL appendix/H1(PSp2;F2^2)") != std::string::npos);
  auto all = call({"verify"});
  CHECK(all.out.find("FAIL") == all.out.rfind("FAIL"));
}
