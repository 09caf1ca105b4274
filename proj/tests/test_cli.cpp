#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "sympl/cli.hpp"
#include "sympl/json.hpp"
#include "sympl/lfactors.hpp"
#include "sympl/orbitclassify.hpp"

using namespace sympl;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Run r = run(args);
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == args[1]);
  return j["result"];
}

std::string data(const std::string& name) {
#ifdef SYMPL_TESTDATA
  return std::string(SYMPL_TESTDATA) + "/" + name;
#else
  return "tests/data/" + name;
#endif
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"reduction-point", "--weight", "4,3,3"}).code == kExitOk);
  CHECK(run({"reduction-point", "--weight", "4,3,3"}).out == "2\n");
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);

  const Run missing = run({"reduction-point"});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("--weight") != std::string::npos);

  const Run bad = run({"orbit", "--weight", "3,x"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("--weight") != std::string::npos);

  const Run bad_int = run({"suffreg", "--weight", "3,3", "--i", "two"});
  CHECK(bad_int.code == kExitUsage);
  CHECK(bad_int.err.find("--i") != std::string::npos);

  const Run domain = run({"unitary", "--weight", "3,4"});
  CHECK(domain.code == kExitDomain);
  CHECK(domain.err.find("NotDominant") != std::string::npos);

  const Run lattice = run({"orbit", "--weight", "1/3"});
  CHECK(lattice.code == kExitDomain);
  CHECK(lattice.err.find("NotHalfIntegral") != std::string::npos);

  const Run pole = run({"eval", "--i", "1", "--m", "0", "--at", "X=1,T=1"});
  CHECK(pole.code == kExitDomain);
  CHECK(pole.err.find("PoleAtPoint") != std::string::npos);

  const Run json_err = run({"--json", "unitary", "--weight", "3,4"});
  CHECK(json_err.code == kExitDomain);
  CHECK(Json::parse(json_err.out)["error"] == "NotDominant");
}

TEST_CASE("orbit cap from the environment") {
  ::setenv("SYMPL_ORBIT_CAP", "2", 1);
  const Run capped = run({"orbit", "--weight", "3,2,1"});
  ::unsetenv("SYMPL_ORBIT_CAP");
  CHECK(capped.code == kExitDomain);
  CHECK(capped.err.find("RankTooLarge") != std::string::npos);
  CHECK(run({"orbit", "--weight", "3,2,1"}).code == kExitOk);
}

TEST_CASE("weights and orbits") {
  const Json o = run_json({"orbit", "--weight", "3"});
  CHECK(o["orbits"][0].size() == 2);
  CHECK(o["regular"] == true);

  const Json c = run_json({"infchar", "--weight", "3,3", "--other", "3,1"});
  CHECK(c["equal"] == true);
  CHECK(c["infchar"]["canonical"][0] == Json::parse(R"(["2","1"])"));
  CHECK(run_json({"infchar", "--weight", "3,3"})["equal"].is_null());

  const Json d = run_json({"dominant", "--weight", "3,3"});
  CHECK(d["elements"].size() == 4);
  CHECK(run_json({"dominant", "--weight", "3,3", "--i", "2"})["elements"].size() == 2);

  CHECK(run_json({"suffreg", "--weight", "5,5", "--i", "1"})["sufficiently_regular"] == true);
}

TEST_CASE("embeddings and highest weight modules") {
  const Json e = run_json({"embed", "--weight", "7,1,1", "--i", "2"});
  const Json inv = run_json({"embed", "--n", "3", "--i", "2", "--char", "1,-3/2", "--inner", "7"});
  CHECK(inv["weight"] == Json::parse(R"(["7","1","1"])"));
  CHECK(e["datum"]["inner_weight"] == Json::parse(R"(["7"])"));
  CHECK(run_json({"principal", "--weight", "3,1"})["characters"].size() == 2);
  CHECK(run_json({"degenerate", "--weight", "3,3"})["character"].is_object());
  CHECK(run_json({"reduction-point", "--weight", "4,3,3"})["value"] == "2");
  CHECK(run_json({"unitary", "--weight", "0,0"})["unitary"] == true);
  CHECK(run_json({"unitary", "--weight", "-1,-1"})["unitary"] == false);
}

TEST_CASE("level classification and reports") {
  const Json c = run_json({"classify-levels", "--n", "2", "--i", "1", "--inner", "5"});
  CHECK(c.get<OrbitClassification>() == classify_levels(RationalVector{5}, 2, 1));
  const Run table = run({"classify-levels", "--n", "2", "--i", "1", "--inner", "5"});
  CHECK(table.out.find("classes: {{0,4},{1,3},{2},{5}}") != std::string::npos);
  CHECK(table.out.find("bijective: true") != std::string::npos);
  CHECK(run({"classify-levels", "--n", "2", "--i", "2"}).code == kExitDomain);
  CHECK(run_json({"classify-levels", "--n", "2", "--i", "2", "--upper", "4"})["x"].size() == 5);

  const Json r = run_json({"report", "--weight", "12,12,12", "--i", "1"});
  CHECK(r["conclusion"] == "IsotypicDescription");
  CHECK(run_json({"report", "--weight", "12,12", "--i", "1", "--char", "-1"})["conclusion"] == "VanishesWrongParity");

  CHECK(run_json({"surjectivity", "--weight", "11,11", "--level", "6"})["tag"] == "SurjectiveByTheorem");
  const Json nc = run_json({"surjectivity", "--weight", "11,11", "--level", "12"});
  CHECK(nc["failed_conditions"] == Json::parse(R"(["level_squarefree"])"));
  CHECK(run_json({"surjectivity", "--weight", "11,11", "--primes", "2,3,2"})["tag"] == "NotCovered");
}

TEST_CASE("L-factors") {
  const Json g = run_json({"gk", "--i", "1", "--j", "1", "--m", "0"});
  CHECK(g["function"].get<RationalFunction>() == parse_poly("1 - X*Q^-2*T") / RationalFunction(parse_poly("1 - X*T")));
  CHECK(run({"gk", "--i", "1", "--j", "1", "--m", "0"}).out == "(1 - Q^-2*T*X)/(1 - T*X)\n");
  const Json v = run_json({"eval", "--i", "1", "--j", "1", "--m", "0", "--at", "X=1,Q=2,T=1/16"});
  CHECK(v["value"] == "21/20");
  CHECK(run_json({"xi", "--i", "2", "--m", "1"})["function"]["denominator"].size() == 7);
  const Json num = run_json({"xi", "--i", "1", "--m", "1", "--satake", "2", "--char", "1"});
  CHECK(num["function"].get<RationalFunction>() == standard_L(0, SatakeDatum{{Rational(2)}, 1}));
  CHECK(run({"xi", "--i", "1", "--m", "2", "--satake", "2"}).code == kExitUsage);
}

TEST_CASE("Fourier expansions") {
  const Json h = run_json({"fourier", "--sym", "1,2;2,1"});
  CHECK(h["psd"] == false);
  CHECK(h["rank"] == 2);
  const Json t = run_json({"fourier", "--sym", "1,0;0,1", "--a", "2,0;0,1"});
  CHECK(t["transformed"] == Json::parse(R"([["1/4","0"],["0","1"]])"));

  const Json f = run_json({"fourier", "--file", data("expansion2.txt"), "--weight", "5,3", "--j", "1"});
  CHECK(f["cusp_condition"] == true);
  CHECK(f["cuspidal"] == false);
  CHECK(f["filtration_index"] == 3);
  CHECK(f["rigidity"] == true);
  CHECK(f["expansion"].get<FourierExpansion>().support().size() == 5);
  CHECK(run_json({"fourier", "--file", data("not_psd.txt")})["cusp_condition"] == false);
  CHECK(run({"fourier", "--file", data("missing.txt")}).code == kExitUsage);

  const Run phi = run({"phi", "--file", data("expansion2.txt")});
  CHECK(phi.code == kExitOk);
  CHECK(phi.out == "n=1 k=4\n0 : 1\n1 : 240\n2 : 2160\n");
}

TEST_CASE("grids and identity testing") {
  const Json g = run_json({"grid", "--n", "2", "--t", "1"});
  CHECK(g["deviations"].size() == 1);
  CHECK(g["deviations"][0]["literal_offset"] == 2);
  CHECK(g["deviations"][0]["applied_offset"] == 8);
  CHECK(run_json({"grid", "--n", "1", "--t", "2"})["points"].size() == 3);
  CHECK(run_json({"grid", "--n", "1", "--bounds", "1;2"})["points"].size() == 6);
  CHECK(run_json({"pit", "--n", "1", "--t", "2", "--poly", "x_1_1_1 - 1"})["vanishes"] == false);
  CHECK(run_json({"pit", "--n", "1", "--t", "2", "--poly", "0"})["vanishes"] == true);
  const Run over = run({"pit", "--n", "1", "--t", "1", "--poly", "x_1_1_1^2"});
  CHECK(over.code == kExitDomain);
  CHECK(over.err.find("DegreeExceedsGrid") != std::string::npos);
}

TEST_CASE("table and JSON agree") {
  const std::vector<std::vector<std::string>> cases{
      {"reduction-point", "--weight", "4,3,3"},
      {"reduction-point", "--weight", "9,4,4,4"},
      {"gk", "--i", "2", "--j", "1", "--m", "0"},
      {"xi", "--i", "2", "--m", "1"},
  };
  for (const auto& args : cases) {
    const Run table = run(args);
    auto with_json = args;
    with_json.insert(with_json.begin(), "--json");
    const Json j = Json::parse(run(with_json).out)["result"];
    const std::string value = j.contains("value") ? j["value"].get<std::string>() : j["function"]["text"].get<std::string>();
    CHECK(table.out == value + "\n");
  }
  const Run u = run({"unitary", "--weight", "8,8,8,1"});
  const Json uj = run_json({"unitary", "--weight", "8,8,8,1"});
  CHECK(u.out.find(std::string("unitary: ") + (uj["unitary"].get<bool>() ? "true" : "false")) != std::string::npos);
}

TEST_CASE("JSON output is stable under a parse and dump") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "report", "--weight", "12,12,12", "--i", "1"},
           {"--json", "grid", "--n", "2", "--t", "1"},
           {"--json", "gk", "--i", "3", "--j", "2", "--m", "1"}}) {
    const std::string text = run(args).out;
    CHECK(Json::parse(text).dump(2) + "\n" == text);
  }
}
