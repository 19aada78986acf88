#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "semireg/cli/cli.hpp"
#include "semireg/io/parse.hpp"

using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = semireg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--output");
  args.push_back("json");
  Outcome o = run(args);
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

}  // namespace

TEST_CASE("betti verb") {
  Json d = run_json({"betti", "--vars", "x,y,z", "--ideal", "x*y,y*z,z*x"});
  CHECK(d["betti"] == Json::array({1, 3, 2}));
  CHECK(d["pd"] == 2);
  Outcome text = run({"betti", "--vars", "x,y,z", "--ideal", "x*y,y*z,z*x"});
  CHECK(text.code == 0);
  CHECK(text.out.find("betti: 1, 3, 2") != std::string::npos);
  CHECK(text.out.find("pd: 2") != std::string::npos);
}

TEST_CASE("classify verb") {
  Json d = run_json({"classify", "--cone", "y >= 0 & x > 0"});
  CHECK(d["tag"] == "H");
  CHECK(d["agreement"]["value"] == true);
}

TEST_CASE("regseq verb reports all four flags") {
  Json d = run_json({"regseq", "--vars", "x,y,z,w", "--seq", "x*y,y*z"});
  CHECK(d["oracle_regular"] == false);
  CHECK(d["pd_criterion"] == true);
  CHECK(d["star_condition"] == false);
  CHECK(d["discrepancy"] == true);
  CHECK(d["witness"]["monomial"] == "x");
  CHECK(d["witness"]["verified"] == true);
  CHECK(d["weak_proregularity"] == "assumed (Noetherian)");
}

TEST_CASE("other verbs") {
  CHECK(run_json({"pd", "--vars", "x,y", "--ideal", "x^2,x*y"})["pd"] == 2);
  Json cd = run_json({"cd", "--vars", "x,y", "--ideal", "x^2,x*y"});
  CHECK(cd["cd"] == 1);
  CHECK(cd["radical"] == "x");
  Json p = run_json({"paramseq", "--vars", "x,y,z", "--seq", "x,y"});
  CHECK(p["parameter_sequence"] == true);
  CHECK(p["oracle_regular"] == true);
  Json n = run_json({"normalize", "--gens", "1,0;1,2"});
  CHECK(n["t"] == 2);
  Json r = run_json({"reject-pair", "--model", "H2", "--f", "-2,1", "--g", "0,3"});
  CHECK(r["certificate"]["h"] == Json::array({1, 1}));
  CHECK(r["certificate_verified"] == true);
  CHECK(r["regular_pair"] == false);
  CHECK(r["pair_witness_verified"] == true);
  Json l = run_json({"lazard-resolve", "--betas", "2,2,2,2|2;3,1,3,1|3;4,2,1,1|4", "--mode", "split"});
  CHECK(l["family"]["members"].size() == 4);
  CHECK(l["checks"]["independent"] == true);
  Json ds = run_json({"direct-system", "--gens", "1,0;1,1;1,2", "--depth", "3"});
  CHECK(ds["families"].size() == 3);
  CHECK(ds["certificate"]["value"] == true);
  Json sg = run_json({"semigroup-check", "--gens", "2,0;3,0", "--point", "1,0"});
  CHECK(sg["normal"]["value"] == false);
  CHECK(sg["member"]["value"] == false);
}

TEST_CASE("exit codes") {
  Outcome parse = run({"betti", "--vars", "x,y", "--ideal", "x*q"});
  CHECK(parse.code == semireg::cli::kExitParse);
  CHECK(parse.err.find("--ideal") != std::string::npos);
  CHECK(parse.err.find("position 2") != std::string::npos);

  CHECK(run({"frobnicate"}).code == semireg::cli::kExitParse);
  CHECK(run({"betti", "--vars", "x"}).code == semireg::cli::kExitParse);

  Outcome domain = run({"reject-pair", "--model", "H", "--f", "0,0", "--g", "1,0"});
  CHECK(domain.code == semireg::cli::kExitDomain);
  CHECK(domain.err.find("UnitInput") != std::string::npos);

  Outcome coprime = run({"regseq", "--vars", "x,y", "--seq", "x,1", "--output", "json"});
  CHECK(coprime.code == semireg::cli::kExitDomain);
  CHECK(Json::parse(coprime.out)["error"] == "UnitEntry");

  Outcome negative = run({"regseq", "--vars", "x,y", "--seq", "x,x"});
  CHECK(negative.code == semireg::cli::kExitOk);

  CHECK(run({"--help"}).code == semireg::cli::kExitOk);
}

TEST_CASE("machine output is deterministic and re-parses") {
  std::vector<std::string> args{"lazard-resolve", "--betas", "2,2,2,2|2;3,1,3,1|3;4,2,1,1|4", "--mode", "split",
                                "--output", "json"};
  Outcome a = run(args), b = run(args);
  CHECK(a.out == b.out);
  Json d = Json::parse(a.out);
  for (const auto& m : d["family"]["members"]) CHECK_NOTHROW(semireg::parse_finseq(m.get<std::string>()));
  CHECK_NOTHROW(semireg::parse_finseq(d["beta_prime"].get<std::string>()));

  Json c = run_json({"classify", "--cone", "2*x-y >= 0 & x+3*y > 0"});
  CHECK_NOTHROW(semireg::parse_cone(c["cone"].get<std::string>()));
  Json i = run_json({"betti", "--vars", "x,y,z", "--ideal", "z*x,x^2*y,y*z"});
  CHECK_NOTHROW(semireg::parse_monomials(i["ideal"].get<std::string>(), {"x", "y", "z"}));
  Json s = run_json({"regseq", "--vars", "x,y,z", "--seq", "x*y,y*z"});
  CHECK_NOTHROW(semireg::parse_monomials(s["sequence"].get<std::string>(), {"x", "y", "z"}));
}

TEST_CASE("bound override") {
  Json d = run_json({"classify", "--cone", "x > 0 & y > 0", "--bound", "5"});
  CHECK(d["agreement"]["value"] == true);
  CHECK(run({"classify", "--cone", "x > 0 & y > 0", "--bound", "-1"}).code == semireg::cli::kExitParse);
}
