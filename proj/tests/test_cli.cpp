#include "bsplus/cli.hpp"
#include "bsplus/text.hpp"

#include <json.hpp>

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace bsplus;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  Run r = run(args);
  REQUIRE(r.code == kExitOk);
  json j = json::parse(r.out);
  REQUIRE(j.contains("command"));
  REQUIRE(j.contains("config"));
  REQUIRE(j.contains("result"));
  return j;
}

}  // namespace

TEST_CASE("dilate-sum prints the set of size 7") {
  json j = run_json({"dilate-sum", "--coeffs", "1,2", "--set", "{0,1,2}"});
  CHECK(j["command"] == "dilate-sum");
  CHECK(j["result"]["size"] == 7);
  CHECK(format_set(parse_set(j["result"]["set"].get<std::string>())) == "{0,1,2,3,4,5,6}");

  Run table = run({"dilate-sum", "--coeffs", "1,2", "--set", "{0,1,2}"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("{0,1,2,3,4,5,6}") != std::string::npos);
}

TEST_CASE("verify main reports StructureConfirmed") {
  json j = run_json({"verify", "main", "--subset", "1:{0,1,2,3,4,5}", "--n", "2"});
  CHECK(j["result"]["verdict"] == "StructureConfirmed");
  CHECK(j["result"]["computed"]["|S^2|"] == 16);
  CHECK(j["result"]["theorem_id"] == "main_monoid");
}

TEST_CASE("bs-mul follows ab = ba^n") {
  Run r = run({"bs-mul", "--n", "2", "b^0 a^1", "b^1 a^0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("b^1 a^2") != std::string::npos);
}

TEST_CASE("square, classify and lss verify") {
  json sq = run_json({"square", "--subset", "0:{0,1,2}; 1:{0}", "--n", "2"});
  CHECK(sq["result"]["size"] == 10);
  BSSubset printed = parse_subset(BSContext(2), sq["result"]["square"].get<std::string>());
  CHECK(printed.size() == 10);
  CHECK(format_subset(printed) == sq["result"]["square"].get<std::string>());

  json cl = run_json({"classify", "--set", "{1,3,7}"});
  CHECK(cl["result"]["family"] == "F1");
  CHECK(parse_set(cl["result"]["canonical"].get<std::string>()) == IntSet{0, 1, 3});

  json lss = run_json({"verify", "lss", "--set", "{0,3}", "--set", "{0,1,3,4}"});
  CHECK(lss["result"]["computed"]["bound"] == 6);
}

TEST_CASE("examples default run covers every golden value without violations") {
  json j = run_json({"examples"});
  CHECK(j["command"] == "examples");
  Run table = run({"examples"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("VIOLATION") == std::string::npos);
}

TEST_CASE("search emits a count header and respects --limit") {
  json j = run_json({"search", "classify3", "--k-min", "3", "--k-max", "4", "--max-length", "8",
                     "--limit", "1"});
  const json& res = j["result"];
  CHECK(res["violations"].empty());
  CHECK(res["extremal_witness_count"] == 3);
  CHECK(res["extremal_witnesses"].size() == 1);
  CHECK(res.contains("instances_checked"));
  CHECK(res.contains("elapsed_ms"));
  CHECK(res["config"]["max_length"] == 8);

  json mon = run_json({"search", "main", "--k-min", "2", "--k-max", "3", "--m-max", "1",
                       "--x-max", "2", "--jobs", "2"});
  CHECK(mon["result"]["violations"].empty());
}

TEST_CASE("usage errors exit with 2 and explain themselves") {
  Run r = run({"sumset", "--set", "{0,1"});
  CHECK(r.code == kExitUsage);

  r = run({"sumset", "--set", "{0,1", "--set", "{0}"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("position 4") != std::string::npos);

  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"verify", "nonsense", "--set", "{0}"}).code == kExitUsage);
  CHECK(run({"verify", "extended-inverse", "--set", "{0,1}"}).code == kExitUsage);
  CHECK(run({"verify", "main", "--subset", "0:{0,1}"}).code == kExitUsage);
  CHECK(run({"bs-mul", "--n", "1", "a", "b"}).code == kExitUsage);
  CHECK(run({"search", "direct2", "--k-max", "5", "--max-length", "2"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "examples"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
