#include <cstdlib>
#include <fstream>
#include <sstream>

#include "crgstir/cli.hpp"
#include "crgstir/json_io.hpp"
#include "crgstir/lattice.hpp"
#include "crgstir/suites.hpp"
#include "test_util.hpp"

using namespace crgstir;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("range parsing") {
  CHECK(parse_range("3").lo == 3);
  CHECK(parse_range("3").hi == 3);
  auto r = parse_range("1..4");
  CHECK(r.lo == 1);
  CHECK(r.hi == 4);
  CHECK(r.to_string() == "1..4");
  CHECK_THROWS_AS(parse_range("4..1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("1..."), std::invalid_argument);
  CHECK_THROWS_AS(parse_range(""), std::invalid_argument);
}

TEST_CASE("polynomial JSON round trip") {
  IntPoly p = q_bracket(4) * q_bracket(3) - IntPoly(7);
  Json j = to_json(p);
  CHECK(j.dump() == R"(["-6","2","3","3","2","1"])");
  CHECK(poly_from_json(j) == p);
  CHECK(to_json(IntPoly()).dump() == "[]");
  BigInt huge("123456789012345678901234567890");
  IntPoly h(std::vector<BigInt>{huge, -huge});
  CHECK(poly_from_json(to_json(h)) == h);
  BivarPoly b = BivarPoly::t() * BivarPoly(q_bracket(2)) + BivarPoly(IntPoly(3));
  CHECK(to_json(b).dump() == R"([["3"],["1","1"]])");
  CHECK(bivar_from_json(to_json(b)) == b);
  CHECK_THROWS(poly_from_json(Json::parse(R"(["1x"])")));
}

TEST_CASE("partition JSON round trip, every flavor") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        for (bool barred : {false, true}) {
          if (barred && m < 2) continue;
          for (const auto& p : enumerate_partitions(m, n, k, barred)) CHECK(partition_from_json(to_json(p)) == p);
        }
        for (const auto& p : enumerate_super(m, n, k)) CHECK(super_from_json(to_json(p)) == p);
        for (Flavor f : {Flavor::Super, Flavor::CR})
          for (const auto& w : enumerate_ordered(m, n, k, f)) CHECK(ordered_from_json(to_json(w)) == w);
      }
  auto p = parse_partition("0 4^0 4^1 4^2 | 1^1 3^0/1^2 3^1/1^0 3^2 | 2^1/2^2/2^0", 3, false);
  Json j = to_json(p);
  CHECK(j["flavor"] == "plain");
  CHECK(j["zero"].dump() == R"(["0","4^0","4^1","4^2"])");
  CHECK(j["tuples"][0][2].dump() == R"(["1^0","3^2"])");
  CHECK_THROWS_AS(super_from_json(j), std::invalid_argument);
}

TEST_CASE("qtable example entry") {
  auto r = call({"qtable", "--family", "second", "--m", "2", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2+q+q^2") != std::string::npos);
  auto j = call({"qtable", "--family", "second", "--m", "2", "--n", "2", "--format", "json"});
  auto doc = Json::parse(j.out);
  bool found = false;
  for (const auto& e : doc["tables"][0]["entries"])
    if (e["n"] == 2 && e["k"] == 1) {
      CHECK(poly_from_json(e["value"]) == IntPoly(std::vector<BigInt>{2, 1, 1}));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("integer tables and csv") {
  auto r = call({"table", "--m", "1", "--n", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("second-plain,1,4,2,25\n") != std::string::npos);
  auto b = call({"table", "--family", "second", "--barred", "--m", "2", "--n", "2", "--format", "csv"});
  CHECK(b.out.find("second-barred,2,2,1,2\n") != std::string::npos);
  auto o = call({"table", "--family", "ordered", "--variant", "cr", "--m", "2", "--n", "1", "--format", "csv"});
  CHECK(o.out.find("ordered-cr,2,1,1,2\n") != std::string::npos);
  CHECK(call({"qtable", "--format", "csv"}).code == kExitUsage);
  CHECK(call({"verify", "--suite", "matrix", "--format", "csv"}).code == kExitUsage);
}

TEST_CASE("enumerate stream contains the worked [3^3] partition") {
  auto r = call({"enumerate", "--m", "3", "--n", "3", "--k", "2"});
  CHECK(r.code == 0);
  auto target = parse_partition("0 | 1^0 2^2/1^1 2^0/1^2 2^1 | 3^0/3^1/3^2", 3, false);
  CHECK(r.out.find(target.to_string()) != std::string::npos);
  auto j = Json::parse(call({"enumerate", "--m", "3", "--n", "3", "--k", "2", "--format", "json"}).out);
  int hits = 0;
  for (const auto& item : j["enumerations"][0]["items"])
    if (partition_from_json(item["object"]) == target) ++hits;
  CHECK(hits == 1);
  CHECK(j["enumerations"][0]["count"] == enumerate_partitions(3, 3, 2, false).size());
}

TEST_CASE("lattice and artin subcommands") {
  auto r = call({"lattice", "--m", "2", "--n", "2", "--barred", "--format", "json"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["lattices"][0]["size"] == 4);
  auto g = call({"lattice", "--m", "3", "--p", "3", "--n", "2", "--geometric", "--format", "json"});
  auto gj = Json::parse(g.out)["lattices"][0]["geometric"];
  CHECK(gj["iso"] == true);
  CHECK(gj["certificate"].size() == 5);
  CHECK(call({"lattice", "--m", "3", "--p", "2", "--n", "2"}).code == kExitUsage);
  auto a = call({"artin", "--m", "2", "--n", "2", "--super", "--format", "json"});
  auto aj = Json::parse(a.out)["artin"][0];
  CHECK(bivar_from_json(aj["super_hilbert"]) == bivar_from_json(aj["super_stirling"]));
  CHECK(call({"artin", "--m", "1", "--n", "2", "--super"}).code == kExitUsage);
  auto s = call({"artin", "--m", "3", "--n", "3", "--show-bijection"});
  CHECK(s.out.find("FAILED") == std::string::npos);
}

TEST_CASE("verify exit codes and determinism") {
  auto r = call({"verify", "--suite", "alt-sums", "--m", "1..4", "--n", "0..5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary: 11 verified, 0 failed, 0 paper-discrepancy") != std::string::npos);
  auto ex = call({"verify", "--suite", "examples", "--format", "json"});
  CHECK(ex.code == 0);
  auto doc = Json::parse(ex.out);
  CHECK(doc["summary"]["paper-discrepancy"] == 2);
  auto again = call({"verify", "--suite", "examples", "--format", "json"});
  CHECK(again.out == ex.out);
  CHECK(call({"verify", "--suite", "bogus"}).code == kExitUsage);
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"table", "--m", "0"}).code == kExitUsage);
  CHECK(call({"table", "--n", "3..1"}).code == kExitUsage);
}

TEST_CASE("size cap from the environment") {
  setenv("CRGSTIR_MAX_ELEMENTS", "10", 1);
  CHECK(element_cap() == 10);
  auto r = call({"lattice", "--m", "2", "--n", "3"});
  CHECK(r.code == kExitCap);
  CHECK(r.out.empty());
  CHECK(call({"enumerate", "--m", "2", "--n", "3"}).code == kExitCap);
  CHECK(call({"lattice", "--m", "2", "--n", "1"}).code == 0);
  unsetenv("CRGSTIR_MAX_ELEMENTS");
  CHECK(element_cap() == 100000);
}

TEST_CASE("output file") {
  const std::string path = "crgstir_cli_test_output.txt";
  auto r = call({"table", "--m", "1", "--n", "2", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == call({"table", "--m", "1", "--n", "2"}).out);
  std::remove(path.c_str());
}

TEST_CASE("suite reports: tally and aggregation") {
  auto reports = run_suite("all", {});
  auto t = tally(reports);
  CHECK(t.failed == 0);
  CHECK(t.verified + t.failed + t.discrepancies == static_cast<int>(reports.size()));
  for (const auto& r : reports)
    if (r.status != Status::Verified) CHECK(!r.witness.empty());
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  SuiteOptions narrow;
  narrow.m = IntRange{2, 2};
  narrow.n = IntRange{0, 3};
  auto few = run_suite("alt-sums", narrow);
  REQUIRE(few.size() == 3);
  CHECK(few[2].id == "alt-sum-cr");
  CHECK(few[2].params == "m=2 n=0..3");
}
