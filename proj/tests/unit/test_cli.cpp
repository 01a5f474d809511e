#include <sstream>

#include "support.hpp"
#include "upqn/cli.hpp"
#include <json.hpp>

using namespace upqn;
using testing_support::Q;
using testing_support::S;

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

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("classify") {
  Run r = run({"classify", "--signature", "1,1,1", "--weight", "-3,1;1/2"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(R"({"unitary":true,"condition":"U1"})"));

  r = run({"classify", "--signature", "1,1,1", "--weight", "0,0;0"});
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(R"({"unitary":true,"condition":"U6","i":1,"j":1})"));

  r = run({"classify", "--signature", "1,1,1", "--weight", "0,0;1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(R"({"unitary":false})"));

  r = run({"classify", "--signature", "2,1,1", "--weight", "0,1/2,0;0"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"classify", "--signature", "1,1,1", "--weight", "0,x;0"}).code == 2);
  CHECK(run({"classify", "--signature", "1,1", "--weight", "0;0"}).code == 2);
  CHECK(run({"classify", "--signature", "1,1,1", "--weight", "0,0;0", "--mode", "bogus"}).code == 2);
  CHECK(run({"classify", "--signature", "1,1,1", "--weight", "-2,0;0", "--mode", "integral"}).code == 0);

  r = run({"classify", "--signature", "1,1,1", "--weight", "-3,1;1/2", "--gamma-cap", "4"});
  CHECK(nlohmann::json::parse(r.out)["gamma_bound"] == "evidence-positive-at-cap");
  r = run({"classify", "--signature", "1,1,1", "--weight", "5,-2;1", "--gamma-cap", "4"});
  CHECK(nlohmann::json::parse(r.out)["gamma_bound"] == "proved-negative");
  r = run({"classify", "--signature", "1,1,1", "--weight", "0,0;0", "--gamma-cap", "4"});
  CHECK(nlohmann::json::parse(r.out)["gamma_bound"] == "inconclusive");
  CHECK(run({"classify", "--signature", "1,1,0", "--weight", "0,0", "--mode", "classical"}).code == 0);
  CHECK(run({"classify", "--signature", "1,0,1", "--weight", "1;0", "--mode", "finite-t1"}).code == 0);
}

TEST_CASE("scan") {
  const std::vector<std::string> args = {"scan", "--signature", "1,1,1", "--ranges", "-3:0,0:2;0:2"};
  Run a = run(args);
  CHECK(a.code == 0);
  CHECK(lines(a.out) == 37);
  CHECK(run(args).out == a.out);

  Run half = run({"scan", "--signature", "1,1,1", "--ranges", "-3:0:1/2,0:2;0:2"});
  CHECK(lines(half.out) == 7 * 3 * 3 + 1);

  Run j = run({"scan", "--signature", "1,1,1", "--ranges", "-1:0,0;0:1", "--format", "json", "--height-cap", "3"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 4);
  for (const auto& row : doc) {
    if (!row["oracle_agreement"].is_null()) CHECK(row["oracle_agreement"] == true);
  }

  CHECK(run({"scan", "--signature", "1,1,1", "--ranges", "1:0,0;0"}).code == 2);
  CHECK(run({"scan", "--signature", "1,1,1", "--ranges", "0:1:0,0;0"}).code == 2);
}

TEST_CASE("csv quoting and ranges") {
  CHECK(csv_field("abc") == "abc");
  CHECK(csv_field("-3,1;1/2") == "\"-3,1;1/2\"");
  CHECK(csv_field("a\"b") == "\"a\"\"b\"");
  const auto ranges = parse_scan_ranges(S("1,1,1"), "-3:0,0:2;0:2:1/2");
  REQUIRE(ranges.size() == 3);
  CHECK(ranges[0].points().size() == 4);
  CHECK(ranges[2].points().size() == 5);
  CHECK(ranges[2].step == Q("1/2"));
  CHECK_THROWS(parse_scan_ranges(S("1,1,1"), "0,0"));
}

TEST_CASE("gram") {
  Run r = run({"gram", "--signature", "1,1,1", "--weight", "0,0;1", "--max-height", "2"});
  CHECK(r.code == 3);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "negative_witness");
  CHECK(doc["witness_drop"] == "eps1-delta1");

  r = run({"gram", "--signature", "1,1,1", "--weight", "-3,1;1/2", "--max-height", "3"});
  CHECK(r.code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "psd_up_to_cap");
  CHECK(doc["reports"].front()["matrix"] == nlohmann::json::parse(R"([["1"]])"));
}

TEST_CASE("howe and selftest") {
  Run r = run({"howe", "--signature", "1,1,1", "--d", "2", "--max-degree", "2"});
  CHECK(r.code == 0);
  bool found = false;
  for (const auto& e : nlohmann::json::parse(r.out)) {
    CHECK(e["verified"] == true);
    if (e["partition"] == nlohmann::json::parse("[2,0]")) {
      found = true;
      CHECK(e["flat"] == "-2,2;0");
    }
  }
  CHECK(found);
  CHECK(run({"howe", "--signature", "2,2,2", "--d", "2", "--max-degree", "40"}).code == 2);

  r = run({"selftest", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(run({"selftest", "--seed", "3"}).out == r.out);
}
