#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "hv/report.hpp"

using namespace hv;

namespace {

std::size_t count_lines_starting(const std::string& s, const std::string& prefix) {
  std::size_t n = 0, pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('\n', pos);
    if (end == std::string::npos) end = s.size();
    if (s.compare(pos, prefix.size(), prefix) == 0) ++n;
    pos = end + 1;
  }
  return n;
}

ClaimResult result(std::string id, std::string module, ClaimStatus st) {
  ClaimResult r;
  r.claim_id = std::move(id);
  r.case_name = "B3";
  r.status = st;
  r.expected = "1";
  r.computed = st == ClaimStatus::Pass ? "1" : "2";
  r.provenance = "Lemma 1";
  r.module = std::move(module);
  return r;
}

}  // namespace

TEST_CASE("catalog") {
  const auto& cat = claim_catalog();
  REQUIRE(!cat.empty());
  std::set<std::string> ids;
  for (const auto& c : cat) {
    CHECK(ids.insert(c.id).second);
    CHECK(!c.location.empty());
    CHECK(!c.module.empty());
  }
  CHECK(std::is_sorted(cat.begin(), cat.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("run_claims filters and orders") {
  RunOptions opts;
  opts.cases = {"b3"};
  opts.pattern = "remark5.3*";
  auto r = run_claims(opts);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == ClaimStatus::Pass);
  CHECK(r[0].case_name == "B3");

  opts.cases = {"f4"};
  opts.pattern = "prop6.4*";
  auto f = run_claims(opts);
  CHECK(f.size() == 3);
  for (const auto& x : f) CHECK(x.status == ClaimStatus::Pass);

  opts.cases = {};
  opts.pattern = "*";
  CHECK(run_claims(opts).empty());
}

TEST_CASE("failed results carry a differing expected value") {
  RunOptions opts;
  opts.cases = {"b3", "b4"};
  opts.pattern = "lemma6.3.i";
  auto r = run_claims(opts);
  REQUIRE(r.size() == 2);
  for (const auto& x : r) {
    CHECK(x.status == ClaimStatus::Fail);
    REQUIRE(x.expected);
    CHECK(*x.expected != x.computed);
  }
}

TEST_CASE("concurrent runs produce identical reports") {
  RunOptions opts;
  opts.cases = {"b3", "f4"};
  opts.pattern = "prop4.3*";
  std::string one = emit_json(run_claims(opts));
  opts.threads = 3;
  std::string three = emit_json(run_claims(opts));
  CHECK(one == three);
}

TEST_CASE("family parsing") {
  CHECK(parse_families("all") == std::vector<std::string>{"b3", "b4", "b5", "f4"});
  CHECK(parse_families("F4,b3") == std::vector<std::string>{"f4", "b3"});
  CHECK_THROWS_AS(parse_families("b7"), Error);
}

TEST_CASE("JSON emission") {
  CHECK(emit_json({}) == "[]\n");
  auto doc = nlohmann::json::parse(emit_json({result("a.b", "vmrt_geometry", ClaimStatus::Pass)}));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["status"] == "pass");
  CHECK(doc[0]["elapsed_ms"].is_null());
  std::vector<std::string> keys;
  for (auto it = doc[0].begin(); it != doc[0].end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"case", "claim_id", "computed", "elapsed_ms", "expected", "provenance",
                                         "status"});
  std::string raw = emit_json({result("a.b", "vmrt_geometry", ClaimStatus::Pass)});
  CHECK(raw.find("\"claim_id\"") < raw.find("\"case\""));
  CHECK(raw.find("\"provenance\"") < raw.find("\"elapsed_ms\""));
}

TEST_CASE("markdown emission") {
  std::vector<ClaimResult> rs = {result("a.1", "vmrt_geometry", ClaimStatus::Pass),
                                 result("a.2", "ce_cohomology", ClaimStatus::Fail),
                                 result("a.3", "vmrt_geometry", ClaimStatus::ReportOnly)};
  rs[0].computed = "x|y";
  std::string md = emit_markdown(rs);
  CHECK(count_lines_starting(md, "## ") == 2);
  CHECK(count_lines_starting(md, "| a.") == rs.size());
  CHECK(md.find("x\\|y") != std::string::npos);
  CHECK(any_failed(rs));
  rs.erase(rs.begin() + 1);
  CHECK_FALSE(any_failed(rs));
}

TEST_CASE("cohomology report JSON") {
  CohomologyReport r{"m", "g", 2, 1, 5, 3, 2};
  auto doc = nlohmann::json::parse(cohomology_json(r));
  CHECK(doc["dim_h"] == 2);
  CHECK(doc["q"] == 2);
}
