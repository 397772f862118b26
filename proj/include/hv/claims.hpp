#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hv {

enum class ClaimStatus { Pass, Fail, ReportOnly };
std::string status_name(ClaimStatus s);

struct ClaimResult {
  std::string claim_id;
  std::string case_name;  // "B3", "F4", ...
  ClaimStatus status = ClaimStatus::Fail;
  std::optional<std::string> expected;
  std::string computed;
  std::string provenance;  // catalog location of the claim
  std::string module;
  std::optional<double> elapsed_ms;
};

struct ClaimInfo {
  std::string id;
  std::string location;
  std::string module;
};
// Every registered claim id with its location, in id order.
const std::vector<ClaimInfo>& claim_catalog();

struct RunOptions {
  std::vector<std::string> cases;  // lower-case ids: b3, b4, b5, f4
  std::string pattern = "*";       // fnmatch pattern on claim ids
  unsigned threads = 1;
  bool timing = false;  // record elapsed_ms; off keeps output byte-stable
};

// Runs every matching claim for every case; errors become failed results.
// Results are ordered by claim id and then case.
std::vector<ClaimResult> run_claims(const RunOptions& opts);

// "all" or a comma-separated list of case ids.
std::vector<std::string> parse_families(const std::string& families);

}  // namespace hv
