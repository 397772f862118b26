#include "hv/report.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace hv {

namespace {

using ojson = nlohmann::ordered_json;

ojson to_json(const ClaimResult& r) {
  ojson o;
  o["claim_id"] = r.claim_id;
  o["case"] = r.case_name;
  o["status"] = status_name(r.status);
  o["expected"] = r.expected ? ojson(*r.expected) : ojson(nullptr);
  o["computed"] = r.computed;
  o["provenance"] = r.provenance;
  o["elapsed_ms"] = r.elapsed_ms ? ojson(*r.elapsed_ms) : ojson(nullptr);
  return o;
}

std::string cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

}  // namespace

std::string emit_json(const std::vector<ClaimResult>& results) {
  if (results.empty()) return "[]\n";
  ojson arr = ojson::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string emit_markdown(const std::vector<ClaimResult>& results) {
  static const std::vector<std::string> order = {"exact_linalg",  "root_system",   "lie_structures",
                                                 "ce_cohomology", "vmrt_geometry", "cli_report"};
  std::map<std::string, std::vector<const ClaimResult*>> by_module;
  for (const auto& r : results) by_module[r.module].push_back(&r);
  std::vector<std::string> modules;
  for (const auto& m : order)
    if (by_module.count(m)) modules.push_back(m);
  for (const auto& [m, rs] : by_module)
    if (std::find(order.begin(), order.end(), m) == order.end()) modules.push_back(m);

  std::ostringstream os;
  bool first = true;
  for (const auto& m : modules) {
    if (!first) os << "\n";
    first = false;
    os << "## " << m << "\n\n";
    os << "| claim_id | case | status | expected | computed | provenance | elapsed_ms |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const ClaimResult* r : by_module[m]) {
      os << "| " << cell(r->claim_id) << " | " << cell(r->case_name) << " | " << status_name(r->status) << " | "
         << cell(r->expected.value_or("")) << " | " << cell(r->computed) << " | " << cell(r->provenance) << " | ";
      if (r->elapsed_ms) os << ojson(*r->elapsed_ms).dump();
      os << " |\n";
    }
  }
  return os.str();
}

std::string cohomology_json(const CohomologyReport& r) {
  ojson o;
  o["algebra"] = r.algebra;
  o["coefficients"] = r.coefficients;
  o["q"] = r.q;
  o["k"] = r.k;
  o["dim_z"] = r.dim_z;
  o["dim_b"] = r.dim_b;
  o["dim_h"] = r.dim_h;
  return o.dump(2) + "\n";
}

bool any_failed(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (r.status == ClaimStatus::Fail) return true;
  return false;
}

}  // namespace hv
