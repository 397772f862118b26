#pragma once

#include <string>
#include <vector>

#include "hv/claims.hpp"
#include "hv/cochain.hpp"

namespace hv {

// JSON array of objects with fields claim_id, case, status, expected,
// computed, provenance, elapsed_ms.
std::string emit_json(const std::vector<ClaimResult>& results);
// One table per module.
std::string emit_markdown(const std::vector<ClaimResult>& results);
std::string cohomology_json(const CohomologyReport& r);
bool any_failed(const std::vector<ClaimResult>& results);

}  // namespace hv
