#pragma once

#include <string>
#include <vector>

#include "hv/horospherical.hpp"

namespace hv {

// Degrees on a general minimal rational curve: V_0 = O(a[0]), V/V_0 = sum O(a[i]),
// W_0 = O(b[0]), W/W_0 = sum O(b[j]), subject to the degree equations of the
// four graded pieces of D|_C = O(2) + O(1)^p + O^r + O(-1)^s.
struct SplittingSolution {
  std::vector<int> a;  // a_1, then the summands of V/V_0 in non-increasing order
  std::vector<int> b;  // b_1, then the summands of W/W_0 in non-increasing order
  std::size_t solutions = 0;
  std::string v_splitting;  // e.g. "O(1)+O"
  std::string w_splitting;
};

struct SplittingInput {
  int dim_v = 0, dim_w = 0;
  int p = 0, r = 0, s = 0;
};

// Searches integer degrees in [-bound, bound]; throws NO_SOLUTION or NON_UNIQUE.
SplittingSolution splitting_solver(const SplittingInput& in, int bound = 4);
SplittingSolution splitting_solver(const CaseData& c);
// The four degree equations evaluated at a candidate (left minus right side).
std::vector<int> splitting_residuals(const SplittingInput& in, const std::vector<int>& a, const std::vector<int>& b);

}  // namespace hv
