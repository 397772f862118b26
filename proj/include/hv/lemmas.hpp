#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hv/cochain.hpp"
#include "hv/horospherical.hpp"

namespace hv {

// Cochain complexes of one case: m with coefficients g, and l_- with
// coefficients l, z and U.
struct CaseComplexes {
  std::shared_ptr<const CaseData> data;
  std::unique_ptr<CochainComplex> m_g;
  std::unique_ptr<CochainComplex> lm_l;
  std::unique_ptr<CochainComplex> lm_z;
  std::unique_ptr<CochainComplex> lm_u;
};
std::shared_ptr<const CaseComplexes> get_complexes(const std::string& id);
std::shared_ptr<const CaseComplexes> make_complexes(std::shared_ptr<const CaseData> data);

// Range of k for which Hom(wedge^q m, Gamma)_k can be nonzero.
int max_degree(const CochainComplex& c, int q);

// Vanishing pattern of H^q over a range of degrees together with support checks.
struct PatternCheck {
  std::string item;
  int q = 0;
  int shift = 0;                   // reported index = degree + shift
  std::map<int, std::size_t> dims;  // reported index -> dim H, all checked indices
  std::set<int> allowed;            // indices where nonvanishing is permitted
  std::map<int, bool> support;      // reported index -> support check result
  std::map<int, std::size_t> supported;  // reported index -> classes reached by the support
  bool vanishing_ok = true;
  bool support_ok = true;
  bool pass() const { return vanishing_ok && support_ok; }
  std::string nonzero_summary() const;  // e.g. "{1:15}" or "{}"
};

using SupportFn = std::function<bool(const CochainComplex&, const CochainElem&)>;

// Checks H^q(C)_{index - shift} for index in [lo, hi]: zero outside allowed,
// and for listed indices, classes have representatives supported where fn holds.
PatternCheck check_pattern(const std::string& item, const CochainComplex& c, int q, int shift, int lo, int hi,
                           const std::set<int>& allowed, const std::map<int, SupportFn>& supports);

// Support predicates in terms of grades of arguments and value.
SupportFn support_grades(int arg_grade, int value_grade);           // every argument in grade arg_grade
SupportFn support_value_in_u(const CaseData& c, int arg_grade, int value_grade);
SupportFn support_any_value(int arg_grade);

std::vector<PatternCheck> verify_lemma_6_2(const CaseComplexes& cc);
std::vector<PatternCheck> verify_lemma_6_3(const CaseComplexes& cc);
// H^1(m, g)_p = 0 for 1 <= p <= mu + nu.
PatternCheck verify_h1_vanishing(const CaseComplexes& cc);
// Parts of the H^2(m, g) pattern: "k3plus" (vanishing for k >= 3), "k2" (F: vanishing; B: support),
// "k1" (support).
std::vector<PatternCheck> verify_prop_6_4(const CaseComplexes& cc);

// Minimum rank of the nonzero elements of the image of d: C^q_k -> C^{q+1}_k
// (cochains on l_- with values in U), viewed as linear maps wedge^{q+1} l_- -> U.
// Uses the Borel fixed point theorem: the rank strata are closed and
// L_0-stable, so the minimum is attained on a b_0-fixed line, i.e. a weight
// vector killed by the positive root vectors of l_0.
struct MinRankReport {
  std::size_t image_dim = 0;
  std::size_t kernel_dim = 0;   // dim ker of d on C^q_k
  std::size_t fixed_lines = 0;
  std::size_t min_rank = 0;     // over nonzero image elements
  std::vector<std::size_t> fixed_ranks;
  bool exact = true;            // false if a fixed weight space has dimension > 1
};
MinRankReport min_rank_of_image(const CaseComplexes& cc, int q, int k);
// First with q = 0, k = 0 (A in U_0); second with q = 1, k = 1.
MinRankReport min_image_rank_u0(const CaseComplexes& cc);
MinRankReport lemma_6_6_report(const CaseComplexes& cc);

// H^2(m, g)_k recomputed with z acting on U by the given weight.
CohomologyReport h2_with_z_weight(const std::string& id, int z_weight, int k);

}  // namespace hv
