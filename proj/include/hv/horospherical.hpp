#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hv/lie_algebra.hpp"

namespace hv {

struct HorosphericalCase {
  std::string id;  // "b3", "b4", "b5", "f4"
  Family family = Family::B;
  int rank = 0;
  int grading_root = 0;  // 1-based simple root defining the gradation
  int module_node = 0;   // 1-based fundamental weight of U
  int dim_v = 0;
  int dim_w = 0;
  std::string display() const;  // "B3", "F4"
};

HorosphericalCase make_case(const std::string& id);
std::vector<std::string> all_case_ids();

// g = l (+) z (+) U with basis ordered as l, then z, then U.
struct CaseData {
  HorosphericalCase hc;
  RootSystem rs;
  ChevalleyConstants chevalley;
  CharacteristicElement e;
  GradedLieAlgebra l;
  LieModule u;
  GradedLieAlgebra g;
  int z_weight = 1;
  std::size_t dim_l = 0;
  std::size_t z_index = 0;
  std::size_t u_offset = 0;
  int mu = 0;  // depth of the negative part
  int nu = 0;  // top grade of U

  bool is_l(std::size_t i) const { return i < dim_l; }
  bool is_u(std::size_t i) const { return i >= u_offset; }
  // Basis indices of g by piece and grade range [lo, hi].
  std::vector<std::size_t> l_range(int lo, int hi) const;
  std::vector<std::size_t> u_range(int lo, int hi) const;
  std::vector<std::size_t> l_all() const;
  std::vector<std::size_t> u_all() const;
  std::vector<std::size_t> g_all() const;
  std::vector<std::size_t> m_all() const;  // all negative-grade indices
  std::vector<std::size_t> z_only() const { return {z_index}; }
};

CaseData build_case(const std::string& id, int z_weight = 1);
// Thread-safe cache of weight-1 cases.
std::shared_ptr<const CaseData> get_case(const std::string& id);

GradedLieAlgebra horospherical_extend(const GradedLieAlgebra& l, const LieModule& u, int z_weight);

// [l, z] = 0 and [l_-, U_-] = 0.
bool check_p0(const CaseData& c);
// The only X in l_{>= -mu+1} + U_{>= 0} with [l_-, X] = 0 is zero.
bool verify_p1(const CaseData& c);

}  // namespace hv
