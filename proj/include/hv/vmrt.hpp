#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hv/horospherical.hpp"
#include "hv/polynomial.hpp"

namespace hv {

// beta = c v + v^2 (x) w.
struct ConePoint {
  RationalScalar c = 1;
  QVector v;
  QVector w;
};

struct SecondFundamentalForm {
  // lifts[a][b] = second derivative of beta along parameters a, b; II is its class mod T.
  std::vector<std::vector<QVector>> lifts;
  std::vector<QVector> t2_basis;
  std::size_t r = 0;
  bool w_directions_vanish = true;  // II(v^2 (x) w', v^2 (x) w'') = 0
};

struct ThirdFundamentalForm {
  std::size_t s = 0;  // dim U / T2
  bool surjective = false;
  bool vanishes_off_w_slot = true;  // third derivatives without a w-parameter lie in T2
};

struct ModelAutomorphisms {
  std::size_t linear_dim = 0;      // dim of {A : A beta in T_beta for all beta}
  std::size_t projective_dim = 0;  // linear_dim - 1 (modulo scalars)
  std::size_t expected_projective = 0;  // dim sl(V) + dim sl(W) + 1 + dim V dim W
  std::vector<QMatrix> basis;
  std::size_t equations = 0;
  bool bracket_closed = false;
  bool contains_identity = false;
  bool equals_explicit_generators = false;  // span of gl(V), gl(W), V* (x) W* actions
};

// U = V (+) Sym^2 V (x) W. Coordinates: V first, then e_i e_j (x) f_k with
// i <= j in lexicographic order and k fastest.
class ConeModel {
 public:
  ConeModel(int dim_v, int dim_w);

  int dim_v() const { return dv_; }
  int dim_w() const { return dw_; }
  std::size_t dim_u() const { return static_cast<std::size_t>(dv_ + sym_dim() * dw_); }
  int sym_dim() const { return dv_ * (dv_ + 1) / 2; }
  std::size_t sym_index(int i, int j) const;
  std::size_t coordinate(int i, int j, int k) const { return dv_ + sym_index(i, j) * dw_ + k; }
  // Parameters are (c, v_1.., w_1..).
  std::size_t num_params() const { return 1 + dv_ + dw_; }
  const PolyVector& cone_map() const { return map_; }
  QVector point(const ConePoint& b) const;

  // Throws DEGENERATE_POINT if v = 0, w = 0 or c = 0.
  std::vector<QVector> tangent_space(const ConePoint& b) const;
  SecondFundamentalForm second_fundamental_form(const ConePoint& b) const;
  ThirdFundamentalForm third_fundamental_form(const ConePoint& b) const;

  ModelAutomorphisms automorphism_algebra() const;
  std::vector<QMatrix> explicit_generators() const;

 private:
  void check_point(const ConePoint& b) const;
  QVector params(const ConePoint& b) const;
  QVector sym_product(const QVector& a, const QVector& b) const;  // a o b in Sym^2 V
  int dv_, dw_;
  PolyVector map_;
};

// Deterministic generic sample points with small prime coordinates.
std::vector<ConePoint> sample_points(int dim_v, int dim_w, std::size_t count = 3);

// Cone over the closure of the G_0-orbit of x_hw + u_hw inside g_{-1}, where
// x_hw and u_hw are the b_0-highest weight vectors of l_{-1} and U_{-1}.
class OrbitCone {
 public:
  explicit OrbitCone(std::shared_ptr<const CaseData> data);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }  // g indices of g_{-1}
  const std::vector<QMatrix>& g0_action() const { return action_; }
  const QVector& base_point() const { return base_; }
  const CaseData& data() const { return *data_; }
  // Image of the base point under a deterministic product of root and U_0 exponentials.
  QVector sample(std::size_t i) const;
  // Span of U(g_0)_{<= order} applied to beta: order 1 is the tangent space.
  std::vector<QVector> osculating_space(const QVector& beta, int order) const;
  // Bracket wedge^2 g_{-1} -> g_{-2}; pairs (i<j) in lexicographic order.
  QMatrix omega() const;
  std::size_t wedge_index(std::size_t i, std::size_t j) const;

 private:
  std::shared_ptr<const CaseData> data_;
  std::vector<std::size_t> basis_;
  std::vector<QMatrix> action_;
  std::vector<QMatrix> unipotent_;  // nilpotent generators used for sampling
  QVector base_;
};

struct OsculatingData {
  std::size_t p = 0, q_d = 0, q_t = 0, r = 0, s = 0;
  long t = 0;    // q_T - r - 2s
  long t_d = 0;  // q_D - r - 2s
  std::vector<QVector> tangent, t2;  // at the first model sample
  std::size_t samples = 0;
  bool third_surjective = false;
  bool w_directions_vanish = false;
  bool third_vanishes_off_w_slot = false;
  // Same numbers from the G_0-orbit inside g_{-1}.
  std::size_t orbit_p = 0, orbit_r = 0, orbit_s = 0;
};
// Throws RANK_DROP if sample points disagree.
OsculatingData osculating_table(const CaseData& c, std::size_t samples = 3);

// dim [x_{-alpha}, l_{-1}] for the grading simple root alpha.
std::size_t bracket_rank_at_alpha(const CaseData& c);

struct FrobeniusReport {
  std::size_t wedge_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t tangent_span_dim = 0;
  std::size_t samples_used = 0;
  bool omega_surjective = false;
  bool tangent_isotropic = true;  // omega vanishes on wedge^2 T at every sample
  bool equal = false;             // span of wedge^2 T equals Ker omega
  std::vector<QVector> tangent_span;  // basis in wedge coordinates
  bool pass() const { return omega_surjective && tangent_isotropic && equal; }
};
FrobeniusReport frobenius_kernel_check(const OrbitCone& cone, std::size_t max_samples = 40);

struct DegreeComparison {
  int degree = 0;
  std::size_t free_dim = 0;
  std::size_t witt_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t quotient_dim = 0;
  std::size_t m_dim = 0;
  bool surjective = false;
  bool kernel_is_ideal = false;
};
struct DeterminedByReport {
  std::vector<DegreeComparison> degrees;
  bool relations_graded = false;  // span of wedge^2 T is a sum of weight spaces
  bool pass() const;
};
DeterminedByReport determined_by_check(const OrbitCone& cone, const FrobeniusReport& frob);

struct AutomorphismComparison {
  std::size_t g0_dim = 0;
  std::size_t image_dim = 0;  // rank of g_0 -> End(g_{-1})
  std::size_t sandwich_dim = 0;  // dim of {A : A beta_i in T_{beta_i}} over the samples
  std::size_t samples_used = 0;
  bool image_preserves = false;
  bool equal = false;  // sandwich_dim == image_dim, so the algebra is the g_0-image
  bool bracket_closed = false;
};
AutomorphismComparison g0_image_check(const OrbitCone& cone, std::size_t max_samples = 40);

struct DimensionCheck {
  std::size_t formula = 0;  // dim P(V) + dim W
  std::size_t table = 0;    // m for B_m, 4 for F_4
  std::size_t computed_p = 0;
};
DimensionCheck vmrt_dimension_check(const CaseData& c);

// Dimension identities for the quotients T/C beta, T2/T and U/T2 with V_0 = C v, W_0 = C w.
struct ExactSequenceDims {
  std::size_t p = 0, p_formula = 0;
  std::size_t r = 0, r_formula = 0;
  std::size_t s = 0, s_formula = 0;
  bool pass() const { return p == p_formula && r == r_formula && s == s_formula; }
};
ExactSequenceDims exact_sequence_dims(const CaseData& c);

}  // namespace hv
