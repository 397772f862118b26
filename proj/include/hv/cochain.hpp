#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hv/lie_algebra.hpp"

namespace hv {

// Basis cochain X_J^* (x) gamma with J an increasing tuple of positions in the
// list of m basis vectors and gamma a position in the list of Gamma basis vectors.
struct CochainElem {
  std::array<std::uint8_t, 4> j{};
  std::uint8_t q = 0;
  std::uint32_t gamma = 0;
};

// Hom(wedge^q m, Gamma)_k: elements with grade(gamma) = sum of grades of X_J + k,
// stored contiguously per weight block.
struct CochainSpace {
  int q = 0;
  int k = 0;
  std::vector<CochainElem> elems;
  std::map<WeightKey, std::pair<std::size_t, std::size_t>> blocks;  // [begin, end)
  std::unordered_map<std::uint64_t, std::size_t> index;  // packed (j, gamma) -> position
  std::size_t dim() const { return elems.size(); }
};

struct CohomologyReport {
  std::string algebra;
  std::string coefficients;
  int q = 0;
  int k = 0;
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_h = 0;
};

using CochainPredicate = std::function<bool(const CochainElem&)>;

class CochainComplex {
 public:
  // m and gamma are lists of basis indices of g; m must be a subalgebra and
  // gamma must be stable under ad(m).
  CochainComplex(const GradedLieAlgebra& g, std::vector<std::size_t> m, std::vector<std::size_t> gamma,
                 std::string algebra_name = "m", std::string coeff_name = "g");

  const GradedLieAlgebra& algebra() const { return *g_; }
  const std::vector<std::size_t>& m() const { return m_; }
  const std::vector<std::size_t>& gamma() const { return gamma_; }

  std::shared_ptr<const CochainSpace> space(int q, int k) const;
  WeightKey weight_of(const CochainElem& e) const;

  // Matrix of d: C^q_k -> C^{q+1}_k restricted to one weight block.
  QMatrix differential_block(int q, int k, const WeightKey& w) const;
  // Full block-diagonal matrix in the orderings of space(q,k) and space(q+1,k).
  QMatrix differential(int q, int k) const;

  CohomologyReport cohomology(int q, int k) const;

  // Position of the basis cochain (j, gamma) in space(q,k), if present.
  std::optional<std::size_t> locate(int q, int k, const std::uint8_t* j, std::uint32_t gamma) const;
  // Matrix of x . phi = x.phi(...) - sum_i phi(..., [x, X_i], ...) on C^q_k, for x of
  // grade 0 normalising m and gamma.
  QMatrix degree_zero_action(int q, int k, std::size_t x) const;
  // Position in m() / gamma() of a basis index of g, or -1.
  int m_position(std::size_t i) const { return m_pos_[i]; }
  int gamma_position(std::size_t i) const { return gamma_pos_[i]; }

  static std::uint64_t pack(const std::uint8_t* j, std::uint8_t q, std::uint32_t gamma);

  // True iff every class in H^q_k has a representative supported on the basis
  // elements satisfying pred.
  bool classes_supported_in(int q, int k, const CochainPredicate& pred) const;
  // Dimension of the image in H^q_k of the cocycles supported where pred holds.
  std::size_t supported_class_dim(int q, int k, const CochainPredicate& pred) const;

  // Degree-k dims of Z^q and B^q restricted to one weight block.
  std::size_t block_dim_z(int q, int k, const WeightKey& w) const;
  std::size_t block_dim_b(int q, int k, const WeightKey& w) const;

 private:
  struct Pair {
    std::uint8_t i, j;
    RationalScalar coef;
  };
  std::shared_ptr<const CochainSpace> build_space(int q, int k) const;

  const GradedLieAlgebra* g_;
  std::vector<std::size_t> m_;
  std::vector<std::size_t> gamma_;
  std::string algebra_name_;
  std::string coeff_name_;
  std::vector<int> m_pos_;      // g index -> m position or -1
  std::vector<int> gamma_pos_;  // g index -> gamma position or -1
  std::vector<std::vector<Pair>> pairs_into_;  // per m position c: pairs (i<j) with [X_i,X_j] having X_c
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const CochainSpace>> spaces_;
};

// Dense coordinate vector of a cochain in the ordering of space(q,k).
using Cochain = QVector;

}  // namespace hv
