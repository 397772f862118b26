#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hv/lemmas.hpp"

namespace hv {

// Normal form phi = d eta + zeta for 2-cocycles of m with values in g in one degree k.
// zeta ranges over the span N_k of
//   (a) W^2(l_-, U)_k on wedge^2 l_-,
//   (b) Y^* wedge w for Y in U_{-1} and w in W^1(l_-, U)_{k-1} + W^1(l_-, l)_{k-1},
//   (c) for k = 1 only, Hom(wedge^2 U_{-1}, U),
// where each W is the orthogonal complement of the coboundaries inside the
// cocycles under the coordinate pairing. All work is blockwise in weights.
class CocycleNormalizer {
 public:
  CocycleNormalizer(std::shared_ptr<const CaseComplexes> cc, int k);

  int degree() const { return k_; }
  std::size_t cochain_dim() const;            // dim Hom(wedge^2 m, g)_k
  std::size_t dim_z() const { return dim_z_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t dim_n() const { return dim_n_; }
  // span(N) meets the coboundaries only in 0.
  bool unique() const { return unique_; }
  // Every cocycle lies in span(N) + coboundaries.
  bool complete() const { return complete_; }
  // Dimension of (span(N) + B) intersected with Z, modulo B.
  std::size_t classes_reached() const { return reached_; }

  struct Decomposition {
    QVector eta;
    QVector zeta;
  };
  // Throws NOT_A_COCYCLE if d phi != 0 and NOT_NORMALIZABLE if phi is outside span(N) + B.
  Decomposition normalize(const QVector& phi) const;
  // zeta has no components outside (a), (b), (c) and each restriction lies in its W.
  bool satisfies_conditions(const QVector& zeta) const;

  QVector differential1(const QVector& eta) const;   // d on Hom(m, g)_k
  QVector differential2(const QVector& phi) const;   // d on Hom(wedge^2 m, g)_k
  std::size_t eta_dim() const;

  // Seeded pseudo-random cocycle with small integer coordinates on a kernel basis.
  QVector random_cocycle(std::uint64_t seed) const;
  QVector random_cochain1(std::uint64_t seed) const;

 private:
  struct Block {
    std::size_t begin = 0, end = 0;          // rows in space(2,k)
    std::size_t eta_begin = 0, eta_end = 0;  // columns in space(1,k)
    QMatrix d1;                              // eta block -> phi block
    QMatrix d2;                              // phi block -> space(3,k) block
    std::vector<QVector> n;                  // local coordinates
    std::vector<QVector> z;                  // kernel basis of d2
  };
  // Complement of the coboundaries in the cocycles, per weight block, in block-local coordinates.
  using Complement = std::map<WeightKey, std::vector<QVector>>;
  static Complement complement(const CochainComplex& c, int q, int k);
  static bool in_complement(const CochainComplex& c, int q, int k, const Complement& w, const SparseVec& v);

  std::shared_ptr<const CaseComplexes> cc_;
  int k_;
  std::map<WeightKey, Block> blocks_;
  Complement w2_u_;  // l_- with values in U, degree 2, k
  Complement w1_u_;  // l_- with values in U, degree 1, k-1
  Complement w1_l_;  // l_- with values in l, degree 1, k-1
  std::size_t dim_z_ = 0, dim_b_ = 0, dim_n_ = 0, reached_ = 0;
  bool unique_ = true, complete_ = true;
};

}  // namespace hv
