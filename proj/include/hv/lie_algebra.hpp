#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hv/linalg.hpp"
#include "hv/root_system.hpp"

namespace hv {

// Sparse vector as sorted (index, value) pairs without zeros.
using SparseVec = std::vector<std::pair<std::size_t, RationalScalar>>;

SparseVec sparse_from_dense(const QVector& v);
QVector dense_from_sparse(const SparseVec& v, std::size_t dim);
void sparse_axpy(SparseVec& acc, const RationalScalar& a, const SparseVec& x);  // acc += a x

// Weight label of a basis vector: twice its epsilon coordinates, followed by
// the charge under the central element z. Brackets add weights.
using WeightKey = std::vector<int>;
WeightKey add_weights(const WeightKey& a, const WeightKey& b);

class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  explicit GradedLieAlgebra(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const SparseVec& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  // Sets [i,j] = v and [j,i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const SparseVec& v);
  QVector bracket(const QVector& x, const QVector& y) const;

  std::vector<std::string> labels;
  std::vector<int> grade;
  std::vector<WeightKey> weight;

  int min_grade() const;
  int max_grade() const;
  std::vector<std::size_t> indices_of_grade(int p) const;
  std::size_t grade_dim(int p) const { return indices_of_grade(p).size(); }

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVec> table_;
};

// Number of basis triples violating Jacobi / pairs violating antisymmetry.
std::size_t jacobi_violations(const GradedLieAlgebra& g);
std::size_t antisymmetry_violations(const GradedLieAlgebra& g);
// Number of basis pairs whose bracket leaves grade p+q or weight sum.
std::size_t grading_violations(const GradedLieAlgebra& g);

struct NegativePart {
  GradedLieAlgebra m;
  std::vector<std::size_t> embedding;  // basis index in g of each basis vector of m
};
// Throws NOT_FUNDAMENTAL unless g_{-1} generates the negative part.
NegativePart negative_part(const GradedLieAlgebra& g);

// Chevalley basis: h_1..h_r then root vectors in root order. All grades 0.
GradedLieAlgebra build_semisimple(const RootSystem& rs, const ChevalleyConstants& n);
// Assign grade alpha(E) to root vectors, 0 to the Cartan.
void apply_grading(GradedLieAlgebra& l, const RootSystem& rs, const CharacteristicElement& e);

struct LieModule {
  std::size_t dim = 0;
  std::vector<QMatrix> action;   // indexed by algebra basis
  std::vector<QVector> weight;   // epsilon coordinates
  std::vector<int> grade;
  std::vector<std::string> labels;
};

// Number of algebra basis pairs (x,y) with rho([x,y]) != [rho x, rho y].
std::size_t representation_violations(const GradedLieAlgebra& l, const LieModule& u);

// Matrices of Chevalley generators e_i, f_i, h_i on a module.
struct GeneratorAction {
  std::size_t dim = 0;
  std::vector<QMatrix> e, f, h;
  std::vector<std::vector<int>> labels;  // Dynkin labels of each basis weight
};

// Minuscule module of highest weight with the given Dynkin labels, generators
// acting by 0/1 matrices on the weight basis.
GeneratorAction minuscule_module(const std::vector<std::vector<int>>& cartan, const std::vector<int>& highest);
// Cartan matrix of E6 in Bourbaki numbering.
std::vector<std::vector<int>> cartan_e6();
// The 26-dimensional F4 module of highest weight varpi_4, cut out of the E6
// minuscule module by folding along the diagram automorphism.
GeneratorAction f4_module_26();

// Extends generator matrices to all Chevalley basis elements of l.
LieModule module_from_generators(const RootSystem& rs, const ChevalleyConstants& n, const GeneratorAction& gens);

// Independent weight multiplicities by Freudenthal's formula; keys are Dynkin labels.
std::map<std::vector<int>, int> freudenthal_multiplicities(const RootSystem& rs, const std::vector<int>& highest);
std::map<std::vector<int>, int> module_weight_multiplicities(const GeneratorAction& gens);

// Grade of each weight vector: weight(E) + shift with minimum grade -1.
void grade_module(LieModule& u, const CharacteristicElement& e);

}  // namespace hv
