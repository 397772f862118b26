#pragma once

#include <string>
#include <vector>

#include "hv/lie_algebra.hpp"

namespace hv {

// Free Lie algebra on n generators up to a fixed depth. Hall basis elements
// are ordered by degree and then by creation order; [a, b] is a Hall element
// when a > b and, for a = [a', a''], a'' <= b. Elements are embedded in the
// tensor algebra with degree-d words encoded in base n.
class FreeLieAlgebra {
 public:
  struct HallElement {
    int degree = 1;
    std::size_t generator = 0;  // degree 1 only
    std::size_t left = 0, right = 0;
  };

  FreeLieAlgebra(std::size_t generators, int depth);

  std::size_t generators() const { return n_; }
  int depth() const { return depth_; }
  const std::vector<HallElement>& elements() const { return elems_; }
  std::vector<std::size_t> basis(int degree) const;
  const SparseVec& tensor(std::size_t element) const { return tensors_[element]; }
  std::string label(std::size_t element) const;

  // Necklace count (1/d) sum_{e | d} mu(e) n^{d/e}.
  static std::size_t witt_dimension(std::size_t n, int degree);

  // a b - b a for homogeneous tensors of degrees da and db.
  SparseVec commutator(const SparseVec& a, int da, const SparseVec& b, int db) const;
  SparseVec generator_tensor(std::size_t g) const;

 private:
  std::size_t n_;
  int depth_;
  std::vector<HallElement> elems_;
  std::vector<SparseVec> tensors_;
};

// Rank of sparse vectors, computed after compacting the union of supports.
std::size_t sparse_rank(const std::vector<SparseVec>& vs);
// A basis of the span, as sparse vectors.
std::vector<SparseVec> sparse_span_basis(const std::vector<SparseVec>& vs);

}  // namespace hv
