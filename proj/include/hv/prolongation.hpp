#pragma once

#include <vector>

#include "hv/lie_algebra.hpp"

namespace hv {

// A fundamental negatively graded algebra m (basis indices with negative
// grades in its own algebra) and a set of degree-0 derivations of m, given as
// matrices on the m basis.
struct ProlongationInput {
  GradedLieAlgebra m;
  std::vector<QMatrix> g0;
};

// dims of g_1, g_2, ... up to max_degree, stopping after the first zero.
std::vector<std::size_t> prolongation_dims(const ProlongationInput& in, int max_degree);
// As above; throws NO_TERMINATION unless a zero degree is reached.
std::vector<std::size_t> tanaka_prolongation(const ProlongationInput& in, int max_degree);

// m = negative part of g and g_0 = ad of the degree-0 basis of g restricted to m.
ProlongationInput prolongation_input(const GradedLieAlgebra& g);

}  // namespace hv
