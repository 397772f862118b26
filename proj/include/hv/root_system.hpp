#pragma once

#include <map>
#include <string>
#include <vector>

#include "hv/linalg.hpp"

namespace hv {

enum class Family { A, B, C, F, G };

std::string family_name(Family f);

// Roots are stored by their coefficients on the simple roots. Positive roots
// come first, ordered by height and then lexicographically; the negative of
// positive root i sits at index num_positive + i.
struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  std::vector<QVector> simple_roots;           // epsilon coordinates
  std::vector<std::vector<int>> roots;         // simple-root coefficients
  std::vector<std::vector<int>> cartan_matrix;  // [i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<RationalScalar>> gram;  // (alpha_i, alpha_j)
  std::size_t num_positive = 0;

  std::size_t size() const { return roots.size(); }
  bool is_positive(std::size_t r) const { return r < num_positive; }
  std::size_t negative_of(std::size_t r) const {
    return r < num_positive ? r + num_positive : r - num_positive;
  }
  int height(std::size_t r) const;
  int index_of(const std::vector<int>& coeffs) const;  // -1 if not a root
  int sum_index(std::size_t a, std::size_t b) const;   // index of a+b or -1
  QVector eps(const std::vector<int>& coeffs) const;
  RationalScalar inner(const std::vector<int>& a, const std::vector<int>& b) const;
  RationalScalar inner_eps(const QVector& a, const QVector& b) const { return dot(a, b); }
  int pairing(const std::vector<int>& a, int j) const;  // <a, alpha_j^vee>
  std::size_t simple_index(int i) const;               // root index of alpha_{i+1}

 private:
  friend RootSystem build_root_system(Family, int);
  std::map<std::vector<int>, int> lookup_;
};

RootSystem build_root_system(Family family, int rank);

// N_{a,b} for root indices, zero when a+b is not a root.
class ChevalleyConstants {
 public:
  ChevalleyConstants() = default;
  explicit ChevalleyConstants(const RootSystem& rs);
  int operator()(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  bool defined(std::size_t a, std::size_t b) const { return defined_[a * n_ + b] != 0; }
  // Extraspecial pair (alpha0, beta0) of a positive non-simple root.
  std::pair<std::size_t, std::size_t> extraspecial(std::size_t xi) const;
  // Largest p with b - p a a root.
  int string_p(std::size_t a, std::size_t b) const;

 private:
  int compute(std::size_t a, std::size_t b);
  RootSystem rs_;
  std::size_t n_ = 0;
  std::vector<int> table_;
  std::vector<char> defined_;
  std::vector<char> done_;
  std::vector<std::pair<std::size_t, std::size_t>> extraspecial_;
};

ChevalleyConstants chevalley_constants(const RootSystem& rs);

struct CharacteristicElement {
  QVector coords;  // epsilon coordinates, lying in the span of the roots
  int index = 0;   // 1-based distinguished simple root
};

CharacteristicElement characteristic_element(const RootSystem& rs, int i);
RationalScalar evaluate(const CharacteristicElement& e, const QVector& eps_weight);
std::map<int, std::vector<std::size_t>> grade_roots(const RootSystem& rs, const CharacteristicElement& e);

// Express a weight given by its values <mu, alpha_j^vee> in epsilon coordinates.
QVector weight_from_labels(const RootSystem& rs, const std::vector<RationalScalar>& labels);

}  // namespace hv
