#include "hv/free_lie.hpp"

#include <map>

namespace hv {

FreeLieAlgebra::FreeLieAlgebra(std::size_t generators, int depth) : n_(generators), depth_(depth) {
  if (n_ == 0 || depth_ < 1) throw Error("INVALID_ARGUMENT", "free Lie algebra needs generators and depth >= 1");
  for (std::size_t g = 0; g < n_; ++g) {
    HallElement e;
    e.generator = g;
    elems_.push_back(e);
    tensors_.push_back(generator_tensor(g));
  }
  for (int d = 2; d <= depth_; ++d) {
    std::size_t end = elems_.size();
    for (std::size_t a = 0; a < end; ++a)
      for (std::size_t b = 0; b < a; ++b) {
        if (elems_[a].degree + elems_[b].degree != d) continue;
        if (elems_[a].degree > 1 && elems_[a].right > b) continue;
        HallElement e;
        e.degree = d;
        e.left = a;
        e.right = b;
        tensors_.push_back(commutator(tensors_[a], elems_[a].degree, tensors_[b], elems_[b].degree));
        elems_.push_back(e);
      }
  }
}

std::vector<std::size_t> FreeLieAlgebra::basis(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].degree == degree) out.push_back(i);
  return out;
}

std::string FreeLieAlgebra::label(std::size_t element) const {
  const auto& e = elems_[element];
  if (e.degree == 1) return "x" + std::to_string(e.generator);
  return "[" + label(e.left) + "," + label(e.right) + "]";
}

std::size_t FreeLieAlgebra::witt_dimension(std::size_t n, int degree) {
  auto mobius = [](int k) {
    int result = 1;
    for (int p = 2; p * p <= k; ++p)
      if (k % p == 0) {
        k /= p;
        if (k % p == 0) return 0;
        result = -result;
      }
    return k > 1 ? -result : result;
  };
  long long total = 0;
  for (int e = 1; e <= degree; ++e) {
    if (degree % e != 0) continue;
    long long pw = 1;
    for (int i = 0; i < degree / e; ++i) pw *= static_cast<long long>(n);
    total += mobius(e) * pw;
  }
  return static_cast<std::size_t>(total / degree);
}

SparseVec FreeLieAlgebra::generator_tensor(std::size_t g) const { return {{g, RationalScalar(1)}}; }

SparseVec FreeLieAlgebra::commutator(const SparseVec& a, int da, const SparseVec& b, int db) const {
  std::size_t shift_a = 1, shift_b = 1;
  for (int i = 0; i < da; ++i) shift_a *= n_;
  for (int i = 0; i < db; ++i) shift_b *= n_;
  std::map<std::size_t, RationalScalar> acc;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      acc[wa * shift_b + wb] += ca * cb;
      acc[wb * shift_a + wa] -= ca * cb;
    }
  SparseVec out;
  for (auto& [w, c] : acc)
    if (sgn(c) != 0) out.emplace_back(w, c);
  return out;
}

namespace {

std::vector<QVector> compact(const std::vector<SparseVec>& vs, std::vector<std::size_t>& support) {
  std::map<std::size_t, std::size_t> pos;
  for (const auto& v : vs)
    for (const auto& [i, c] : v) pos.emplace(i, 0);
  support.clear();
  for (auto& [i, p] : pos) {
    p = support.size();
    support.push_back(i);
  }
  std::vector<QVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    QVector d(support.size());
    for (const auto& [i, c] : v) d[pos.at(i)] = c;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::size_t sparse_rank(const std::vector<SparseVec>& vs) {
  std::map<std::size_t, std::size_t> pos;
  for (const auto& v : vs)
    for (const auto& [i, c] : v) pos.emplace(i, pos.size());
  if (pos.empty()) return 0;
  QMatrixBuilder b(pos.size(), vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (const auto& [i, c] : vs[j]) b.add(pos.at(i), j, c);
  return certified_rank(b.build());
}

std::vector<SparseVec> sparse_span_basis(const std::vector<SparseVec>& vs) {
  std::vector<std::size_t> support;
  auto dense = compact(vs, support);
  std::vector<SparseVec> out;
  if (support.empty()) return out;
  for (const auto& v : span_basis(dense, support.size())) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) s.emplace_back(support[i], v[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hv
