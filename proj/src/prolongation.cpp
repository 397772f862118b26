#include "hv/prolongation.hpp"

#include <algorithm>
#include <map>

namespace hv {

namespace {

// Element of a nonnegative level: for each basis vector x of m, the
// coordinates of t(x) in the space of grade grade(x) + level.
using LevelElem = std::vector<SparseVec>;

class Prolongator {
 public:
  explicit Prolongator(const ProlongationInput& in) : m_(in.m) {
    n_ = m_.dim();
    pos_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      auto& list = by_grade_[m_.grade[x]];
      pos_[x] = list.size();
      list.push_back(x);
    }
    // Level 0 from the given derivations.
    std::vector<QVector> flat;
    for (const auto& d : in.g0) {
      QVector v(n_ * n_);
      for (const auto& e : d.entries()) v[e.row * n_ + e.col] = e.value;
      flat.push_back(std::move(v));
    }
    std::vector<LevelElem> level0;
    for (const auto& v : span_basis(flat, n_ * n_)) {
      LevelElem t(n_);
      for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y)
          if (sgn(v[y * n_ + x]) != 0) {
            if (m_.grade[y] != m_.grade[x]) throw Error("NOT_DEGREE_ZERO", "g_0 element shifts grades");
            t[x].emplace_back(pos_[y], v[y * n_ + x]);
          }
      level0.push_back(std::move(t));
    }
    levels_.push_back(std::move(level0));
  }

  std::size_t space_dim(int s) const {
    if (s < 0) {
      auto it = by_grade_.find(s);
      return it == by_grade_.end() ? 0 : it->second.size();
    }
    return static_cast<std::size_t>(s) < levels_.size() ? levels_[static_cast<std::size_t>(s)].size() : 0;
  }

  // [b, y] where b is basis vector i of the space of grade s, as coordinates in grade s + grade(y).
  SparseVec act(int s, std::size_t i, std::size_t y) const {
    if (s >= 0) return levels_[static_cast<std::size_t>(s)][i][y];
    std::size_t bx = by_grade_.at(s)[i];
    SparseVec out;
    for (const auto& [c, v] : m_.bracket(bx, y)) out.emplace_back(pos_[c], v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  std::size_t next_level() {
    int l = static_cast<int>(levels_.size());
    std::vector<std::size_t> offset(n_ + 1, 0);
    for (std::size_t x = 0; x < n_; ++x) offset[x + 1] = offset[x] + space_dim(m_.grade[x] + l);
    std::size_t unknowns = offset[n_];
    std::vector<LevelElem> level;
    if (unknowns == 0) {
      levels_.push_back(level);
      return 0;
    }
    std::size_t rows = 0;
    std::vector<QEntry> entries;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t c = a + 1; c < n_; ++c) {
        int s = m_.grade[a] + m_.grade[c] + l;
        std::size_t ds = space_dim(s);
        if (ds == 0) continue;
        for (const auto& [d, coef] : m_.bracket(a, c))
          for (std::size_t t = 0; t < ds; ++t) entries.push_back({rows + t, offset[d] + t, coef});
        int sa = m_.grade[a] + l, sc = m_.grade[c] + l;
        for (std::size_t i = 0; i < space_dim(sa); ++i)
          for (const auto& [t, v] : act(sa, i, c)) entries.push_back({rows + t, offset[a] + i, -v});
        for (std::size_t i = 0; i < space_dim(sc); ++i)
          for (const auto& [t, v] : act(sc, i, a)) entries.push_back({rows + t, offset[c] + i, v});
        rows += ds;
      }
    QMatrixBuilder builder(rows, unknowns);
    for (auto& e : entries) builder.add(e.row, e.col, e.value);
    for (const auto& v : kernel_basis(builder.build())) {
      LevelElem t(n_);
      for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t i = offset[x]; i < offset[x + 1]; ++i)
          if (sgn(v[i]) != 0) t[x].emplace_back(i - offset[x], v[i]);
      level.push_back(std::move(t));
    }
    levels_.push_back(std::move(level));
    return levels_.back().size();
  }

 private:
  const GradedLieAlgebra& m_;
  std::size_t n_ = 0;
  std::map<int, std::vector<std::size_t>> by_grade_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<LevelElem>> levels_;
};

}  // namespace

std::vector<std::size_t> prolongation_dims(const ProlongationInput& in, int max_degree) {
  Prolongator p(in);
  std::vector<std::size_t> dims;
  for (int l = 1; l <= max_degree; ++l) {
    dims.push_back(p.next_level());
    if (dims.back() == 0) break;
  }
  return dims;
}

std::vector<std::size_t> tanaka_prolongation(const ProlongationInput& in, int max_degree) {
  auto dims = prolongation_dims(in, max_degree);
  if (dims.empty() || dims.back() != 0)
    throw Error("NO_TERMINATION", "prolongation nonzero at degree " + std::to_string(max_degree));
  return dims;
}

ProlongationInput prolongation_input(const GradedLieAlgebra& g) {
  NegativePart np = negative_part(g);
  ProlongationInput in;
  in.m = np.m;
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t a = 0; a < np.embedding.size(); ++a) pos[np.embedding[a]] = a;
  for (std::size_t z : g.indices_of_grade(0)) {
    QMatrixBuilder b(np.m.dim(), np.m.dim());
    for (std::size_t a = 0; a < np.embedding.size(); ++a)
      for (const auto& [c, v] : g.bracket(z, np.embedding[a])) b.add(pos.at(c), a, v);
    in.g0.push_back(b.build());
  }
  return in;
}

}  // namespace hv
