#include "hv/lie_algebra.hpp"

#include <algorithm>
#include <map>

namespace hv {

SparseVec sparse_from_dense(const QVector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
  return s;
}

QVector dense_from_sparse(const SparseVec& v, std::size_t dim) {
  QVector d(dim);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

void sparse_axpy(SparseVec& acc, const RationalScalar& a, const SparseVec& x) {
  if (sgn(a) == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < x.size()) {
    if (j == x.size() || (i < acc.size() && acc[i].first < x[j].first)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || x[j].first < acc[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      RationalScalar v = acc[i].second + a * x[j].second;
      if (sgn(v) != 0) out.emplace_back(acc[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  acc.swap(out);
}

WeightKey add_weights(const WeightKey& a, const WeightKey& b) {
  WeightKey c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

GradedLieAlgebra::GradedLieAlgebra(std::size_t dim)
    : labels(dim), grade(dim, 0), weight(dim), dim_(dim), table_(dim * dim) {}

void GradedLieAlgebra::set_bracket(std::size_t i, std::size_t j, const SparseVec& v) {
  table_[i * dim_ + j] = v;
  SparseVec neg = v;
  for (auto& e : neg) e.second = -e.second;
  table_[j * dim_ + i] = std::move(neg);
}

QVector GradedLieAlgebra::bracket(const QVector& x, const QVector& y) const {
  SparseVec acc;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      sparse_axpy(acc, x[i] * y[j], bracket(i, j));
    }
  }
  return dense_from_sparse(acc, dim_);
}

int GradedLieAlgebra::min_grade() const { return grade.empty() ? 0 : *std::min_element(grade.begin(), grade.end()); }
int GradedLieAlgebra::max_grade() const { return grade.empty() ? 0 : *std::max_element(grade.begin(), grade.end()); }

std::vector<std::size_t> GradedLieAlgebra::indices_of_grade(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (grade[i] == p) out.push_back(i);
  return out;
}

namespace {

SparseVec bracket_with_basis(const GradedLieAlgebra& g, const SparseVec& x, std::size_t k) {
  SparseVec acc;
  for (const auto& [i, a] : x) sparse_axpy(acc, a, g.bracket(i, k));
  return acc;
}

}  // namespace

std::size_t jacobi_violations(const GradedLieAlgebra& g) {
  std::size_t bad = 0;
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const SparseVec& ij = g.bracket(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVec acc = bracket_with_basis(g, ij, k);
        sparse_axpy(acc, 1, bracket_with_basis(g, g.bracket(j, k), i));
        sparse_axpy(acc, 1, bracket_with_basis(g, g.bracket(k, i), j));
        if (!acc.empty()) ++bad;
      }
    }
  return bad;
}

std::size_t antisymmetry_violations(const GradedLieAlgebra& g) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      SparseVec s = g.bracket(i, j);
      sparse_axpy(s, 1, g.bracket(j, i));
      if (!s.empty()) ++bad;
    }
  return bad;
}

std::size_t grading_violations(const GradedLieAlgebra& g) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      WeightKey w = add_weights(g.weight[i], g.weight[j]);
      for (const auto& [k, v] : g.bracket(i, j))
        if (g.grade[k] != g.grade[i] + g.grade[j] || g.weight[k] != w) {
          ++bad;
          break;
        }
    }
  return bad;
}

GradedLieAlgebra build_semisimple(const RootSystem& rs, const ChevalleyConstants& n) {
  auto r = static_cast<std::size_t>(rs.rank);
  std::size_t dim = r + rs.size();
  std::size_t eps_dim = rs.simple_roots.front().size();
  GradedLieAlgebra l(dim);
  for (std::size_t i = 0; i < r; ++i) {
    l.labels[i] = "h" + std::to_string(i + 1);
    l.weight[i] = WeightKey(eps_dim + 1, 0);
  }
  for (std::size_t a = 0; a < rs.size(); ++a) {
    std::string name = "e(";
    for (std::size_t k = 0; k < r; ++k) name += (k ? "," : "") + std::to_string(rs.roots[a][k]);
    l.labels[r + a] = name + ")";
    QVector e = rs.eps(rs.roots[a]);
    WeightKey w(eps_dim + 1, 0);
    for (std::size_t k = 0; k < eps_dim; ++k) {
      RationalScalar twice = 2 * e[k];
      w[k] = static_cast<int>(twice.get_num().get_si());
    }
    l.weight[r + a] = w;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < rs.size(); ++a) {
      int c = rs.pairing(rs.roots[a], static_cast<int>(i));
      if (c != 0) l.set_bracket(i, r + a, {{r + a, RationalScalar(c)}});
    }
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = a + 1; b < rs.size(); ++b) {
      if (b == rs.negative_of(a)) {
        // [e_a, e_-a] = h_a = sum_j k_j (a_j,a_j)/(a,a) h_j
        RationalScalar norm = rs.inner(rs.roots[a], rs.roots[a]);
        SparseVec h;
        for (std::size_t j = 0; j < r; ++j)
          if (rs.roots[a][j] != 0) h.emplace_back(j, rs.roots[a][j] * rs.gram[j][j] / norm);
        l.set_bracket(r + a, r + b, h);
        continue;
      }
      int s = rs.sum_index(a, b);
      if (s >= 0) l.set_bracket(r + a, r + b, {{r + static_cast<std::size_t>(s), RationalScalar(n(a, b))}});
    }
  return l;
}

void apply_grading(GradedLieAlgebra& l, const RootSystem& rs, const CharacteristicElement& e) {
  auto r = static_cast<std::size_t>(rs.rank);
  for (std::size_t a = 0; a < rs.size(); ++a) {
    RationalScalar d = evaluate(e, rs.eps(rs.roots[a]));
    l.grade[r + a] = static_cast<int>(d.get_num().get_si());
  }
}

std::size_t representation_violations(const GradedLieAlgebra& l, const LieModule& u) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      QMatrix lhs(u.dim, u.dim);
      for (const auto& [k, c] : l.bracket(i, j)) lhs = lhs + u.action[k].scaled(c);
      QMatrix rhs = u.action[i] * u.action[j] - u.action[j] * u.action[i];
      if (!(lhs == rhs)) ++bad;
    }
  return bad;
}

NegativePart negative_part(const GradedLieAlgebra& g) {
  NegativePart out;
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.grade[i] < 0) {
      pos[i] = out.embedding.size();
      out.embedding.push_back(i);
    }
  std::size_t n = out.embedding.size();
  out.m = GradedLieAlgebra(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t i = out.embedding[a];
    out.m.labels[a] = g.labels[i];
    out.m.grade[a] = g.grade[i];
    out.m.weight[a] = g.weight[i];
    for (std::size_t b = a + 1; b < n; ++b) {
      SparseVec v;
      for (const auto& [k, x] : g.bracket(i, out.embedding[b])) v.emplace_back(pos.at(k), x);
      if (!v.empty()) out.m.set_bracket(a, b, v);
    }
  }
  int depth = -out.m.min_grade();
  auto deg1 = out.m.indices_of_grade(-1);
  for (int p = 1; p < depth; ++p) {
    auto target = out.m.indices_of_grade(-p - 1);
    std::vector<QVector> span;
    for (std::size_t a : deg1)
      for (std::size_t b : out.m.indices_of_grade(-p))
        if (!out.m.bracket(a, b).empty()) span.push_back(dense_from_sparse(out.m.bracket(a, b), n));
    if (span_rank(span, n) != target.size())
      throw Error("NOT_FUNDAMENTAL", "degree -1 does not generate degree " + std::to_string(-p - 1));
  }
  return out;
}

}  // namespace hv
