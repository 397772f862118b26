#include <algorithm>
#include <map>

#include "hv/lie_algebra.hpp"

namespace hv {

namespace {

QMatrix diagonal(const std::vector<RationalScalar>& d) {
  QMatrixBuilder b(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) b.add(i, i, d[i]);
  return b.build();
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

}  // namespace

GeneratorAction minuscule_module(const std::vector<std::vector<int>>& cartan, const std::vector<int>& highest) {
  std::size_t r = cartan.size();
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::vector<int>> weights{highest};
  index[highest] = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      int li = weights[k][i];
      if (li < -1 || li > 1) throw Error("NOT_MINUSCULE", "Dynkin label outside {-1,0,1}");
      if (li != 1) continue;
      std::vector<int> next(weights[k]);
      for (std::size_t j = 0; j < r; ++j) next[j] -= cartan[i][j];
      if (!index.count(next)) {
        index[next] = weights.size();
        weights.push_back(next);
      }
    }
  }
  GeneratorAction g;
  g.dim = weights.size();
  g.labels = weights;
  for (std::size_t i = 0; i < r; ++i) {
    QMatrixBuilder e(g.dim, g.dim), f(g.dim, g.dim);
    std::vector<RationalScalar> h(g.dim);
    for (std::size_t k = 0; k < g.dim; ++k) {
      h[k] = weights[k][i];
      if (weights[k][i] == 1) {
        std::vector<int> lower(weights[k]);
        for (std::size_t j = 0; j < r; ++j) lower[j] -= cartan[i][j];
        f.add(index.at(lower), k, 1);
      } else if (weights[k][i] == -1) {
        std::vector<int> upper(weights[k]);
        for (std::size_t j = 0; j < r; ++j) upper[j] += cartan[i][j];
        e.add(index.at(upper), k, 1);
      }
    }
    g.e.push_back(e.build());
    g.f.push_back(f.build());
    g.h.push_back(diagonal(h));
  }
  return g;
}

std::vector<std::vector<int>> cartan_e6() {
  std::vector<std::vector<int>> a(6, std::vector<int>(6, 0));
  for (int i = 0; i < 6; ++i) a[i][i] = 2;
  const int edges[5][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
  for (const auto& e : edges) {
    a[e[0] - 1][e[1] - 1] = -1;
    a[e[1] - 1][e[0] - 1] = -1;
  }
  return a;
}

GeneratorAction f4_module_26() {
  GeneratorAction big = minuscule_module(cartan_e6(), {1, 0, 0, 0, 0, 0});
  // F4 node i is the sum of the E6 nodes in its orbit under the diagram automorphism.
  const std::vector<std::vector<std::size_t>> orbit = {{1}, {3}, {2, 4}, {0, 5}};
  GeneratorAction folded;
  folded.dim = big.dim;
  for (const auto& o : orbit) {
    QMatrix e(big.dim, big.dim), f(big.dim, big.dim), h(big.dim, big.dim);
    for (std::size_t n : o) {
      e = e + big.e[n];
      f = f + big.f[n];
      h = h + big.h[n];
    }
    folded.e.push_back(e);
    folded.f.push_back(f);
    folded.h.push_back(h);
  }
  auto labels_of = [&](const std::vector<int>& l6) {
    std::vector<int> l(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t n : orbit[i]) l[i] += l6[n];
    return l;
  };

  // Submodule generated by the highest weight vector under the lowering operators.
  std::vector<QVector> basis;
  std::vector<std::vector<int>> labels;
  std::map<std::vector<int>, std::vector<QVector>> by_weight;
  QVector top(big.dim);
  top[0] = 1;
  basis.push_back(top);
  labels.push_back(labels_of(big.labels[0]));
  by_weight[labels.back()].push_back(top);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < 4; ++i) {
      QVector v = folded.f[i].apply(basis[k]);
      if (is_zero(v)) continue;
      std::vector<int> w;
      for (std::size_t n = 0; n < big.dim; ++n)
        if (sgn(v[n]) != 0) {
          w = labels_of(big.labels[n]);
          break;
        }
      auto& same = by_weight[w];
      if (in_span(same, v)) continue;
      same.push_back(v);
      basis.push_back(v);
      labels.push_back(w);
    }
  }
  QMatrix b = QMatrix::from_columns(big.dim, basis);
  auto restrict = [&](const QMatrix& x) {
    QMatrixBuilder out(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto c = solve(b, x.apply(basis[j]));
      if (!c) throw Error("NOT_INVARIANT", "generated subspace is not a submodule");
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (sgn((*c)[i]) != 0) out.add(i, j, (*c)[i]);
    }
    return out.build();
  };
  GeneratorAction g;
  g.dim = basis.size();
  g.labels = labels;
  for (std::size_t i = 0; i < 4; ++i) {
    g.e.push_back(restrict(folded.e[i]));
    g.f.push_back(restrict(folded.f[i]));
    g.h.push_back(restrict(folded.h[i]));
  }
  return g;
}

LieModule module_from_generators(const RootSystem& rs, const ChevalleyConstants& n, const GeneratorAction& gens) {
  auto r = static_cast<std::size_t>(rs.rank);
  LieModule u;
  u.dim = gens.dim;
  u.action.assign(r + rs.size(), QMatrix(gens.dim, gens.dim));
  for (std::size_t i = 0; i < r; ++i) {
    u.action[i] = gens.h[i];
    std::size_t s = rs.simple_index(static_cast<int>(i));
    u.action[r + s] = gens.e[i];
    u.action[r + rs.negative_of(s)] = gens.f[i];
  }
  for (std::size_t xi = 0; xi < rs.num_positive; ++xi) {
    if (rs.height(xi) < 2) continue;
    auto [a0, b0] = n.extraspecial(xi);
    RationalScalar c = make_rational(1, n(a0, b0));
    u.action[r + xi] = commutator(u.action[r + a0], u.action[r + b0]).scaled(c);
    std::size_t na = rs.negative_of(a0), nb = rs.negative_of(b0);
    RationalScalar cn = make_rational(1, n(na, nb));
    u.action[r + rs.negative_of(xi)] = commutator(u.action[r + na], u.action[r + nb]).scaled(cn);
  }
  for (const auto& l : gens.labels) {
    std::vector<RationalScalar> q(l.begin(), l.end());
    u.weight.push_back(weight_from_labels(rs, q));
  }
  u.grade.assign(u.dim, 0);
  for (std::size_t k = 0; k < u.dim; ++k) {
    std::string name = "u(";
    for (std::size_t j = 0; j < gens.labels[k].size(); ++j) name += (j ? "," : "") + std::to_string(gens.labels[k][j]);
    u.labels.push_back(name + ")");
  }
  return u;
}

std::map<std::vector<int>, int> freudenthal_multiplicities(const RootSystem& rs, const std::vector<int>& highest) {
  auto r = static_cast<std::size_t>(rs.rank);
  std::vector<RationalScalar> hl(highest.begin(), highest.end());
  QVector lambda = weight_from_labels(rs, hl);
  QVector rho(lambda.size());
  for (std::size_t a = 0; a < rs.num_positive; ++a) rho = add(rho, scale(rs.eps(rs.roots[a]), RationalScalar(1, 2)));
  std::vector<QVector> pos;
  for (std::size_t a = 0; a < rs.num_positive; ++a) pos.push_back(rs.eps(rs.roots[a]));
  QVector lr = add(lambda, rho);
  RationalScalar top = dot(lr, lr);

  std::map<QVector, RationalScalar> mult;
  mult[lambda] = 1;
  std::vector<QVector> level{lambda};
  for (int depth = 1; !level.empty(); ++depth) {
    std::vector<QVector> next;
    for (const auto& mu : level)
      for (std::size_t i = 0; i < r; ++i) {
        QVector c = sub(mu, rs.simple_roots[i]);
        if (mult.count(c) || std::find(next.begin(), next.end(), c) != next.end()) continue;
        next.push_back(c);
      }
    std::vector<QVector> kept;
    for (const auto& mu : next) {
      RationalScalar sum = 0;
      for (const auto& a : pos) {
        // mu + k a lies above lambda once k exceeds the depth of mu.
        QVector shifted = add(mu, a);
        for (int k = 1; k <= depth; ++k, shifted = add(shifted, a)) {
          auto it = mult.find(shifted);
          if (it != mult.end()) sum += it->second * dot(shifted, a);
        }
      }
      QVector mr = add(mu, rho);
      RationalScalar denom = top - dot(mr, mr);
      if (sgn(denom) == 0) continue;
      RationalScalar m = 2 * sum / denom;
      if (sgn(m) == 0) continue;
      if (m.get_den() != 1) throw Error("FREUDENTHAL_NONINTEGRAL", "multiplicity is not an integer");
      mult[mu] = m;
      kept.push_back(mu);
    }
    level = kept;
  }
  std::map<std::vector<int>, int> out;
  for (const auto& [mu, m] : mult) {
    std::vector<int> labels(r);
    for (std::size_t j = 0; j < r; ++j) {
      RationalScalar l = 2 * dot(mu, rs.simple_roots[j]) / rs.gram[j][j];
      labels[j] = static_cast<int>(l.get_num().get_si());
    }
    out[labels] = static_cast<int>(m.get_num().get_si());
  }
  return out;
}

std::map<std::vector<int>, int> module_weight_multiplicities(const GeneratorAction& gens) {
  std::map<std::vector<int>, int> out;
  for (const auto& l : gens.labels) ++out[l];
  return out;
}

void grade_module(LieModule& u, const CharacteristicElement& e) {
  std::vector<RationalScalar> raw;
  for (const auto& w : u.weight) raw.push_back(evaluate(e, w));
  RationalScalar lo = *std::min_element(raw.begin(), raw.end());
  RationalScalar shift = -1 - lo;
  for (std::size_t k = 0; k < u.dim; ++k) {
    RationalScalar g = raw[k] + shift;
    if (g.get_den() != 1) throw Error("NONINTEGRAL_GRADE", "module grades are not integral after shift");
    u.grade[k] = static_cast<int>(g.get_num().get_si());
  }
}

}  // namespace hv
