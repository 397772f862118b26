#include "hv/root_system.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hv {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

namespace {

QVector unit(std::size_t dim, std::size_t i, long v = 1) {
  QVector e(dim);
  e[i] = v;
  return e;
}

std::vector<QVector> simple_roots_for(Family family, int rank) {
  std::vector<QVector> s;
  auto n = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A:
      if (rank < 1) break;
      for (std::size_t i = 0; i < n; ++i) s.push_back(sub(unit(n + 1, i), unit(n + 1, i + 1)));
      return s;
    case Family::B:
      if (rank < 3) break;
      for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(sub(unit(n, i), unit(n, i + 1)));
      s.push_back(unit(n, n - 1));
      return s;
    case Family::C:
      if (rank < 2) break;
      for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(sub(unit(n, i), unit(n, i + 1)));
      s.push_back(unit(n, n - 1, 2));
      return s;
    case Family::F:
      if (rank != 4) break;
      s.push_back(sub(unit(4, 1), unit(4, 2)));
      s.push_back(sub(unit(4, 2), unit(4, 3)));
      s.push_back(unit(4, 3));
      s.push_back({RationalScalar(1, 2), RationalScalar(-1, 2), RationalScalar(-1, 2), RationalScalar(-1, 2)});
      return s;
    case Family::G:
      break;
  }
  throw Error("UNSUPPORTED_FAMILY", family_name(family) + std::to_string(rank));
}

}  // namespace

int RootSystem::height(std::size_t r) const {
  return std::accumulate(roots[r].begin(), roots[r].end(), 0);
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = lookup_.find(coeffs);
  return it == lookup_.end() ? -1 : it->second;
}

int RootSystem::sum_index(std::size_t a, std::size_t b) const {
  std::vector<int> s(roots[a]);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += roots[b][i];
  return index_of(s);
}

QVector RootSystem::eps(const std::vector<int>& coeffs) const {
  QVector v(simple_roots.front().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) v = add(v, scale(simple_roots[i], coeffs[i]));
  return v;
}

RationalScalar RootSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  RationalScalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i] != 0 && b[j] != 0) s += gram[i][j] * a[i] * b[j];
  return s;
}

int RootSystem::pairing(const std::vector<int>& a, int j) const {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * cartan_matrix[k][static_cast<std::size_t>(j)];
  return s;
}

std::size_t RootSystem::simple_index(int i) const {
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return static_cast<std::size_t>(index_of(c));
}

RootSystem build_root_system(Family family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.simple_roots = simple_roots_for(family, rank);
  auto n = static_cast<std::size_t>(rank);
  rs.gram.assign(n, std::vector<RationalScalar>(n));
  rs.cartan_matrix.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.gram[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RationalScalar c = 2 * rs.gram[i][j] / rs.gram[j][j];
      rs.cartan_matrix[i][j] = static_cast<int>(c.get_num().get_si());
    }

  // Positive roots by height: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p is the length of the alpha_i-string below beta.
  std::vector<std::vector<int>> positive;
  std::map<std::vector<int>, int> known;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    known[c] = 1;
    positive.push_back(c);
  }
  std::size_t frontier_begin = 0;
  while (frontier_begin < positive.size()) {
    std::size_t frontier_end = positive.size();
    for (std::size_t r = frontier_begin; r < frontier_end; ++r) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> beta = positive[r];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int q = p - rs.pairing(beta, static_cast<int>(i));
        if (q <= 0) continue;
        beta[i] += 1;
        if (!known.count(beta)) {
          known[beta] = 1;
          positive.push_back(beta);
        }
      }
    }
    frontier_begin = frontier_end;
  }
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  rs.num_positive = positive.size();
  rs.roots = positive;
  for (const auto& p : positive) {
    std::vector<int> neg(p);
    for (auto& x : neg) x = -x;
    rs.roots.push_back(neg);
  }
  for (std::size_t i = 0; i < rs.roots.size(); ++i) rs.lookup_[rs.roots[i]] = static_cast<int>(i);
  return rs;
}

// ---------------------------------------------------------------- Chevalley constants

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs)
    : rs_(rs), n_(rs.size()), table_(n_ * n_, 0), defined_(n_ * n_, 0), done_(n_ * n_, 0),
      extraspecial_(rs.num_positive, {n_, n_}) {
  for (std::size_t xi = 0; xi < rs_.num_positive; ++xi) {
    if (rs_.height(xi) < 2) continue;
    for (std::size_t a = 0; a < rs_.num_positive; ++a) {
      int b = -1;
      std::vector<int> diff(rs_.roots[xi]);
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= rs_.roots[a][k];
      b = rs_.index_of(diff);
      if (b >= 0 && rs_.is_positive(static_cast<std::size_t>(b))) {
        extraspecial_[xi] = {a, static_cast<std::size_t>(b)};
        break;
      }
    }
  }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (rs_.sum_index(a, b) >= 0) {
        table_[a * n_ + b] = compute(a, b);
        defined_[a * n_ + b] = 1;
      }
}

std::pair<std::size_t, std::size_t> ChevalleyConstants::extraspecial(std::size_t xi) const {
  return extraspecial_.at(xi);
}

int ChevalleyConstants::string_p(std::size_t a, std::size_t b) const {
  int p = 0;
  std::vector<int> down(rs_.roots[b]);
  while (true) {
    for (std::size_t k = 0; k < down.size(); ++k) down[k] -= rs_.roots[a][k];
    if (rs_.index_of(down) < 0) break;
    ++p;
  }
  return p;
}

int ChevalleyConstants::compute(std::size_t a, std::size_t b) {
  std::size_t key = a * n_ + b;
  if (done_[key]) return table_[key];
  int s = rs_.sum_index(a, b);
  if (s < 0) return 0;
  auto norm = [&](std::size_t r) { return rs_.inner(rs_.roots[r], rs_.roots[r]); };
  RationalScalar value;
  bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
  if (pa && pb) {
    if (a > b) {
      value = -compute(b, a);
    } else {
      auto xi = static_cast<std::size_t>(s);
      auto [a0, b0] = extraspecial_[xi];
      if (a == a0) {
        value = string_p(a0, b0) + 1;
      } else {
        // Four-root relation with (a, b, -a0, -b0).
        RationalScalar t = 0;
        std::size_t na0 = rs_.negative_of(a0), nb0 = rs_.negative_of(b0);
        int bm = rs_.sum_index(b, na0);
        if (bm >= 0) t += RationalScalar(compute(b, na0) * compute(a, nb0)) / norm(static_cast<std::size_t>(bm));
        int am = rs_.sum_index(a, na0);
        if (am >= 0) t += RationalScalar(compute(na0, a) * compute(b, nb0)) / norm(static_cast<std::size_t>(am));
        value = norm(xi) * t / compute(a0, b0);
      }
    }
  } else if (!pa && !pb) {
    value = -compute(rs_.negative_of(a), rs_.negative_of(b));
  } else {
    // a + b + c = 0: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
    std::size_t c = rs_.negative_of(static_cast<std::size_t>(s));
    bool pc = rs_.is_positive(c);
    if (pb == pc)
      value = norm(c) / norm(a) * compute(b, c);
    else
      value = norm(c) / norm(b) * compute(c, a);
  }
  if (value.get_den() != 1) throw Error("CHEVALLEY_NONINTEGRAL", "structure constant is not an integer");
  table_[key] = static_cast<int>(value.get_num().get_si());
  done_[key] = 1;
  return table_[key];
}

ChevalleyConstants chevalley_constants(const RootSystem& rs) { return ChevalleyConstants(rs); }

// ---------------------------------------------------------------- gradings

CharacteristicElement characteristic_element(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) throw Error("BAD_INDEX", "simple root index out of range");
  auto n = static_cast<std::size_t>(rs.rank);
  QMatrixBuilder b(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) b.add(j, k, rs.gram[j][k]);
  QVector rhs(n);
  rhs[static_cast<std::size_t>(i - 1)] = 1;
  auto c = solve(b.build(), rhs);
  if (!c) throw Error("SINGULAR_GRAM", "simple roots are dependent");
  CharacteristicElement e;
  e.index = i;
  e.coords = QVector(rs.simple_roots.front().size());
  for (std::size_t k = 0; k < n; ++k) e.coords = add(e.coords, scale(rs.simple_roots[k], (*c)[k]));
  return e;
}

RationalScalar evaluate(const CharacteristicElement& e, const QVector& eps_weight) {
  return dot(e.coords, eps_weight);
}

std::map<int, std::vector<std::size_t>> grade_roots(const RootSystem& rs, const CharacteristicElement& e) {
  std::map<int, std::vector<std::size_t>> out;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    RationalScalar d = evaluate(e, rs.eps(rs.roots[r]));
    if (d.get_den() != 1) throw Error("NONINTEGRAL_GRADE", "root degree is not an integer");
    out[static_cast<int>(d.get_num().get_si())].push_back(r);
  }
  return out;
}

QVector weight_from_labels(const RootSystem& rs, const std::vector<RationalScalar>& labels) {
  auto n = static_cast<std::size_t>(rs.rank);
  QMatrixBuilder b(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) b.add(j, k, 2 * rs.gram[k][j] / rs.gram[j][j]);
  auto c = solve(b.build(), QVector(labels.begin(), labels.end()));
  if (!c) throw Error("SINGULAR_GRAM", "cannot express weight");
  QVector w(rs.simple_roots.front().size());
  for (std::size_t k = 0; k < n; ++k) w = add(w, scale(rs.simple_roots[k], (*c)[k]));
  return w;
}

}  // namespace hv
