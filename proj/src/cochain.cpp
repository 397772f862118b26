#include "hv/cochain.hpp"

#include <algorithm>
#include <unordered_map>

namespace hv {

CochainComplex::CochainComplex(const GradedLieAlgebra& g, std::vector<std::size_t> m, std::vector<std::size_t> gamma,
                               std::string algebra_name, std::string coeff_name)
    : g_(&g), m_(std::move(m)), gamma_(std::move(gamma)), algebra_name_(std::move(algebra_name)),
      coeff_name_(std::move(coeff_name)), m_pos_(g.dim(), -1), gamma_pos_(g.dim(), -1) {
  if (m_.size() > 250) throw Error("TOO_LARGE", "m has more than 250 basis vectors");
  std::sort(m_.begin(), m_.end());
  std::sort(gamma_.begin(), gamma_.end());
  for (std::size_t a = 0; a < m_.size(); ++a) m_pos_[m_[a]] = static_cast<int>(a);
  for (std::size_t a = 0; a < gamma_.size(); ++a) gamma_pos_[gamma_[a]] = static_cast<int>(a);
  pairs_into_.resize(m_.size());
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = i + 1; j < m_.size(); ++j)
      for (const auto& [c, v] : g.bracket(m_[i], m_[j])) {
        if (m_pos_[c] < 0) throw Error("NOT_SUBALGEBRA", "bracket leaves m");
        pairs_into_[static_cast<std::size_t>(m_pos_[c])].push_back(
            {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), v});
      }
  for (std::size_t a : m_)
    for (std::size_t t : gamma_)
      for (const auto& [c, v] : g.bracket(a, t))
        if (gamma_pos_[c] < 0) throw Error("NOT_A_MODULE", "coefficients are not stable under m");
}

std::uint64_t CochainComplex::pack(const std::uint8_t* j, std::uint8_t q, std::uint32_t gamma) {
  std::uint64_t key = gamma;
  for (std::uint8_t a = 0; a < q; ++a) key |= static_cast<std::uint64_t>(j[a] + 1u) << (32 + 8 * a);
  return key;
}

WeightKey CochainComplex::weight_of(const CochainElem& e) const {
  WeightKey w = g_->weight[gamma_[e.gamma]];
  for (std::uint8_t a = 0; a < e.q; ++a) {
    const WeightKey& x = g_->weight[m_[e.j[a]]];
    for (std::size_t c = 0; c < w.size(); ++c) w[c] -= x[c];
  }
  return w;
}

std::shared_ptr<const CochainSpace> CochainComplex::space(int q, int k) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = spaces_.find({q, k});
    if (it != spaces_.end()) return it->second;
  }
  auto s = build_space(q, k);
  std::lock_guard<std::mutex> lock(mutex_);
  spaces_.emplace(std::make_pair(q, k), s);
  return spaces_.at({q, k});
}

std::shared_ptr<const CochainSpace> CochainComplex::build_space(int q, int k) const {
  if (q < 0 || q > 4) throw Error("BAD_DEGREE", "cochain degree out of range");
  std::size_t n = m_.size();
  std::map<WeightKey, std::vector<CochainElem>> by_weight;
  std::map<int, std::vector<std::uint32_t>> gamma_by_grade;
  for (std::size_t t = 0; t < gamma_.size(); ++t)
    gamma_by_grade[g_->grade[gamma_[t]]].push_back(static_cast<std::uint32_t>(t));
  std::array<std::uint8_t, 4> idx{};
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t depth, std::size_t start, int gsum) {
    if (depth == static_cast<std::size_t>(q)) {
      auto it = gamma_by_grade.find(gsum + k);
      if (it == gamma_by_grade.end()) return;
      for (std::uint32_t t : it->second) {
        CochainElem e;
        e.j = idx;
        e.q = static_cast<std::uint8_t>(q);
        e.gamma = t;
        by_weight[weight_of(e)].push_back(e);
      }
      return;
    }
    for (std::size_t a = start; a < n; ++a) {
      idx[depth] = static_cast<std::uint8_t>(a);
      rec(depth + 1, a + 1, gsum + g_->grade[m_[a]]);
    }
  };
  rec(0, 0, 0);
  auto s = std::make_shared<CochainSpace>();
  s->q = q;
  s->k = k;
  for (auto& [w, list] : by_weight) {
    std::size_t b = s->elems.size();
    s->elems.insert(s->elems.end(), list.begin(), list.end());
    s->blocks[w] = {b, s->elems.size()};
  }
  s->index.reserve(s->elems.size());
  for (std::size_t i = 0; i < s->elems.size(); ++i) s->index[pack(s->elems[i].j.data(), s->elems[i].q, s->elems[i].gamma)] = i;
  return s;
}

QMatrix CochainComplex::differential_block(int q, int k, const WeightKey& w) const {
  auto src = space(q, k);
  auto dst = space(q + 1, k);
  auto sit = src->blocks.find(w);
  auto dit = dst->blocks.find(w);
  std::size_t c0 = sit == src->blocks.end() ? 0 : sit->second.first;
  std::size_t c1 = sit == src->blocks.end() ? 0 : sit->second.second;
  std::size_t r0 = dit == dst->blocks.end() ? 0 : dit->second.first;
  std::size_t r1 = dit == dst->blocks.end() ? 0 : dit->second.second;
  QMatrixBuilder b(r1 - r0, c1 - c0);
  if (c1 == c0 || r1 == r0) return b.build();
  std::unordered_map<std::uint64_t, std::size_t> row_of;
  row_of.reserve(r1 - r0);
  for (std::size_t r = r0; r < r1; ++r) {
    const auto& e = dst->elems[r];
    row_of[pack(e.j.data(), e.q, e.gamma)] = r - r0;
  }
  auto row = [&](const std::uint8_t* j, std::uint32_t gamma) {
    auto it = row_of.find(pack(j, static_cast<std::uint8_t>(q + 1), gamma));
    if (it == row_of.end()) throw Error("BIGRADING", "differential leaves its block");
    return it->second;
  };
  std::size_t n = m_.size();
  std::array<std::uint8_t, 4> jp{};
  for (std::size_t col = c0; col < c1; ++col) {
    const auto& e = src->elems[col];
    std::size_t cc = col - c0;
    // (-1)^p X_a . phi(rest) with a inserted at position p.
    for (std::size_t a = 0; a < n; ++a) {
      if (std::find(e.j.begin(), e.j.begin() + e.q, a) != e.j.begin() + e.q) continue;
      const auto& br = g_->bracket(m_[a], gamma_[e.gamma]);
      if (br.empty()) continue;
      std::size_t p = 0;
      while (p < e.q && e.j[p] < a) ++p;
      for (std::size_t t = 0, s = 0; t <= e.q; ++t) jp[t] = (t == p) ? static_cast<std::uint8_t>(a) : e.j[s++];
      for (const auto& [c, v] : br) {
        std::size_t r = row(jp.data(), static_cast<std::uint32_t>(gamma_pos_[c]));
        b.add(r, cc, (p % 2 == 0) ? RationalScalar(v) : RationalScalar(-v));
      }
    }
    // (-1)^{i+j} phi([X_i, X_j], rest) with phi(X_c, rest) = (-1)^{ci} gamma.
    for (std::size_t ci = 0; ci < e.q; ++ci) {
      std::array<std::uint8_t, 4> rest{};
      for (std::size_t t = 0, s = 0; t < e.q; ++t)
        if (t != ci) rest[s++] = e.j[t];
      std::size_t rq = e.q - 1u;
      for (const auto& pr : pairs_into_[e.j[ci]]) {
        bool clash = false;
        for (std::size_t t = 0; t < rq; ++t)
          if (rest[t] == pr.i || rest[t] == pr.j) clash = true;
        if (clash) continue;
        std::size_t pi = 0, pj = 0;
        for (std::size_t t = 0; t < rq; ++t) {
          if (rest[t] < pr.i) ++pi;
          if (rest[t] < pr.j) ++pj;
        }
        ++pj;  // i < j precedes j
        std::size_t t = 0, s = 0;
        for (; t <= rq + 1; ++t) {
          if (t == pi) jp[t] = pr.i;
          else if (t == pj) jp[t] = pr.j;
          else jp[t] = rest[s++];
        }
        std::size_t r = row(jp.data(), e.gamma);
        bool neg = ((ci + pi + pj) % 2) != 0;
        b.add(r, cc, neg ? RationalScalar(-pr.coef) : pr.coef);
      }
    }
  }
  return b.build();
}

std::optional<std::size_t> CochainComplex::locate(int q, int k, const std::uint8_t* j, std::uint32_t gamma) const {
  auto s = space(q, k);
  auto it = s->index.find(pack(j, static_cast<std::uint8_t>(q), gamma));
  if (it == s->index.end()) return std::nullopt;
  return it->second;
}

QMatrix CochainComplex::degree_zero_action(int q, int k, std::size_t x) const {
  if (g_->grade[x] != 0) throw Error("BAD_DEGREE", "action by an element of nonzero grade");
  auto s = space(q, k);
  QMatrixBuilder b(s->dim(), s->dim());
  auto target = [&](const std::uint8_t* j, std::uint32_t gamma) {
    auto pos = locate(q, k, j, gamma);
    if (!pos) throw Error("BIGRADING", "degree-zero action leaves its space");
    return *pos;
  };
  for (std::size_t col = 0; col < s->dim(); ++col) {
    const auto& e = s->elems[col];
    for (const auto& [c, v] : g_->bracket(x, gamma_[e.gamma])) {
      if (gamma_pos_[c] < 0) throw Error("NOT_A_MODULE", "coefficients not stable under x");
      b.add(target(e.j.data(), static_cast<std::uint32_t>(gamma_pos_[c])), col, v);
    }
    // (x.phi)(X_J) picks up -phi(..., [x, X_i], ...); dual action on the slot.
    for (std::size_t t = 0; t < e.q; ++t)
      for (std::size_t a = 0; a < m_.size(); ++a) {
        if (a != e.j[t] && std::find(e.j.begin(), e.j.begin() + e.q, a) != e.j.begin() + e.q) continue;
        for (const auto& [c, v] : g_->bracket(x, m_[a])) {
          if (c != m_[e.j[t]]) continue;
          // phi = X_J^* (x) gamma evaluated on the basis with slot t replaced by X_a.
          std::array<std::uint8_t, 4> jp = e.j;
          jp[t] = static_cast<std::uint8_t>(a);
          int sign = 1;
          std::size_t p = t;
          while (p > 0 && jp[p - 1] > jp[p]) { std::swap(jp[p - 1], jp[p]); --p; sign = -sign; }
          while (p + 1 < e.q && jp[p + 1] < jp[p]) { std::swap(jp[p + 1], jp[p]); ++p; sign = -sign; }
          b.add(target(jp.data(), e.gamma), col, sign > 0 ? RationalScalar(-v) : RationalScalar(v));
        }
      }
  }
  return b.build();
}

QMatrix CochainComplex::differential(int q, int k) const {
  auto src = space(q, k);
  auto dst = space(q + 1, k);
  QMatrixBuilder b(dst->dim(), src->dim());
  for (const auto& [w, range] : src->blocks) {
    auto dit = dst->blocks.find(w);
    if (dit == dst->blocks.end()) continue;
    QMatrix blk = differential_block(q, k, w);
    for (const auto& e : blk.entries()) b.add(dit->second.first + e.row, range.first + e.col, e.value);
  }
  return b.build();
}

std::size_t CochainComplex::block_dim_z(int q, int k, const WeightKey& w) const {
  auto s = space(q, k);
  auto it = s->blocks.find(w);
  if (it == s->blocks.end()) return 0;
  return (it->second.second - it->second.first) - certified_rank(differential_block(q, k, w));
}

std::size_t CochainComplex::block_dim_b(int q, int k, const WeightKey& w) const {
  if (q == 0) return 0;
  return certified_rank(differential_block(q - 1, k, w));
}

CohomologyReport CochainComplex::cohomology(int q, int k) const {
  CohomologyReport r;
  r.algebra = algebra_name_;
  r.coefficients = coeff_name_;
  r.q = q;
  r.k = k;
  auto s = space(q, k);
  for (const auto& [w, range] : s->blocks) {
    r.dim_z += block_dim_z(q, k, w);
    r.dim_b += block_dim_b(q, k, w);
  }
  r.dim_h = r.dim_z - r.dim_b;
  return r;
}

bool CochainComplex::classes_supported_in(int q, int k, const CochainPredicate& pred) const {
  return supported_class_dim(q, k, pred) == cohomology(q, k).dim_h;
}

std::size_t CochainComplex::supported_class_dim(int q, int k, const CochainPredicate& pred) const {
  auto s = space(q, k);
  std::size_t total = 0;
  for (const auto& [w, range] : s->blocks) {
    std::size_t bdim = range.second - range.first;
    QMatrix d = differential_block(q, k, w);
    std::vector<std::size_t> cols;
    for (std::size_t c = range.first; c < range.second; ++c)
      if (pred(s->elems[c])) cols.push_back(c - range.first);
    // Cocycles supported on the selected columns.
    QMatrixBuilder sub(d.rows(), cols.size());
    std::vector<std::size_t> where(bdim, bdim);
    for (std::size_t t = 0; t < cols.size(); ++t) where[cols[t]] = t;
    for (const auto& e : d.entries())
      if (where[e.col] != bdim) sub.add(e.row, where[e.col], e.value);
    std::vector<QVector> gens;
    for (const auto& v : kernel_basis(sub.build())) {
      QVector full(bdim);
      for (std::size_t t = 0; t < cols.size(); ++t) full[cols[t]] = v[t];
      gens.push_back(std::move(full));
    }
    std::size_t dim_b = 0;
    if (q > 0) {
      QMatrix prev = differential_block(q - 1, k, w);
      dim_b = certified_rank(prev);
      for (std::size_t c = 0; c < prev.cols(); ++c) gens.push_back(prev.column(c));
    }
    std::size_t reach = gens.empty() ? 0 : span_rank(gens, bdim);
    total += reach - dim_b;
  }
  return total;
}

}  // namespace hv
