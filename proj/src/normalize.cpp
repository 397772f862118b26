#include "hv/normalize.hpp"

#include <random>

namespace hv {

namespace {

std::vector<QVector> columns(const QMatrix& m) {
  std::vector<QVector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

std::size_t rank_of(const std::vector<QVector>& a, std::size_t dim) { return a.empty() ? 0 : span_rank(a, dim); }

}  // namespace

CocycleNormalizer::Complement CocycleNormalizer::complement(const CochainComplex& c, int q, int k) {
  Complement out;
  auto s = c.space(q, k);
  for (const auto& [w, range] : s->blocks) {
    std::size_t dim = range.second - range.first;
    auto z = kernel_basis(c.differential_block(q, k, w));
    auto b = q > 0 ? columns(c.differential_block(q - 1, k, w)) : std::vector<QVector>{};
    auto wb = orthogonal_complement_within(z, b, dim);
    if (!wb.empty()) out[w] = std::move(wb);
  }
  return out;
}

bool CocycleNormalizer::in_complement(const CochainComplex& c, int q, int k, const Complement& w,
                                      const SparseVec& v) {
  if (v.empty()) return true;
  auto s = c.space(q, k);
  std::map<WeightKey, QVector> parts;
  for (const auto& [i, x] : v) {
    WeightKey key = c.weight_of(s->elems[i]);
    const auto& range = s->blocks.at(key);
    auto& part = parts[key];
    if (part.empty()) part.resize(range.second - range.first);
    part[i - range.first] += x;
  }
  for (const auto& [key, part] : parts) {
    if (is_zero(part)) continue;
    auto it = w.find(key);
    if (it == w.end() || !in_span(it->second, part)) return false;
  }
  return true;
}

CocycleNormalizer::CocycleNormalizer(std::shared_ptr<const CaseComplexes> cc, int k) : cc_(std::move(cc)), k_(k) {
  const CaseData& c = *cc_->data;
  const CochainComplex& mg = *cc_->m_g;
  const CochainComplex& lu = *cc_->lm_u;
  const CochainComplex& ll = *cc_->lm_l;
  auto s2 = mg.space(2, k);
  auto s1 = mg.space(1, k);
  for (const auto& [w, range] : s2->blocks) {
    Block b;
    b.begin = range.first;
    b.end = range.second;
    auto e1 = s1->blocks.find(w);
    if (e1 != s1->blocks.end()) {
      b.eta_begin = e1->second.first;
      b.eta_end = e1->second.second;
    }
    b.d1 = mg.differential_block(1, k, w);
    b.d2 = mg.differential_block(2, k, w);
    b.z = kernel_basis(b.d2);
    blocks_.emplace(w, std::move(b));
  }

  w2_u_ = complement(lu, 2, k);
  w1_u_ = complement(lu, 1, k - 1);
  w1_l_ = complement(ll, 1, k - 1);

  auto add_vector = [&](const SparseVec& v) {
    if (v.empty()) return;
    WeightKey key = mg.weight_of(s2->elems[v.front().first]);
    Block& b = blocks_.at(key);
    QVector local(b.end - b.begin);
    for (const auto& [i, x] : v) {
      if (i < b.begin || i >= b.end) throw Error("BIGRADING", "normal-form vector is not weight homogeneous");
      local[i - b.begin] += x;
    }
    b.n.push_back(std::move(local));
  };
  auto locate2 = [&](std::size_t ga, std::size_t gb, std::size_t gv) {
    std::array<std::uint8_t, 4> j{};
    int pa = mg.m_position(ga), pb = mg.m_position(gb);
    j[0] = static_cast<std::uint8_t>(std::min(pa, pb));
    j[1] = static_cast<std::uint8_t>(std::max(pa, pb));
    auto pos = mg.locate(2, k, j.data(), static_cast<std::uint32_t>(mg.gamma_position(gv)));
    if (!pos) throw Error("BIGRADING", "normal-form component outside Hom(wedge^2 m, g)_k");
    return *pos;
  };

  // (a) W^2(l_-, U)_k extended by zero.
  {
    auto s = lu.space(2, k);
    for (const auto& [w, vecs] : w2_u_) {
      std::size_t begin = s->blocks.at(w).first;
      for (const auto& v : vecs) {
        SparseVec sv;
        for (std::size_t t = 0; t < v.size(); ++t)
          if (sgn(v[t]) != 0) {
            const auto& e = s->elems[begin + t];
            sv.emplace_back(locate2(lu.m()[e.j[0]], lu.m()[e.j[1]], lu.gamma()[e.gamma]), v[t]);
          }
        std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        add_vector(sv);
      }
    }
  }
  // (b) zeta(Y, X) = w(X) for Y in U_{-1}; the basis pair is (X, Y), so the coefficient is -w(X).
  auto add_contractions = [&](const CochainComplex& cx, const Complement& comp) {
    auto s = cx.space(1, k - 1);
    for (std::size_t y : c.u_range(-1, -1))
      for (const auto& [w, vecs] : comp) {
        std::size_t begin = s->blocks.at(w).first;
        for (const auto& v : vecs) {
          SparseVec sv;
          for (std::size_t t = 0; t < v.size(); ++t)
            if (sgn(v[t]) != 0) {
              const auto& e = s->elems[begin + t];
              sv.emplace_back(locate2(cx.m()[e.j[0]], y, cx.gamma()[e.gamma]), -v[t]);
            }
          std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          add_vector(sv);
        }
      }
  };
  add_contractions(lu, w1_u_);
  add_contractions(ll, w1_l_);
  // (c) Hom(wedge^2 U_{-1}, U) in degree 1.
  if (k == 1)
    for (std::size_t i = 0; i < s2->dim(); ++i) {
      const auto& e = s2->elems[i];
      if (c.is_u(mg.m()[e.j[0]]) && c.is_u(mg.m()[e.j[1]]) && c.is_u(mg.gamma()[e.gamma]))
        add_vector({{i, RationalScalar(1)}});
    }

  for (auto& [w, b] : blocks_) {
    std::size_t dim = b.end - b.begin;
    auto bcols = columns(b.d1);
    std::size_t rb = rank_of(bcols, dim);
    std::size_t rn = rank_of(b.n, dim);
    std::vector<QVector> nb = b.n;
    nb.insert(nb.end(), bcols.begin(), bcols.end());
    std::size_t rnb = rank_of(nb, dim);
    std::vector<QVector> nbz = nb;
    nbz.insert(nbz.end(), b.z.begin(), b.z.end());
    std::size_t rnbz = rank_of(nbz, dim);
    dim_z_ += b.z.size();
    dim_b_ += rb;
    dim_n_ += rn;
    if (rnb != rn + rb) unique_ = false;
    if (rnbz != rnb) complete_ = false;
    // dim((N + B) cap Z) - dim B
    reached_ += rnb + b.z.size() - rnbz - rb;
  }
}

std::size_t CocycleNormalizer::cochain_dim() const { return cc_->m_g->space(2, k_)->dim(); }
std::size_t CocycleNormalizer::eta_dim() const { return cc_->m_g->space(1, k_)->dim(); }

QVector CocycleNormalizer::differential1(const QVector& eta) const {
  QVector out(cochain_dim());
  for (const auto& [w, b] : blocks_) {
    if (b.eta_end == b.eta_begin) continue;
    QVector local(eta.begin() + static_cast<std::ptrdiff_t>(b.eta_begin),
                  eta.begin() + static_cast<std::ptrdiff_t>(b.eta_end));
    QVector y = b.d1.apply(local);
    for (std::size_t t = 0; t < y.size(); ++t) out[b.begin + t] = y[t];
  }
  return out;
}

QVector CocycleNormalizer::differential2(const QVector& phi) const {
  auto s3 = cc_->m_g->space(3, k_);
  QVector out(s3->dim());
  for (const auto& [w, b] : blocks_) {
    auto it = s3->blocks.find(w);
    if (it == s3->blocks.end()) continue;
    QVector local(phi.begin() + static_cast<std::ptrdiff_t>(b.begin), phi.begin() + static_cast<std::ptrdiff_t>(b.end));
    QVector y = b.d2.apply(local);
    for (std::size_t t = 0; t < y.size(); ++t) out[it->second.first + t] = y[t];
  }
  return out;
}

CocycleNormalizer::Decomposition CocycleNormalizer::normalize(const QVector& phi) const {
  if (phi.size() != cochain_dim()) throw Error("BAD_DIMENSION", "cochain has the wrong length");
  if (!is_zero(differential2(phi))) throw Error("NOT_A_COCYCLE", "d phi != 0");
  Decomposition out;
  out.eta.assign(eta_dim(), RationalScalar(0));
  out.zeta.assign(cochain_dim(), RationalScalar(0));
  for (const auto& [w, b] : blocks_) {
    std::size_t dim = b.end - b.begin;
    QVector local(phi.begin() + static_cast<std::ptrdiff_t>(b.begin), phi.begin() + static_cast<std::ptrdiff_t>(b.end));
    if (is_zero(local)) continue;
    std::size_t ne = b.d1.cols();
    QMatrixBuilder mb(dim, ne + b.n.size());
    for (const auto& e : b.d1.entries()) mb.add(e.row, e.col, e.value);
    for (std::size_t i = 0; i < b.n.size(); ++i)
      for (std::size_t t = 0; t < dim; ++t)
        if (sgn(b.n[i][t]) != 0) mb.add(t, ne + i, b.n[i][t]);
    auto x = solve(mb.build(), local);
    if (!x) throw Error("NOT_NORMALIZABLE", "cocycle outside span(N) + coboundaries");
    for (std::size_t t = 0; t < ne; ++t) out.eta[b.eta_begin + t] = (*x)[t];
    for (std::size_t i = 0; i < b.n.size(); ++i)
      if (sgn((*x)[ne + i]) != 0)
        for (std::size_t t = 0; t < dim; ++t) out.zeta[b.begin + t] += (*x)[ne + i] * b.n[i][t];
  }
  return out;
}

bool CocycleNormalizer::satisfies_conditions(const QVector& zeta) const {
  const CaseData& c = *cc_->data;
  const CochainComplex& mg = *cc_->m_g;
  const CochainComplex& lu = *cc_->lm_u;
  const CochainComplex& ll = *cc_->lm_l;
  auto s2 = mg.space(2, k_);
  SparseVec on_l;                                     // lm_u space(2,k)
  std::map<std::size_t, SparseVec> by_y_u, by_y_l;    // lm_u / lm_l space(1,k-1) per Y
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    if (sgn(zeta[i]) == 0) continue;
    const auto& e = s2->elems[i];
    std::size_t a = mg.m()[e.j[0]], b = mg.m()[e.j[1]], v = mg.gamma()[e.gamma];
    if (c.is_l(a) && c.is_l(b)) {
      if (!c.is_u(v)) return false;
      std::array<std::uint8_t, 4> j{};
      j[0] = static_cast<std::uint8_t>(lu.m_position(a));
      j[1] = static_cast<std::uint8_t>(lu.m_position(b));
      auto pos = lu.locate(2, k_, j.data(), static_cast<std::uint32_t>(lu.gamma_position(v)));
      if (!pos) return false;
      on_l.emplace_back(*pos, zeta[i]);
    } else if (c.is_l(a) && c.is_u(b)) {
      const CochainComplex* cx = c.is_u(v) ? &lu : c.is_l(v) ? &ll : nullptr;
      if (!cx) return false;
      std::array<std::uint8_t, 4> j{};
      j[0] = static_cast<std::uint8_t>(cx->m_position(a));
      auto pos = cx->locate(1, k_ - 1, j.data(), static_cast<std::uint32_t>(cx->gamma_position(v)));
      if (!pos) return false;
      (c.is_u(v) ? by_y_u : by_y_l)[b].emplace_back(*pos, -zeta[i]);
    } else if (c.is_u(a) && c.is_u(b)) {
      if (k_ != 1 || !c.is_u(v)) return false;
    } else {
      return false;
    }
  }
  auto sorted = [](SparseVec v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  };
  if (!in_complement(lu, 2, k_, w2_u_, sorted(on_l))) return false;
  for (const auto& [y, v] : by_y_u)
    if (!in_complement(lu, 1, k_ - 1, w1_u_, sorted(v))) return false;
  for (const auto& [y, v] : by_y_l)
    if (!in_complement(ll, 1, k_ - 1, w1_l_, sorted(v))) return false;
  return true;
}

QVector CocycleNormalizer::random_cocycle(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  QVector phi(cochain_dim());
  for (const auto& [w, b] : blocks_)
    for (const auto& z : b.z) {
      int a = dist(rng);
      if (a == 0) continue;
      for (std::size_t t = 0; t < z.size(); ++t)
        if (sgn(z[t]) != 0) phi[b.begin + t] += a * z[t];
    }
  return phi;
}

QVector CocycleNormalizer::random_cochain1(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  QVector eta(eta_dim());
  for (auto& x : eta) x = dist(rng);
  return eta;
}

}  // namespace hv
