#include "hv/lemmas.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hv {

std::shared_ptr<const CaseComplexes> make_complexes(std::shared_ptr<const CaseData> data) {
  auto cc = std::make_shared<CaseComplexes>();
  const CaseData& c = *data;
  auto lm = c.l_range(-c.mu, -1);
  cc->m_g = std::make_unique<CochainComplex>(c.g, c.m_all(), c.g_all(), "m", "g");
  cc->lm_l = std::make_unique<CochainComplex>(c.g, lm, c.l_all(), "l_-", "l");
  cc->lm_z = std::make_unique<CochainComplex>(c.g, lm, c.z_only(), "l_-", "z");
  cc->lm_u = std::make_unique<CochainComplex>(c.g, lm, c.u_all(), "l_-", "U");
  cc->data = std::move(data);
  return cc;
}

std::shared_ptr<const CaseComplexes> get_complexes(const std::string& id) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const CaseComplexes>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  auto cc = make_complexes(get_case(id));
  cache[id] = cc;
  return cc;
}

int max_degree(const CochainComplex& c, int q) {
  const auto& g = c.algebra();
  int top = g.grade[c.gamma().front()];
  for (std::size_t t : c.gamma()) top = std::max(top, g.grade[t]);
  int low = 0;
  for (std::size_t a : c.m()) low = std::min(low, g.grade[a]);
  return top - q * low;
}

std::string PatternCheck::nonzero_summary() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, d] : dims)
    if (d != 0) {
      os << (first ? "" : ",") << k << ":" << d;
      first = false;
    }
  os << "}";
  return os.str();
}

PatternCheck check_pattern(const std::string& item, const CochainComplex& c, int q, int shift, int lo, int hi,
                           const std::set<int>& allowed, const std::map<int, SupportFn>& supports) {
  PatternCheck r;
  r.item = item;
  r.q = q;
  r.shift = shift;
  r.allowed = allowed;
  for (int idx = lo; idx <= hi; ++idx) {
    int deg = idx - shift;
    std::size_t h = c.cohomology(q, deg).dim_h;
    r.dims[idx] = h;
    if (h != 0 && !allowed.count(idx)) r.vanishing_ok = false;
    auto it = supports.find(idx);
    if (it != supports.end()) {
      const SupportFn& fn = it->second;
      std::size_t reached = h == 0 ? 0 : c.supported_class_dim(q, deg, [&](const CochainElem& e) { return fn(c, e); });
      bool ok = reached == h;
      r.supported[idx] = reached;
      r.support[idx] = ok;
      if (!ok) r.support_ok = false;
    }
  }
  return r;
}

SupportFn support_grades(int arg_grade, int value_grade) {
  return [=](const CochainComplex& c, const CochainElem& e) {
    const auto& g = c.algebra();
    for (std::uint8_t a = 0; a < e.q; ++a)
      if (g.grade[c.m()[e.j[a]]] != arg_grade) return false;
    return g.grade[c.gamma()[e.gamma]] == value_grade;
  };
}

SupportFn support_value_in_u(const CaseData& cd, int arg_grade, int value_grade) {
  std::size_t off = cd.u_offset;
  auto base = support_grades(arg_grade, value_grade);
  return [=](const CochainComplex& c, const CochainElem& e) { return c.gamma()[e.gamma] >= off && base(c, e); };
}

SupportFn support_any_value(int arg_grade) {
  return [=](const CochainComplex& c, const CochainElem& e) {
    for (std::uint8_t a = 0; a < e.q; ++a)
      if (c.algebra().grade[c.m()[e.j[a]]] != arg_grade) return false;
    return true;
  };
}

namespace {

bool is_b3(const CaseData& c) { return c.hc.family == Family::B && c.hc.rank == 3; }

}  // namespace

std::vector<PatternCheck> verify_lemma_6_2(const CaseComplexes& cc) {
  const CaseData& c = *cc.data;
  std::vector<PatternCheck> out;
  std::set<int> l_allowed;
  if (is_b3(c)) l_allowed.insert(1);
  out.push_back(check_pattern("i", *cc.lm_l, 1, 1, 1, max_degree(*cc.lm_l, 1) + 1, l_allowed,
                              {{1, support_grades(-1, -1)}}));
  out.push_back(check_pattern("ii", *cc.lm_z, 1, 1, 1, max_degree(*cc.lm_z, 1) + 1, {2},
                              {{2, support_grades(-1, 0)}}));
  out.push_back(check_pattern("iii", *cc.lm_u, 1, 1, 1, max_degree(*cc.lm_u, 1) + 1, {1},
                              {{1, support_grades(-1, -1)}}));
  return out;
}

std::vector<PatternCheck> verify_lemma_6_3(const CaseComplexes& cc) {
  const CaseData& c = *cc.data;
  std::vector<PatternCheck> out;
  out.push_back(check_pattern("i", *cc.lm_l, 2, 0, 1, max_degree(*cc.lm_l, 2), {}, {}));
  out.push_back(check_pattern("ii", *cc.lm_z, 2, 0, 1, max_degree(*cc.lm_z, 2), {2},
                              {{2, support_grades(-1, 0)}}));
  if (c.hc.family == Family::B)
    out.push_back(check_pattern("iii", *cc.lm_u, 2, 0, 1, max_degree(*cc.lm_u, 2), {1, 2},
                                {{1, support_grades(-1, -1)}, {2, support_grades(-1, 0)}}));
  else
    out.push_back(check_pattern("iii", *cc.lm_u, 2, 0, 1, max_degree(*cc.lm_u, 2), {1},
                                {{1, support_grades(-1, -1)}}));
  return out;
}

PatternCheck verify_h1_vanishing(const CaseComplexes& cc) {
  const CaseData& c = *cc.data;
  return check_pattern("h1", *cc.m_g, 1, 0, 1, c.mu + c.nu, {}, {});
}

std::vector<PatternCheck> verify_prop_6_4(const CaseComplexes& cc) {
  const CaseData& c = *cc.data;
  std::vector<PatternCheck> out;
  out.push_back(check_pattern("k3plus", *cc.m_g, 2, 0, 3, max_degree(*cc.m_g, 2), {}, {}));
  if (c.hc.family == Family::B)
    out.push_back(check_pattern("k2", *cc.m_g, 2, 0, 2, 2, {2}, {{2, support_value_in_u(c, -1, 0)}}));
  else
    out.push_back(check_pattern("k2", *cc.m_g, 2, 0, 2, 2, {}, {}));
  SupportFn k1 = is_b3(c) ? support_grades(-1, -1) : support_value_in_u(c, -1, -1);
  out.push_back(check_pattern("k1", *cc.m_g, 2, 0, 1, 1, {1}, {{1, k1}}));
  return out;
}

namespace {

// Rank of a cochain in C^p viewed as a map from wedge^p to the coefficients.
std::size_t cochain_rank(const CochainSpace& s, const QVector& v) {
  std::map<std::array<std::uint8_t, 4>, std::size_t> cols;
  std::uint32_t rows = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) {
      cols.emplace(s.elems[i].j, cols.size());
      rows = std::max(rows, s.elems[i].gamma + 1);
    }
  QMatrixBuilder b(rows, cols.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) b.add(s.elems[i].gamma, cols.at(s.elems[i].j), v[i]);
  return certified_rank(b.build());
}

}  // namespace

MinRankReport min_rank_of_image(const CaseComplexes& cc, int q, int k) {
  const CaseData& c = *cc.data;
  const CochainComplex& cx = *cc.lm_u;
  auto src = cx.space(q, k);
  auto dst = cx.space(q + 1, k);
  std::vector<QMatrix> raise;
  auto r = static_cast<std::size_t>(c.rs.rank);
  for (std::size_t a = 0; a < c.rs.num_positive; ++a)
    if (c.g.grade[r + a] == 0) raise.push_back(cx.degree_zero_action(q + 1, k, r + a));
  MinRankReport rep;
  bool have = false;
  for (const auto& [w, range] : src->blocks) {
    std::size_t sdim = range.second - range.first;
    auto dit = dst->blocks.find(w);
    if (dit == dst->blocks.end()) {
      rep.kernel_dim += sdim;
      continue;
    }
    QMatrix d = cx.differential_block(q, k, w);
    std::size_t rk = certified_rank(d);
    rep.kernel_dim += sdim - rk;
    rep.image_dim += rk;
    if (rk == 0) continue;
    std::vector<QVector> cols;
    for (std::size_t j = 0; j < d.cols(); ++j) cols.push_back(d.column(j));
    std::vector<QVector> basis;
    for (const auto& v : span_basis(cols, d.rows())) {
      QVector full(dst->dim());
      for (std::size_t t = 0; t < v.size(); ++t) full[dit->second.first + t] = v[t];
      basis.push_back(std::move(full));
    }
    // Combinations of the image basis killed by every raising operator.
    QMatrixBuilder mb(raise.size() * dst->dim(), basis.size());
    for (std::size_t x = 0; x < raise.size(); ++x)
      for (std::size_t i = 0; i < basis.size(); ++i) {
        QVector y = raise[x].apply(basis[i]);
        for (std::size_t t = 0; t < y.size(); ++t)
          if (sgn(y[t]) != 0) mb.add(x * dst->dim() + t, i, y[t]);
      }
    auto fixed = kernel_basis(mb.build());
    if (fixed.size() > 1) rep.exact = false;
    for (const auto& coeffs : fixed) {
      QVector phi(dst->dim());
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (sgn(coeffs[i]) != 0) phi = add(phi, scale(basis[i], coeffs[i]));
      std::size_t rank = cochain_rank(*dst, phi);
      rep.fixed_ranks.push_back(rank);
      ++rep.fixed_lines;
      if (!have || rank < rep.min_rank) rep.min_rank = rank;
      have = true;
    }
  }
  std::sort(rep.fixed_ranks.begin(), rep.fixed_ranks.end());
  return rep;
}

MinRankReport min_image_rank_u0(const CaseComplexes& cc) { return min_rank_of_image(cc, 0, 0); }
MinRankReport lemma_6_6_report(const CaseComplexes& cc) { return min_rank_of_image(cc, 1, 1); }

CohomologyReport h2_with_z_weight(const std::string& id, int z_weight, int k) {
  CaseData c = build_case(id, z_weight);
  CochainComplex cx(c.g, c.m_all(), c.g_all(), "m", "g");
  return cx.cohomology(2, k);
}

}  // namespace hv
