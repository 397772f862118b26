#include "hv/vmrt.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "hv/free_lie.hpp"

namespace hv {

namespace {

QVector flatten(const QMatrix& m) {
  QVector v(m.rows() * m.cols());
  for (const auto& e : m.entries()) v[e.row * m.cols() + e.col] = e.value;
  return v;
}

bool all_in_span(const std::vector<QVector>& basis, const std::vector<QVector>& vs, std::size_t dim) {
  std::vector<QVector> ext = basis;
  ext.insert(ext.end(), vs.begin(), vs.end());
  return span_rank(ext, dim) == span_rank(basis, dim);
}

std::vector<QVector> extend_basis(const std::vector<QVector>& basis, const std::vector<QVector>& more,
                                  std::size_t dim) {
  std::vector<QVector> ext = basis;
  ext.insert(ext.end(), more.begin(), more.end());
  return span_basis(ext, dim);
}

}  // namespace

ConeModel::ConeModel(int dim_v, int dim_w) : dv_(dim_v), dw_(dim_w) {
  if (dv_ < 1 || dw_ < 1) throw Error("INVALID_ARGUMENT", "cone model needs dim V, dim W >= 1");
  std::size_t np = num_params();
  auto var = [&](std::size_t i) { return Polynomial::variable(np, i); };
  map_.assign(dim_u(), Polynomial(np));
  for (int i = 0; i < dv_; ++i) map_[i] = var(0) * var(1 + i);
  for (int i = 0; i < dv_; ++i)
    for (int j = i; j < dv_; ++j) {
      Polynomial sq = var(1 + i) * var(1 + j);
      if (i != j) sq = sq.scaled(2);
      for (int k = 0; k < dw_; ++k) map_[coordinate(i, j, k)] = sq * var(1 + dv_ + k);
    }
}

std::size_t ConeModel::sym_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // Pairs (a, b) with a < i come first: each contributes dv - a entries.
  std::size_t idx = 0;
  for (int a = 0; a < i; ++a) idx += dv_ - a;
  return idx + (j - i);
}

QVector ConeModel::sym_product(const QVector& a, const QVector& b) const {
  QVector out(sym_dim());
  for (int i = 0; i < dv_; ++i)
    for (int j = i; j < dv_; ++j)
      out[sym_index(i, j)] = i == j ? RationalScalar(a[i] * b[i]) : RationalScalar(a[i] * b[j] + a[j] * b[i]);
  return out;
}

QVector ConeModel::params(const ConePoint& b) const {
  QVector x;
  x.push_back(b.c);
  x.insert(x.end(), b.v.begin(), b.v.end());
  x.insert(x.end(), b.w.begin(), b.w.end());
  return x;
}

void ConeModel::check_point(const ConePoint& b) const {
  if (b.v.size() != static_cast<std::size_t>(dv_) || b.w.size() != static_cast<std::size_t>(dw_))
    throw Error("INVALID_ARGUMENT", "cone point has wrong dimensions");
  if (sgn(b.c) == 0 || is_zero(b.v) || is_zero(b.w)) throw Error("DEGENERATE_POINT", "need c, v, w nonzero");
}

QVector ConeModel::point(const ConePoint& b) const { return evaluate(map_, params(b)); }

std::vector<QVector> ConeModel::tangent_space(const ConePoint& b) const {
  check_point(b);
  QVector x = params(b);
  std::vector<QVector> d;
  for (std::size_t a = 0; a < num_params(); ++a) d.push_back(evaluate(derivative(map_, a), x));
  return span_basis(d, dim_u());
}

SecondFundamentalForm ConeModel::second_fundamental_form(const ConePoint& b) const {
  auto t = tangent_space(b);
  QVector x = params(b);
  SecondFundamentalForm f;
  std::size_t np = num_params();
  f.lifts.assign(np, std::vector<QVector>(np));
  std::vector<QVector> all;
  for (std::size_t a = 0; a < np; ++a) {
    PolyVector da = derivative(map_, a);
    for (std::size_t c = 0; c < np; ++c) {
      f.lifts[a][c] = evaluate(derivative(da, c), x);
      all.push_back(f.lifts[a][c]);
    }
  }
  f.t2_basis = extend_basis(t, all, dim_u());
  f.r = f.t2_basis.size() - t.size();
  for (std::size_t a = 1 + dv_; a < np; ++a)
    for (std::size_t c = 1 + dv_; c < np; ++c)
      if (!in_span(t, f.lifts[a][c])) f.w_directions_vanish = false;
  return f;
}

ThirdFundamentalForm ConeModel::third_fundamental_form(const ConePoint& b) const {
  auto t2 = second_fundamental_form(b).t2_basis;
  QVector x = params(b);
  std::size_t np = num_params();
  ThirdFundamentalForm f;
  f.s = dim_u() - t2.size();
  std::vector<QVector> all;
  auto is_w = [&](std::size_t a) { return a >= static_cast<std::size_t>(1 + dv_); };
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t c = a; c < np; ++c)
      for (std::size_t e = c; e < np; ++e) {
        QVector val = evaluate(derivative(derivative(derivative(map_, a), c), e), x);
        if (!is_w(a) && !is_w(c) && !is_w(e) && !in_span(t2, val)) f.vanishes_off_w_slot = false;
        all.push_back(std::move(val));
      }
  f.surjective = extend_basis(t2, all, dim_u()).size() == dim_u();
  return f;
}

std::vector<QMatrix> ConeModel::explicit_generators() const {
  std::size_t n = dim_u();
  auto unit = [](int size, int i) {
    QVector v(size);
    v[i] = 1;
    return v;
  };
  // Builds the matrix of an operator given by its action on V and on W, extended
  // to Sym^2 V (x) W as a derivation, plus an optional map Sym^2 V (x) W -> V.
  auto build = [&](const std::vector<QVector>& on_v, const std::vector<QVector>& on_w,
                   const std::vector<std::vector<QVector>>& contraction) {
    QMatrixBuilder mb(n, n);
    for (int i = 0; i < dv_; ++i)
      if (!on_v.empty())
        for (int a = 0; a < dv_; ++a) mb.add(a, i, on_v[i][a]);
    for (int i = 0; i < dv_; ++i)
      for (int j = i; j < dv_; ++j)
        for (int k = 0; k < dw_; ++k) {
          std::size_t col = coordinate(i, j, k);
          if (!on_v.empty()) {
            QVector s = add(sym_product(on_v[i], unit(dv_, j)), sym_product(unit(dv_, i), on_v[j]));
            for (int a = 0; a < dv_; ++a)
              for (int c = a; c < dv_; ++c) mb.add(coordinate(a, c, k), col, s[sym_index(a, c)]);
          }
          if (!on_w.empty())
            for (int l = 0; l < dw_; ++l) mb.add(coordinate(i, j, l), col, on_w[k][l]);
          if (!contraction.empty())
            for (int a = 0; a < dv_; ++a) mb.add(a, col, contraction[sym_index(i, j)][k][a]);
        }
    return mb.build();
  };
  std::vector<QMatrix> out;
  for (int a = 0; a < dv_; ++a)
    for (int b = 0; b < dv_; ++b) {
      std::vector<QVector> on_v(dv_, QVector(dv_));
      on_v[b][a] = 1;
      out.push_back(build(on_v, {}, {}));
    }
  for (int k = 0; k < dw_; ++k)
    for (int l = 0; l < dw_; ++l) {
      std::vector<QVector> on_w(dw_, QVector(dw_));
      on_w[l][k] = 1;
      out.push_back(build({}, on_w, {}));
    }
  // xi_a (x) psi_k : e_i e_j (x) f_l -> delta_{kl} (xi_a(e_i) e_j + xi_a(e_j) e_i).
  for (int a = 0; a < dv_; ++a)
    for (int k = 0; k < dw_; ++k) {
      std::vector<std::vector<QVector>> con(sym_dim(), std::vector<QVector>(dw_, QVector(dv_)));
      for (int i = 0; i < dv_; ++i)
        for (int j = i; j < dv_; ++j) {
          QVector& img = con[sym_index(i, j)][k];
          if (i == a) img[j] += 1;
          if (j == a) img[i] += 1;
        }
      out.push_back(build({}, {}, con));
    }
  return out;
}

ModelAutomorphisms ConeModel::automorphism_algebra() const {
  // With c = 1, A beta lies in T_beta iff X = (A beta)_S - 2 v o (A beta)_V (x) w
  // lies in v^2 (x) W, i.e. X_k and v^2 are parallel in Sym^2 V for every k.
  std::size_t n = dim_u();
  std::size_t nv = dv_ + dw_;
  auto var = [&](std::size_t i) { return Polynomial::variable(nv, i); };
  PolyVector beta(n, Polynomial(nv));
  std::vector<Polynomial> sq(sym_dim(), Polynomial(nv));
  for (int i = 0; i < dv_; ++i) beta[i] = var(i);
  for (int i = 0; i < dv_; ++i)
    for (int j = i; j < dv_; ++j) {
      Polynomial s = var(i) * var(j);
      if (i != j) s = s.scaled(2);
      sq[sym_index(i, j)] = s;
      for (int k = 0; k < dw_; ++k) beta[coordinate(i, j, k)] = s * var(dv_ + k);
    }
  std::map<std::tuple<int, int, int, Polynomial::Monomial>, std::size_t> rows;
  std::vector<QEntry> entries;
  auto emit = [&](int k, int a, int b, const Polynomial& e, std::size_t col) {
    for (const auto& [mono, c] : e.terms()) {
      auto key = std::make_tuple(k, a, b, mono);
      auto it = rows.emplace(key, rows.size()).first;
      entries.push_back({it->second, col, c});
    }
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t col = r * n + s;
      // X[k][a] for the elementary matrix E_{rs}.
      std::map<std::pair<int, int>, Polynomial> x;
      if (r < static_cast<std::size_t>(dv_)) {
        for (int i = 0; i < dv_; ++i)
          for (int j = i; j < dv_; ++j) {
            Polynomial vo(nv);  // (v o e_r)[ij]
            if (i == j) {
              if (static_cast<std::size_t>(i) == r) vo = var(i);
            } else {
              if (static_cast<std::size_t>(j) == r) vo = vo + var(i);
              if (static_cast<std::size_t>(i) == r) vo = vo + var(j);
            }
            if (vo.is_zero()) continue;
            for (int k = 0; k < dw_; ++k)
              x[{k, static_cast<int>(sym_index(i, j))}] = (beta[s] * vo * var(dv_ + k)).scaled(-2);
          }
      } else {
        std::size_t off = r - dv_;
        x[{static_cast<int>(off % dw_), static_cast<int>(off / dw_)}] = beta[s];
      }
      for (const auto& [ka, poly] : x) {
        auto [k, a] = ka;
        for (int b = 0; b < sym_dim(); ++b) {
          if (b == a) continue;
          Polynomial e = poly * sq[b];
          if (a < b) emit(k, a, b, e, col);
          else emit(k, b, a, e.scaled(-1), col);
        }
      }
    }
  QMatrixBuilder mb(rows.size(), n * n);
  for (const auto& e : entries) mb.add(e.row, e.col, e.value);
  QMatrix eq = mb.build();
  ModelAutomorphisms out;
  out.equations = eq.rows();
  std::vector<QVector> flat;
  for (const auto& k : kernel_basis(eq)) {
    QMatrixBuilder a(n, n);
    for (std::size_t i = 0; i < k.size(); ++i)
      if (sgn(k[i]) != 0) a.add(i / n, i % n, k[i]);
    out.basis.push_back(a.build());
    flat.push_back(k);
  }
  out.linear_dim = out.basis.size();
  out.projective_dim = out.linear_dim == 0 ? 0 : out.linear_dim - 1;
  out.expected_projective = static_cast<std::size_t>((dv_ * dv_ - 1) + (dw_ * dw_ - 1) + 1 + dv_ * dw_);
  std::size_t nn = n * n;
  out.contains_identity = in_span(flat, flatten(QMatrix::identity(n)));
  std::vector<QVector> comm;
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    for (std::size_t j = i + 1; j < out.basis.size(); ++j)
      comm.push_back(flatten(out.basis[i] * out.basis[j] - out.basis[j] * out.basis[i]));
  out.bracket_closed = all_in_span(flat, comm, nn);
  std::vector<QVector> gens;
  for (const auto& g : explicit_generators()) gens.push_back(flatten(g));
  out.equals_explicit_generators =
      span_rank(gens, nn) == out.linear_dim && all_in_span(flat, gens, nn);
  return out;
}

std::vector<ConePoint> sample_points(int dim_v, int dim_w, std::size_t count) {
  static const int primes[] = {1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  std::vector<ConePoint> out;
  for (std::size_t s = 0; s < count; ++s) {
    ConePoint p;
    p.c = static_cast<long>(s + 1);
    for (int i = 0; i < dim_v; ++i) {
      long x = primes[(i + 3 * s) % 15];
      if (s % 2 == 1 && i % 2 == 1) x = -x;
      p.v.push_back(x);
    }
    for (int k = 0; k < dim_w; ++k) p.w.push_back(static_cast<long>(2 * k + 1 + 2 * s));
    out.push_back(std::move(p));
  }
  return out;
}

OrbitCone::OrbitCone(std::shared_ptr<const CaseData> data) : data_(std::move(data)) {
  const CaseData& c = *data_;
  const GradedLieAlgebra& g = c.g;
  basis_ = g.indices_of_grade(-1);
  std::size_t n = basis_.size();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) local[basis_[i]] = i;
  auto ad = [&](std::size_t x) {
    QMatrixBuilder mb(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [idx, val] : g.bracket(x, basis_[j])) mb.add(local.at(idx), j, val);
    return mb.build();
  };
  for (std::size_t x : g.indices_of_grade(0)) action_.push_back(ad(x));

  auto r = static_cast<std::size_t>(c.rs.rank);
  std::vector<std::size_t> raising, lowering, u0;
  for (std::size_t a = 0; a < c.rs.size(); ++a) {
    std::size_t idx = r + a;
    if (g.grade[idx] != 0) continue;
    (c.rs.is_positive(a) ? raising : lowering).push_back(idx);
  }
  for (std::size_t idx : c.u_range(0, 0)) u0.push_back(idx);

  std::vector<std::size_t> hw_l, hw_u;
  for (std::size_t i = 0; i < n; ++i) {
    bool killed = true;
    for (std::size_t e : raising)
      if (!g.bracket(e, basis_[i]).empty()) killed = false;
    if (killed) (c.is_u(basis_[i]) ? hw_u : hw_l).push_back(i);
  }
  if (hw_l.size() != 1 || hw_u.size() != 1)
    throw Error("INVALID_ARGUMENT", "g_{-1} is not a sum of two irreducible l_0-modules");
  base_.assign(n, 0);
  base_[hw_l[0]] = 1;
  base_[hw_u[0]] = 1;
  for (std::size_t x : lowering) unipotent_.push_back(ad(x));
  for (std::size_t x : raising) unipotent_.push_back(ad(x));
  for (std::size_t x : u0) unipotent_.push_back(ad(x));
}

QVector OrbitCone::sample(std::size_t i) const {
  QVector beta = base_;
  std::mt19937_64 rng(i + 1);
  std::uniform_int_distribution<long> dist(1, 5);
  for (std::size_t j = 0; j < unipotent_.size(); ++j) {
    long t = dist(rng);
    if (rng() % 2 == 1) t = -t;
    QVector term = beta, acc = beta;
    for (int k = 1; k <= 64; ++k) {
      term = scale(unipotent_[j].apply(term), make_rational(t, k));
      if (is_zero(term)) break;
      acc = add(acc, term);
    }
    beta = std::move(acc);
  }
  return beta;
}

std::vector<QVector> OrbitCone::osculating_space(const QVector& beta, int order) const {
  std::vector<QVector> cur{beta};
  for (int o = 1; o <= order; ++o) {
    std::vector<QVector> next = (o == 1) ? std::vector<QVector>{} : cur;
    for (const auto& m : action_)
      for (const auto& v : cur) next.push_back(m.apply(v));
    cur = span_basis(next, dim());
  }
  return cur;
}

std::size_t OrbitCone::wedge_index(std::size_t i, std::size_t j) const {
  std::size_t n = dim();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

QMatrix OrbitCone::omega() const {
  const GradedLieAlgebra& g = data_->g;
  auto target = g.indices_of_grade(-2);
  std::map<std::size_t, std::size_t> row;
  for (std::size_t i = 0; i < target.size(); ++i) row[target[i]] = i;
  std::size_t n = dim();
  QMatrixBuilder mb(target.size(), n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& [idx, val] : g.bracket(basis_[i], basis_[j])) mb.add(row.at(idx), wedge_index(i, j), val);
  return mb.build();
}

OsculatingData osculating_table(const CaseData& c, std::size_t samples) {
  ConeModel model(c.hc.dim_v, c.hc.dim_w);
  std::size_t dim_g1 = c.g.grade_dim(-1);
  if (dim_g1 != model.dim_u()) throw Error("INVALID_ARGUMENT", "model dimension differs from dim g_{-1}");
  std::size_t dim_m = c.m_all().size();
  OsculatingData d;
  bool first = true;
  for (const auto& pt : sample_points(c.hc.dim_v, c.hc.dim_w, samples)) {
    auto t = model.tangent_space(pt);
    auto ii = model.second_fundamental_form(pt);
    auto iii = model.third_fundamental_form(pt);
    std::size_t p = t.size() - 1;
    if (first) {
      d.p = p;
      d.r = ii.r;
      d.s = iii.s;
      d.tangent = t;
      d.t2 = ii.t2_basis;
      d.third_surjective = iii.surjective;
      d.w_directions_vanish = ii.w_directions_vanish;
      d.third_vanishes_off_w_slot = iii.vanishes_off_w_slot;
      first = false;
    } else if (p != d.p || ii.r != d.r || iii.s != d.s || iii.surjective != d.third_surjective) {
      throw Error("RANK_DROP", "fundamental form ranks differ between sample points");
    } else {
      d.w_directions_vanish = d.w_directions_vanish && ii.w_directions_vanish;
      d.third_vanishes_off_w_slot = d.third_vanishes_off_w_slot && iii.vanishes_off_w_slot;
    }
    ++d.samples;
  }
  d.q_d = dim_g1 - (d.p + 1);
  d.q_t = dim_m - 1 - d.p;
  d.t = static_cast<long>(d.q_t) - static_cast<long>(d.r) - 2 * static_cast<long>(d.s);
  d.t_d = static_cast<long>(d.q_d) - static_cast<long>(d.r) - 2 * static_cast<long>(d.s);

  OrbitCone cone(std::make_shared<const CaseData>(c));
  for (std::size_t i = 0; i < samples; ++i) {
    QVector beta = cone.sample(i);
    std::size_t t1 = cone.osculating_space(beta, 1).size();
    std::size_t t2 = cone.osculating_space(beta, 2).size();
    std::size_t p = t1 - 1, r = t2 - t1, s = cone.dim() - t2;
    if (i == 0) {
      d.orbit_p = p;
      d.orbit_r = r;
      d.orbit_s = s;
    } else if (p != d.orbit_p || r != d.orbit_r || s != d.orbit_s) {
      throw Error("RANK_DROP", "orbit osculating dimensions differ between sample points");
    }
  }
  return d;
}

std::size_t bracket_rank_at_alpha(const CaseData& c) {
  std::size_t root = c.rs.negative_of(c.rs.simple_index(c.hc.grading_root - 1));
  std::size_t x = static_cast<std::size_t>(c.rs.rank) + root;
  if (c.g.grade[x] != -1) throw Error("INVALID_ARGUMENT", "grading root vector is not in degree -1");
  std::vector<QVector> images;
  for (std::size_t y : c.l_range(-1, -1)) images.push_back(dense_from_sparse(c.g.bracket(x, y), c.g.dim()));
  return span_rank(images, c.g.dim());
}

FrobeniusReport frobenius_kernel_check(const OrbitCone& cone, std::size_t max_samples) {
  FrobeniusReport rep;
  std::size_t n = cone.dim();
  QMatrix om = cone.omega();
  rep.wedge_dim = om.cols();
  std::size_t rk = certified_rank(om);
  rep.kernel_dim = rep.wedge_dim - rk;
  rep.omega_surjective = rk == om.rows();
  for (std::size_t i = 0; i < max_samples && rep.tangent_span.size() < rep.kernel_dim; ++i) {
    auto t = cone.osculating_space(cone.sample(i), 1);
    std::vector<QVector> wedges = rep.tangent_span;
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        QVector w(rep.wedge_dim);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = x + 1; y < n; ++y) w[cone.wedge_index(x, y)] = t[a][x] * t[b][y] - t[a][y] * t[b][x];
        if (!is_zero(om.apply(w))) rep.tangent_isotropic = false;
        wedges.push_back(std::move(w));
      }
    rep.tangent_span = span_basis(wedges, rep.wedge_dim);
    rep.samples_used = i + 1;
  }
  rep.tangent_span_dim = rep.tangent_span.size();
  rep.equal = rep.tangent_isotropic && rep.tangent_span_dim == rep.kernel_dim;
  return rep;
}

bool DeterminedByReport::pass() const {
  if (!relations_graded || degrees.empty()) return false;
  for (const auto& d : degrees)
    if (!d.surjective || !d.kernel_is_ideal || d.quotient_dim != d.m_dim || d.free_dim != d.witt_dim) return false;
  return true;
}

DeterminedByReport determined_by_check(const OrbitCone& cone, const FrobeniusReport& frob) {
  const CaseData& c = cone.data();
  const GradedLieAlgebra& g = c.g;
  std::size_t n = cone.dim();
  const auto& gens = cone.basis();
  DeterminedByReport rep;

  // Split the relations into weight components; they span the same space iff
  // the relation space is graded.
  auto wedge_weight = [&](std::size_t i, std::size_t j) { return add_weights(g.weight[gens[i]], g.weight[gens[j]]); };
  std::map<WeightKey, std::vector<SparseVec>> comps;
  for (const auto& v : frob.tangent_span) {
    std::map<WeightKey, SparseVec> parts;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const RationalScalar& x = v[cone.wedge_index(i, j)];
        if (sgn(x) == 0) continue;
        // x (x_i x_j - x_j x_i) in the tensor algebra.
        SparseVec& s = parts[wedge_weight(i, j)];
        s.emplace_back(i * n + j, x);
        s.emplace_back(j * n + i, -x);
      }
    for (auto& [w, s] : parts) {
      std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      comps[w].push_back(std::move(s));
    }
  }
  std::map<WeightKey, std::vector<SparseVec>> ideal;
  std::size_t graded_dim = 0;
  for (auto& [w, vs] : comps) {
    ideal[w] = sparse_span_basis(vs);
    graded_dim += ideal[w].size();
  }
  rep.relations_graded = graded_dim == frob.tangent_span_dim;

  FreeLieAlgebra free(n, c.mu);
  std::vector<QVector> image(free.elements().size());
  std::vector<WeightKey> weight(free.elements().size());
  for (std::size_t e = 0; e < free.elements().size(); ++e) {
    const auto& he = free.elements()[e];
    if (he.degree == 1) {
      image[e] = QVector(g.dim());
      image[e][gens[he.generator]] = 1;
      weight[e] = g.weight[gens[he.generator]];
    } else {
      image[e] = g.bracket(image[he.left], image[he.right]);
      weight[e] = add_weights(weight[he.left], weight[he.right]);
    }
  }

  for (int d = 2; d <= c.mu; ++d) {
    DegreeComparison dc;
    dc.degree = d;
    auto hall = free.basis(d);
    dc.free_dim = hall.size();
    dc.witt_dim = FreeLieAlgebra::witt_dimension(n, d);
    auto target = g.indices_of_grade(-d);
    dc.m_dim = target.size();
    if (d > 2) {
      std::map<WeightKey, std::vector<SparseVec>> next;
      for (const auto& [w, vs] : ideal)
        for (std::size_t x = 0; x < n; ++x)
          for (const auto& v : vs)
            next[add_weights(g.weight[gens[x]], w)].push_back(free.commutator(free.generator_tensor(x), 1, v, d - 1));
      ideal.clear();
      for (auto& [w, vs] : next) ideal[w] = sparse_span_basis(vs);
    }
    std::map<WeightKey, std::vector<std::size_t>> hall_blocks;
    for (std::size_t e : hall) hall_blocks[weight[e]].push_back(e);
    std::size_t ideal_total = 0, image_rank = 0;
    bool kernel_ok = true, independent = true;
    for (const auto& [w, vs] : ideal)
      if (!hall_blocks.count(w) && !vs.empty()) kernel_ok = false;
    for (const auto& [w, elems] : hall_blocks) {
      std::vector<SparseVec> tens;
      for (std::size_t e : elems) tens.push_back(free.tensor(e));
      if (sparse_rank(tens) != elems.size()) independent = false;
      QMatrixBuilder mb(target.size(), elems.size());
      for (std::size_t j = 0; j < elems.size(); ++j)
        for (std::size_t t = 0; t < target.size(); ++t)
          if (sgn(image[elems[j]][target[t]]) != 0) mb.add(t, j, image[elems[j]][target[t]]);
      QMatrix map = mb.build();
      image_rank += certified_rank(map);
      std::vector<SparseVec> ker;
      for (const auto& k : kernel_basis(map)) {
        SparseVec acc;
        for (std::size_t j = 0; j < k.size(); ++j)
          if (sgn(k[j]) != 0) sparse_axpy(acc, k[j], tens[j]);
        ker.push_back(std::move(acc));
      }
      auto it = ideal.find(w);
      std::vector<SparseVec> rel = it == ideal.end() ? std::vector<SparseVec>{} : it->second;
      std::size_t ri = sparse_rank(rel);
      ideal_total += ri;
      std::vector<SparseVec> both = ker;
      both.insert(both.end(), rel.begin(), rel.end());
      std::size_t ru = sparse_rank(both);
      if (ri != ker.size() || ru != ri) kernel_ok = false;
    }
    if (!independent) dc.free_dim = 0;
    dc.ideal_dim = ideal_total;
    dc.quotient_dim = hall.size() - ideal_total;
    dc.surjective = image_rank == dc.m_dim;
    dc.kernel_is_ideal = kernel_ok;
    rep.degrees.push_back(dc);
  }
  return rep;
}

AutomorphismComparison g0_image_check(const OrbitCone& cone, std::size_t max_samples) {
  AutomorphismComparison rep;
  std::size_t n = cone.dim(), nn = n * n;
  std::vector<QVector> image;
  for (const auto& m : cone.g0_action()) image.push_back(flatten(m));
  rep.g0_dim = image.size();
  rep.image_dim = span_rank(image, nn);
  std::vector<QVector> comm;
  const auto& act = cone.g0_action();
  for (std::size_t i = 0; i < act.size(); ++i)
    for (std::size_t j = i + 1; j < act.size(); ++j) comm.push_back(flatten(act[i] * act[j] - act[j] * act[i]));
  rep.bracket_closed = all_in_span(image, comm, nn);

  std::vector<QVector> rows;
  std::size_t dim = nn;
  for (std::size_t i = 0; i < max_samples && dim > rep.image_dim; ++i) {
    QVector beta = cone.sample(i);
    auto t = cone.osculating_space(beta, 1);
    for (const auto& lam : kernel_basis(QMatrix::from_rows(n, t))) {
      QVector row(nn);
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(lam[r]) != 0)
          for (std::size_t s = 0; s < n; ++s) row[r * n + s] = lam[r] * beta[s];
      rows.push_back(std::move(row));
    }
    rows = span_basis(rows, nn);
    dim = nn - rows.size();
    rep.samples_used = i + 1;
  }
  rep.sandwich_dim = dim;
  rep.image_preserves = true;
  for (const auto& row : rows)
    for (const auto& m : image)
      if (sgn(dot(row, m)) != 0) rep.image_preserves = false;
  rep.equal = rep.image_preserves && rep.sandwich_dim == rep.image_dim;
  return rep;
}

DimensionCheck vmrt_dimension_check(const CaseData& c) {
  DimensionCheck d;
  d.formula = static_cast<std::size_t>((c.hc.dim_v - 1) + c.hc.dim_w);
  d.table = c.hc.family == Family::B ? static_cast<std::size_t>(c.hc.rank) : 4;
  ConeModel model(c.hc.dim_v, c.hc.dim_w);
  d.computed_p = model.tangent_space(sample_points(c.hc.dim_v, c.hc.dim_w, 1)[0]).size() - 1;
  return d;
}

ExactSequenceDims exact_sequence_dims(const CaseData& c) {
  ConeModel model(c.hc.dim_v, c.hc.dim_w);
  auto pt = sample_points(c.hc.dim_v, c.hc.dim_w, 1)[0];
  ExactSequenceDims e;
  auto t = model.tangent_space(pt);
  auto ii = model.second_fundamental_form(pt);
  e.p = t.size() - 1;
  e.r = ii.r;
  e.s = model.dim_u() - ii.t2_basis.size();
  std::size_t dv = c.hc.dim_v, dw = c.hc.dim_w;
  std::size_t sym_q = (dv - 1) * dv / 2;  // dim Sym^2 (V/V_0)
  // T/C beta = V_0 + V_0 o (V/V_0) (x) W_0 + Sym^2 V_0 (x) W/W_0.
  e.p_formula = 1 + (dv - 1) + (dw - 1);
  // T2/T = V/V_0 + Sym^2(V/V_0) (x) W_0 + V_0 o (V/V_0) (x) W/W_0.
  e.r_formula = (dv - 1) + sym_q + (dv - 1) * (dw - 1);
  // U/T2 = Sym^2(V/V_0) (x) W/W_0.
  e.s_formula = sym_q * (dw - 1);
  return e;
}

}  // namespace hv
