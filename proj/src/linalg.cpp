#include "hv/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace hv {

namespace {

std::atomic<std::uint64_t> g_certified{0};
std::atomic<std::uint64_t> g_disagreements{0};
std::atomic<std::uint64_t> g_fallbacks{0};

template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

template <class T>
const T* find_col(const SparseRow<T>& row, std::size_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it == row.end() || it->first != c) return nullptr;
  return &it->second;
}

std::vector<SparseRow<RationalScalar>> rational_rows(const QMatrix& m) {
  std::vector<SparseRow<RationalScalar>> rows(m.rows());
  for (const auto& e : m.entries()) rows[e.row].emplace_back(e.col, e.value);
  return rows;
}

// row := row - a * piv
void axpy_row(SparseRow<RationalScalar>& row, const RationalScalar& a,
              const SparseRow<RationalScalar>& piv) {
  SparseRow<RationalScalar> out;
  out.reserve(row.size() + piv.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < piv.size()) {
    if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || piv[j].first < row[i].first) {
      out.emplace_back(piv[j].first, -a * piv[j].second);
      ++j;
    } else {
      RationalScalar v = row[i].second - a * piv[j].second;
      if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row.swap(out);
}

struct Rref {
  // Each entry: pivot column and the fully reduced row (pivot entry 1).
  std::vector<std::pair<std::size_t, SparseRow<RationalScalar>>> pivots;
  bool inconsistent = false;
};

// Gauss-Jordan elimination. Columns >= pivot_limit are never used as pivots.
Rref rref(std::vector<SparseRow<RationalScalar>> rows, std::size_t pivot_limit) {
  Rref out;
  std::vector<SparseRow<RationalScalar>> active;
  for (auto& r : rows)
    if (!r.empty()) active.push_back(std::move(r));
  while (!active.empty()) {
    std::size_t best = active.size();
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (active[i].front().first >= pivot_limit) continue;
      if (best == active.size() || active[i].size() < active[best].size()) best = i;
    }
    if (best == active.size()) {
      out.inconsistent = true;
      break;
    }
    SparseRow<RationalScalar> piv = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    std::size_t c = piv.front().first;
    RationalScalar inv = 1 / piv.front().second;
    for (auto& e : piv) e.second *= inv;
    for (auto& r : active)
      if (const RationalScalar* a = find_col(r, c)) axpy_row(r, RationalScalar(*a), piv);
    for (auto& [pc, r] : out.pivots)
      if (const RationalScalar* a = find_col(r, c)) axpy_row(r, RationalScalar(*a), piv);
    out.pivots.emplace_back(c, std::move(piv));
    active.erase(std::remove_if(active.begin(), active.end(), [](const auto& r) { return r.empty(); }),
                 active.end());
  }
  return out;
}

std::size_t structural_bound(const QMatrix& m) {
  std::vector<char> rs(m.rows(), 0), cs(m.cols(), 0);
  for (const auto& e : m.entries()) {
    rs[e.row] = 1;
    cs[e.col] = 1;
  }
  std::size_t r = static_cast<std::size_t>(std::count(rs.begin(), rs.end(), 1));
  std::size_t c = static_cast<std::size_t>(std::count(cs.begin(), cs.end(), 1));
  return std::min(r, c);
}

std::size_t rank_mod_prime(const QMatrix& m, std::uint64_t p) {
  std::vector<SparseRow<std::uint64_t>> rows(m.rows());
  mpz_class pz(static_cast<unsigned long>(p));
  for (const auto& e : m.entries()) {
    mpz_class num = e.value.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = e.value.get_den() % pz;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    mpz_class v = (num * inv) % pz;
    if (v != 0) rows[e.row].emplace_back(e.col, v.get_ui());
  }
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) { return (a * b) % p; };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::vector<SparseRow<std::uint64_t>> active;
  for (auto& r : rows)
    if (!r.empty()) active.push_back(std::move(r));
  std::size_t rank = 0;
  while (!active.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < active.size(); ++i)
      if (active[i].size() < active[best].size()) best = i;
    SparseRow<std::uint64_t> piv = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    ++rank;
    std::size_t c = piv.front().first;
    std::uint64_t inv = powmod(piv.front().second, p - 2);
    for (auto& e : piv) e.second = mulmod(e.second, inv);
    for (auto& r : active) {
      const std::uint64_t* a = find_col(r, c);
      if (!a) continue;
      std::uint64_t f = *a;
      SparseRow<std::uint64_t> out;
      out.reserve(r.size() + piv.size());
      std::size_t i = 0, j = 0;
      while (i < r.size() || j < piv.size()) {
        if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
          out.push_back(r[i++]);
        } else if (i == r.size() || piv[j].first < r[i].first) {
          out.emplace_back(piv[j].first, (p - mulmod(f, piv[j].second)) % p);
          ++j;
        } else {
          std::uint64_t v = (r[i].second + p - mulmod(f, piv[j].second)) % p;
          if (v) out.emplace_back(r[i].first, v);
          ++i;
          ++j;
        }
      }
      r.swap(out);
    }
    active.erase(std::remove_if(active.begin(), active.end(), [](const auto& r) { return r.empty(); }),
                 active.end());
  }
  return rank;
}

const std::vector<std::uint64_t>& prime_pool() {
  static std::once_flag once;
  static std::vector<std::uint64_t> pool;
  std::call_once(once, [] {
    mpz_class p = mpz_class(1) << 30;
    for (int i = 0; i < 64; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      pool.push_back(p.get_ui());
    }
  });
  return pool;
}

}  // namespace

RationalScalar make_rational(long num, long den) {
  if (den == 0) throw Error("ZERO_DENOMINATOR", "rational with zero denominator");
  RationalScalar q(num, den);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- QMatrix

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_.push_back({i, i, RationalScalar(1)});
  return m;
}

QMatrix QMatrix::from_dense(const std::vector<QVector>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  return from_rows(nc, rows);
}

QMatrix QMatrix::from_rows(std::size_t cols, const std::vector<QVector>& rows) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (sgn(rows[r][c]) != 0) m.entries_.push_back({r, c, rows[r][c]});
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<QVector>& cols) {
  QMatrixBuilder b(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r)
      if (sgn(cols[c][r]) != 0) b.add(r, c, cols[c][r]);
  return b.build();
}

RationalScalar QMatrix::at(std::size_t r, std::size_t c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(r, c),
                             [](const QEntry& e, const std::pair<std::size_t, std::size_t>& k) {
                               return std::make_pair(e.row, e.col) < k;
                             });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return 0;
}

QVector QMatrix::apply(const QVector& x) const {
  QVector y(rows_);
  for (const auto& e : entries_)
    if (sgn(x[e.col]) != 0) y[e.row] += e.value * x[e.col];
  return y;
}

QMatrix QMatrix::transpose() const {
  QMatrixBuilder b(cols_, rows_);
  for (const auto& e : entries_) b.add(e.col, e.row, e.value);
  return b.build();
}

std::vector<QVector> QMatrix::dense_rows() const {
  std::vector<QVector> out(rows_, QVector(cols_));
  for (const auto& e : entries_) out[e.row][e.col] = e.value;
  return out;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (const auto& e : entries_)
    if (e.col == c) v[e.row] = e.value;
  return v;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw Error("SHAPE_MISMATCH", "matrix product");
  std::vector<std::vector<const QEntry*>> orow(other.rows_);
  for (const auto& e : other.entries_) orow[e.row].push_back(&e);
  QMatrixBuilder b(rows_, other.cols_);
  for (const auto& e : entries_)
    for (const QEntry* f : orow[e.col]) b.add(e.row, f->col, e.value * f->value);
  return b.build();
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("SHAPE_MISMATCH", "matrix sum");
  QMatrixBuilder b(rows_, cols_);
  for (const auto& e : entries_) b.add(e.row, e.col, e.value);
  for (const auto& e : other.entries_) b.add(e.row, e.col, e.value);
  return b.build();
}

QMatrix QMatrix::operator-(const QMatrix& other) const { return *this + other.scaled(-1); }

QMatrix QMatrix::scaled(const RationalScalar& s) const {
  QMatrix m(rows_, cols_);
  if (sgn(s) == 0) return m;
  m.entries_ = entries_;
  for (auto& e : m.entries_) e.value *= s;
  return m;
}

bool QMatrix::operator==(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || entries_.size() != other.entries_.size())
    return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& a = entries_[i];
    const auto& b = other.entries_[i];
    if (a.row != b.row || a.col != b.col || a.value != b.value) return false;
  }
  return true;
}

void QMatrixBuilder::add(std::size_t r, std::size_t c, const RationalScalar& v) {
  if (r >= rows_ || c >= cols_) throw Error("INDEX_OUT_OF_RANGE", "matrix entry outside bounds");
  if (sgn(v) != 0) pending_.push_back({r, c, v});
}

QMatrix QMatrixBuilder::build() {
  std::sort(pending_.begin(), pending_.end(), [](const QEntry& a, const QEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  QMatrix m(rows_, cols_);
  for (auto& e : pending_) {
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
      if (sgn(m.entries_.back().value) == 0) m.entries_.pop_back();
    } else {
      m.entries_.push_back(std::move(e));
    }
  }
  pending_.clear();
  return m;
}

// ---------------------------------------------------------------- ranks

std::size_t rank_ff(const QMatrix& m) {
  // Clear denominators row by row, then run fraction-free elimination.
  std::vector<SparseRow<mpz_class>> rows(m.rows());
  {
    auto qrows = rational_rows(m);
    for (std::size_t r = 0; r < qrows.size(); ++r) {
      mpz_class l = 1;
      for (const auto& e : qrows[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
      for (const auto& e : qrows[r]) rows[r].emplace_back(e.first, mpz_class(e.second * l));
    }
  }
  std::vector<SparseRow<mpz_class>> active;
  for (auto& r : rows)
    if (!r.empty()) active.push_back(std::move(r));
  mpz_class prev = 1;
  std::size_t rank = 0;
  while (!active.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < active.size(); ++i)
      if (active[i].size() < active[best].size()) best = i;
    SparseRow<mpz_class> piv = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    ++rank;
    std::size_t c = piv.front().first;
    mpz_class p = piv.front().second;
    for (auto& r : active) {
      const mpz_class* ap = find_col(r, c);
      mpz_class a = ap ? *ap : mpz_class(0);
      SparseRow<mpz_class> out;
      out.reserve(r.size() + piv.size());
      std::size_t i = 0, j = 0;
      mpz_class t;
      while (i < r.size() || j < piv.size()) {
        if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
          t = p * r[i].second;
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          out.emplace_back(r[i].first, t);
          ++i;
        } else if (i == r.size() || piv[j].first < r[i].first) {
          if (a != 0) {
            t = -a * piv[j].second;
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            out.emplace_back(piv[j].first, t);
          }
          ++j;
        } else {
          t = p * r[i].second - a * piv[j].second;
          if (t != 0) {
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            out.emplace_back(r[i].first, t);
          }
          ++i;
          ++j;
        }
      }
      r.swap(out);
    }
    prev = p;
    active.erase(std::remove_if(active.begin(), active.end(), [](const auto& r) { return r.empty(); }),
                 active.end());
  }
  return rank;
}

std::size_t rank_mod(const QMatrix& m) {
  const auto& pool = prime_pool();
  std::size_t budget = std::min(linalg_config().prime_budget, pool.size());
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < budget && ranks.size() < 3; ++i) {
    std::uint64_t p = pool[i];
    mpz_class pz(static_cast<unsigned long>(p));
    bool divides = false;
    for (const auto& e : m.entries())
      if (mpz_divisible_p(e.value.get_den_mpz_t(), pz.get_mpz_t())) {
        divides = true;
        break;
      }
    if (divides) continue;
    ranks.push_back(rank_mod_prime(m, p));
  }
  if (ranks.size() < 3)
    throw Error("PRIME_EXHAUSTION", "fewer than three usable primes within the prime budget");
  std::size_t best = *std::max_element(ranks.begin(), ranks.end());
  bool agree = std::all_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r == best; });
  if (!agree || best > structural_bound(m)) {
    g_fallbacks.fetch_add(1, std::memory_order_relaxed);
    return rank_ff(m);
  }
  return best;
}

std::size_t certified_rank(const QMatrix& m) {
  std::size_t a = rank_ff(m);
  std::size_t b = rank_mod(m);
  g_certified.fetch_add(1, std::memory_order_relaxed);
  if (a != b) {
    g_disagreements.fetch_add(1, std::memory_order_relaxed);
    throw Error("BACKEND_DISAGREEMENT", "rank_ff=" + std::to_string(a) + " rank_mod=" + std::to_string(b));
  }
  return a;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  Rref red = rref(rational_rows(m), m.cols());
  std::vector<char> is_pivot(m.cols(), 0);
  for (const auto& [c, row] : red.pivots) is_pivot[c] = 1;
  std::vector<QVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (const auto& [c, row] : red.pivots)
      if (const RationalScalar* a = find_col(row, f)) v[c] = -*a;
    out.push_back(std::move(v));
  }
  if (certified_rank(m) + out.size() != m.cols())
    throw Error("BACKEND_DISAGREEMENT", "kernel dimension inconsistent with certified rank");
  return out;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw Error("SHAPE_MISMATCH", "right-hand side length");
  auto rows = rational_rows(m);
  for (std::size_t r = 0; r < b.size(); ++r)
    if (sgn(b[r]) != 0) rows[r].emplace_back(m.cols(), b[r]);
  Rref red = rref(std::move(rows), m.cols());
  if (red.inconsistent) return std::nullopt;
  QVector x(m.cols());
  for (const auto& [c, row] : red.pivots)
    if (const RationalScalar* a = find_col(row, m.cols())) x[c] = *a;
  if (m.apply(x) != b) throw Error("SOLVE_FAILED", "residual is nonzero");
  return x;
}

// ---------------------------------------------------------------- vectors

std::size_t span_rank(const std::vector<QVector>& vectors, std::size_t dim) {
  return certified_rank(QMatrix::from_rows(dim, vectors));
}

std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim) {
  Rref red = rref(rational_rows(QMatrix::from_rows(dim, vectors)), dim);
  std::sort(red.pivots.begin(), red.pivots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<QVector> out;
  for (const auto& [c, row] : red.pivots) {
    QVector v(dim);
    for (const auto& [i, val] : row) v[i] = val;
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<QVector>& basis, const QVector& v) {
  if (is_zero(v)) return true;
  std::size_t dim = v.size();
  std::vector<QVector> ext = basis;
  ext.push_back(v);
  return span_rank(ext, dim) == span_rank(basis, dim);
}

std::vector<QVector> orthogonal_complement_within(const std::vector<QVector>& basis,
                                                  const std::vector<QVector>& other,
                                                  std::size_t dim) {
  if (basis.empty()) return {};
  if (other.empty()) return basis;
  QMatrixBuilder b(other.size(), basis.size());
  for (std::size_t j = 0; j < other.size(); ++j)
    for (std::size_t i = 0; i < basis.size(); ++i) b.add(j, i, dot(basis[i], other[j]));
  std::vector<QVector> out;
  for (const auto& c : kernel_basis(b.build())) {
    QVector x(dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (sgn(c[i]) != 0) x = add(x, scale(basis[i], c[i]));
    out.push_back(std::move(x));
  }
  return out;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const RationalScalar& x) { return sgn(x) == 0; });
}

QVector add(const QVector& a, const QVector& b) {
  QVector c(a);
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

QVector sub(const QVector& a, const QVector& b) {
  QVector c(a);
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return c;
}

QVector scale(const QVector& a, const RationalScalar& s) {
  QVector c(a);
  for (auto& x : c) x *= s;
  return c;
}

RationalScalar dot(const QVector& a, const QVector& b) {
  RationalScalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

LinalgConfig& linalg_config() {
  static LinalgConfig cfg;
  return cfg;
}

LinalgStats linalg_stats() {
  return {g_certified.load(), g_disagreements.load(), g_fallbacks.load()};
}

void reset_linalg_stats() {
  g_certified = 0;
  g_disagreements = 0;
  g_fallbacks = 0;
}

}  // namespace hv
