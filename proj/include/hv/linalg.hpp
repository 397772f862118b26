#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hv/error.hpp"

namespace hv {

// GMP keeps mpq_class values in lowest terms with a positive denominator.
using RationalScalar = mpq_class;
using QVector = std::vector<RationalScalar>;

RationalScalar make_rational(long num, long den);

struct QEntry {
  std::size_t row;
  std::size_t col;
  RationalScalar value;
};

// Sparse matrix stored as row-major sorted triplets with no explicit zeros.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_dense(const std::vector<QVector>& rows);
  static QMatrix from_columns(std::size_t rows, const std::vector<QVector>& cols);
  static QMatrix from_rows(std::size_t cols, const std::vector<QVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<QEntry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  RationalScalar at(std::size_t r, std::size_t c) const;
  QVector apply(const QVector& x) const;
  QMatrix transpose() const;
  std::vector<QVector> dense_rows() const;
  QVector column(std::size_t c) const;

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix scaled(const RationalScalar& s) const;
  bool operator==(const QMatrix& other) const;

 private:
  friend class QMatrixBuilder;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QEntry> entries_;
};

// Accumulates (row, col, value) contributions; duplicates are summed.
class QMatrixBuilder {
 public:
  QMatrixBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  void add(std::size_t r, std::size_t c, const RationalScalar& v);
  QMatrix build();

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<QEntry> pending_;
};

std::size_t rank_ff(const QMatrix& m);
std::size_t rank_mod(const QMatrix& m);
std::vector<QVector> kernel_basis(const QMatrix& m);
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

// rank_ff and rank_mod together; throws BACKEND_DISAGREEMENT when they differ.
std::size_t certified_rank(const QMatrix& m);

// Convenience wrappers over lists of vectors.
std::size_t span_rank(const std::vector<QVector>& vectors, std::size_t dim);
std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim);
bool in_span(const std::vector<QVector>& basis, const QVector& v);
// Basis of {x in span(basis) : <x, y> = 0 for all y in span(other)}.
std::vector<QVector> orthogonal_complement_within(const std::vector<QVector>& basis,
                                                  const std::vector<QVector>& other,
                                                  std::size_t dim);

bool is_zero(const QVector& v);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const QVector& a, const RationalScalar& s);
RationalScalar dot(const QVector& a, const QVector& b);

struct LinalgConfig {
  std::size_t prime_budget = 8;
};
LinalgConfig& linalg_config();

struct LinalgStats {
  std::uint64_t certified_matrices = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t fallbacks = 0;
};
LinalgStats linalg_stats();
void reset_linalg_stats();

}  // namespace hv
