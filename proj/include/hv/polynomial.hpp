#pragma once

#include <map>
#include <vector>

#include "hv/linalg.hpp"

namespace hv {

// Exact multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  using Monomial = std::vector<int>;  // exponent of each variable

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const RationalScalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t num_vars() const { return nvars_; }
  const std::map<Monomial, RationalScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const RationalScalar& s) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Polynomial derivative(std::size_t var) const;
  RationalScalar evaluate(const QVector& x) const;

 private:
  void add_term(const Monomial& m, const RationalScalar& c);
  std::size_t nvars_ = 0;
  std::map<Monomial, RationalScalar> terms_;
};

using PolyVector = std::vector<Polynomial>;

PolyVector derivative(const PolyVector& f, std::size_t var);
QVector evaluate(const PolyVector& f, const QVector& x);

}  // namespace hv
