#include "hv/polynomial.hpp"

#include <algorithm>

namespace hv {

Polynomial Polynomial::constant(std::size_t nvars, const RationalScalar& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const RationalScalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r.nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(std::max(nvars_, o.nvars_));
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Monomial m(a);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += b[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Polynomial Polynomial::scaled(const RationalScalar& s) const {
  Polynomial r(nvars_);
  if (sgn(s) == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d(m);
    --d[var];
    r.add_term(d, c * m[var]);
  }
  return r;
}

RationalScalar Polynomial::evaluate(const QVector& x) const {
  RationalScalar total = 0;
  for (const auto& [m, c] : terms_) {
    RationalScalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= x[i];
    total += t;
  }
  return total;
}

PolyVector derivative(const PolyVector& f, std::size_t var) {
  PolyVector r;
  r.reserve(f.size());
  for (const auto& p : f) r.push_back(p.derivative(var));
  return r;
}

QVector evaluate(const PolyVector& f, const QVector& x) {
  QVector r;
  r.reserve(f.size());
  for (const auto& p : f) r.push_back(p.evaluate(x));
  return r;
}

}  // namespace hv
