#include "singlen/polynomial.hpp"

#include <stdexcept>

#include "singlen/errors.hpp"

namespace singlen {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Monomial m(nvars);
  m.e[i] = 1;
  return monomial(m, Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(Monomial(n_)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != n_) throw DomainError("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_arity(const Polynomial& q) const {
  if (n_ != q.n_) throw DomainError("variable-count mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  Polynomial r = *this;
  r += q;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_arity(q);
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  Polynomial r = *this;
  r -= q;
  return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  check_arity(q);
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_arity(q);
  Polynomial r(n_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(n_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= n_) throw DomainError("derivative index out of range");
  Polynomial r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.e[i] == 0) continue;
    Monomial d = m;
    d.e[i] -= 1;
    r.add_term(d, c * Rational(m.e[i]));
  }
  return r;
}

} // namespace singlen
