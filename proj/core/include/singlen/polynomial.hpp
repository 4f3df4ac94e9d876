#ifndef SINGLEN_POLYNOMIAL_HPP
#define SINGLEN_POLYNOMIAL_HPP

#include <map>
#include <cstddef>

#include "singlen/monomial.hpp"
#include "singlen/rational.hpp"

namespace singlen {

// Multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored; the variable count is fixed at
// construction and mixed-arity operations throw.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t nvars) : n_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;

  // Accumulates c onto the coefficient of m, dropping it if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);

  bool operator==(const Polynomial& q) const {
    return n_ == q.n_ && terms_ == q.terms_;
  }

  // Formal partial derivative in variable i.
  Polynomial derivative(std::size_t i) const;

private:
  std::size_t n_;
  TermMap terms_;
  void check_arity(const Polynomial& q) const;
};

} // namespace singlen

#endif
