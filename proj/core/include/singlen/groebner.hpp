#ifndef SINGLEN_GROEBNER_HPP
#define SINGLEN_GROEBNER_HPP

#include <optional>
#include <vector>

#include "singlen/order.hpp"
#include "singlen/polynomial.hpp"

namespace singlen {

// Remainder plus one cofactor per ORIGINAL generator:
//   dividend = sum_i cofactors[i] * generators[i] + remainder.
struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;
};

class GroebnerBasis {
public:
  GroebnerBasis(std::vector<Polynomial> generators, std::vector<Polynomial> basis,
                std::vector<std::vector<Polynomial>> transform, TermOrder order);

  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const TermOrder& order() const { return order_; }
  // transform()[i][j]: basis[i] = sum_j transform[i][j] * generators[j].
  const std::vector<std::vector<Polynomial>>& transform() const { return transform_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  std::size_t nvars() const;

private:
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> basis_;
  std::vector<std::vector<Polynomial>> transform_;
  TermOrder order_;
  std::vector<Monomial> leading_;
};

// Buchberger with product and chain criteria, normal pair selection,
// full auto-reduction. Output (basis, sorted by leading monomial,
// monic) is the reduced Groebner basis, hence canonical for the order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order);

// Unique normal form of p modulo the ideal, cofactors against the
// original generators via the transform matrix.
DivisionResult normal_form_with_cofactors(const Polynomial& p, const GroebnerBasis& gb);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Staircase monomials (all monomials outside the leading-term ideal),
// or nullopt when the quotient is infinite-dimensional.
std::optional<std::vector<Monomial>> quotient_basis(const GroebnerBasis& gb);

// True iff the quotient by the ideal is finite-dimensional and every
// variable is nilpotent in it (support of the ideal is {origin}).
bool supported_only_at_origin(const std::vector<Polynomial>& gens, const TermOrder& order);
bool supported_only_at_origin(const GroebnerBasis& gb);

} // namespace singlen

#endif
