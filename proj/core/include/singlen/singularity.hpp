#ifndef SINGLEN_SINGULARITY_HPP
#define SINGLEN_SINGULARITY_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "singlen/groebner.hpp"
#include "singlen/order.hpp"
#include "singlen/polynomial.hpp"

namespace singlen {

// Everything downstream needs about an isolated quasi-homogeneous
// hypersurface singularity at the origin: weights, Milnor number and
// algebra basis, spectral values l(b) = sum (b_i + 1) w_i, and the
// Groebner basis of the Jacobian ideal with cofactor transform.
struct SingularityProfile {
  Polynomial f;
  std::size_t n;
  WeightVector w;
  Rational weight_sum;
  unsigned mu;
  std::vector<Monomial> basis;
  std::map<Monomial, Rational> spectral;
  std::shared_ptr<const GroebnerBasis> jacobian_gb;
  TermOrder order;

  Rational spectral_value(const Monomial& beta) const;
};

std::vector<Polynomial> jacobian_generators(const Polynomial& f);

// Milnor number; throws DomainError (n < 3 or f(0) != 0) or
// NonIsolatedError (quotient infinite or support not {origin}).
unsigned milnor_number(const Polynomial& f);

// Unique positive solution w of sum w_i m_i = 1 over supp(f), if it
// exists; underdetermined systems are rejected (nullopt) so the grading
// used downstream is canonical.
std::optional<WeightVector> detect_weights(const Polynomial& f);

// Full profile; throws DomainError, NonIsolatedError, or
// NotQuasiHomogeneousError.
SingularityProfile build_profile(const Polynomial& f);

} // namespace singlen

#endif
