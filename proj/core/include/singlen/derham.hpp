#ifndef SINGLEN_DERHAM_HPP
#define SINGLEN_DERHAM_HPP

#include <map>
#include <optional>
#include <vector>

#include "singlen/singularity.hpp"

namespace singlen {

// Canonical residue representative of a class in H': a finite rational
// combination of [x^b dx / f^{l(b)}] over Milnor-basis monomials b with
// integer spectral value l(b).
struct CohomologyClass {
  std::map<Monomial, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const CohomologyClass&) const = default;
};

struct FiltrationTable {
  std::vector<unsigned> dims; // dims[l] = dim P_l H'
  unsigned hprime_dim = 0;
};

// deg_w(A) + sum(w) - k for w-homogeneous A; throws DomainError when A
// is inhomogeneous. A class of nonzero Euler degree is exact.
Rational euler_degree(const Polynomial& a, int pole, const SingularityProfile& profile);

// Canonical form of [A dx / f^k] by graded Griffiths-Dwork reduction:
// keep the Euler-degree-0 graded component, divide by the Jacobian
// ideal with cofactors g_i, record the remainder at the current pole
// level, and recurse on (1/(k-1)) sum_i d(g_i)/dx_i one pole lower.
// At pole 1 the normal form modulo the Jacobian ideal decides the class.
CohomologyClass reduce_class(const Polynomial& a, int pole, const SingularityProfile& profile);

bool class_is_zero(const CohomologyClass& c);

// max l(b) over the support, or nullopt for the zero class; the class
// lies in P_l iff max_pole_level <= l + 1.
std::optional<int> max_pole_level(const CohomologyClass& c, const SingularityProfile& profile);

// dims[l] = #{b in Milnor basis : l(b) integer, l(b) <= l + 1}, the
// pole-order filtration dimensions (equal to the Hodge ones in the
// quasi-homogeneous scope).
FiltrationTable pole_filtration_dims(const SingularityProfile& profile, int l_max);

} // namespace singlen

#endif
