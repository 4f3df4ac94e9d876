#ifndef SINGLEN_DMODLEN_HPP
#define SINGLEN_DMODLEN_HPP

#include <optional>
#include <vector>

#include "singlen/derham.hpp"
#include "singlen/singularity.hpp"

namespace singlen {

// s = numerator / f^pole in reduced representation (numerator not
// divisible by f while pole > 0).
struct MeromorphicGerm {
  Polynomial numerator;
  unsigned pole;
  bool was_auto_reduced = false; // input had an f factor stripped

  MeromorphicGerm(Polynomial h, unsigned k) : numerator(std::move(h)), pole(k) {}
};

// Strips f-divisibility from the numerator, lowering the pole.
MeromorphicGerm reduced_germ(Polynomial h, unsigned pole, const SingularityProfile& profile);

// Formal derivative of s = h/f^k in variable i:
// (d_i h * f - k h d_i f) / f^{k+1}, returned reduced.
MeromorphicGerm germ_derivative(const MeromorphicGerm& s, std::size_t i,
                                const SingularityProfile& profile);

struct LengthReport {
  unsigned hprime_dim = 0;
  FiltrationTable pole_dims;
  unsigned reduced_genus = 0;
  std::vector<unsigned> quotient_lengths; // entry l = length(D(1/f^{l+1})/L)
  // Composition series of O(*Z)_o: {O, L_Z, hprime_dim copies of delta_o}.
  unsigned total_length_including_O = 0; // 2 + hprime_dim
  unsigned length_quotient_by_O = 0;     // 1 + hprime_dim
};

// length(D(1/f^{l+1}) / L) = dim P_l H'.
unsigned length_power_quotient(const SingularityProfile& profile, int l);

// length of the Hodge-piece submodule quotient; F_l = P_l in scope.
unsigned length_hodge_quotient(const SingularityProfile& profile, int l);

// g = dim F_0 H' = #{b : l(b) = 1}.
unsigned reduced_genus(const SingularityProfile& profile);

LengthReport meromorphic_length_report(const SingularityProfile& profile, int l_max);

// True iff [h x^b dx / f^k] = 0 for every monomial b; the enumeration
// of test monomials is finite (Euler degree pins deg_w(b) per graded
// component of the numerator).
bool vilonen_membership(const MeromorphicGerm& s, const SingularityProfile& profile);

// True iff s lies in D(1/f^{l+1}): every test class has pole level <= l+1.
bool power_membership(const MeromorphicGerm& s, int l, const SingularityProfile& profile);

// nullopt means s is in L; otherwise the least l with
// power_membership(s, l), always <= n - 2.
std::optional<int> min_power_index(const MeromorphicGerm& s, const SingularityProfile& profile);

// length(D M / L) for M generated by the germs: dimension of the span
// in H' of all test classes. Throws GenericAgreementViolated unless
// some generator has pole >= 1 after reduction.
unsigned submodule_length(const std::vector<MeromorphicGerm>& gens,
                          const SingularityProfile& profile);

// The algebraic case: verifies the ideal (g, d_1 g, ..., d_n g) is
// supported only at the origin, then returns the local report (throws
// MultipleOrNonIsolatedSingularities otherwise).
LengthReport algebraic_report(const Polynomial& g, int l_max);

} // namespace singlen

#endif
