#ifndef SINGLEN_ORACLE_HPP
#define SINGLEN_ORACLE_HPP

#include <map>
#include <vector>

#include "singlen/derham.hpp"
#include "singlen/linalg.hpp"
#include "singlen/singularity.hpp"

namespace singlen {

// Brute-force referee: exact linear algebra on the truncated graded de
// Rham complex. n-form generators are m dx / f^j (j <= pole_cap),
// (n-1)-form generators are m w^(i) / f^j (j <= nminus1_cap) with
// dx_i ^ w^(i) = dx, both restricted to one Euler-degree stratum
// (degree 0 unless euler_offset is set; nonzero strata are used only as
// a construction smoke test, their cohomology vanishes).
struct ComplexOptions {
  Rational euler_offset = 0;
  int nminus1_cap = -1; // default pole_cap - 1
};

struct NFormGen {
  Monomial m;
  int pole;
  bool operator<(const NFormGen& o) const {
    return pole != o.pole ? pole < o.pole : m < o.m;
  }
};

struct NMinus1FormGen {
  Monomial m;
  int pole;
  std::size_t dir; // index i of the contraction pattern w^(i)
};

struct TruncatedComplex {
  int pole_cap = 0;
  std::vector<NFormGen> basis_n;
  std::map<NFormGen, std::size_t> index_n;
  std::vector<NMinus1FormGen> basis_nminus1;
  QMatrix d_columns; // column c = image of basis_nminus1[c] in basis_n coords

  // Coordinates of [A dx / f^k] in basis_n (components of nonzero Euler
  // degree are dropped as exact).
  QVector coordinates(const Polynomial& a, int k, const SingularityProfile& profile) const;
};

TruncatedComplex build_truncated_complex(const SingularityProfile& profile, int pole_cap,
                                         const ComplexOptions& opts = {});

// Reusable elimination state for repeated oracle queries at one cap.
class OracleSession {
public:
  OracleSession(const SingularityProfile& profile, int pole_cap);

  unsigned hprime_dim() const;
  FiltrationTable pole_dims(int l_max) const;
  bool class_vanishes(const Polynomial& a, int k) const;
  const TruncatedComplex& complex() const { return complex_; }

private:
  const SingularityProfile& profile_;
  TruncatedComplex complex_;
  RowSpan image_; // column span of d
};

// Free-function surface; all verify stabilization from K-1 to K and
// throw NotStabilizedError on mismatch.
unsigned oracle_hprime_dim(const SingularityProfile& profile, int pole_cap);
FiltrationTable oracle_pole_dims(const SingularityProfile& profile, int pole_cap, int l_max);
bool oracle_class_vanishes(const Polynomial& a, int k, const SingularityProfile& profile,
                           int pole_cap);

} // namespace singlen

#endif
