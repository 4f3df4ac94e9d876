#include "singlen/derham.hpp"

#include "singlen/errors.hpp"

namespace singlen {

Rational euler_degree(const Polynomial& a, int pole, const SingularityProfile& profile) {
  Rational deg = 0;
  if (!is_weighted_homogeneous(a, profile.w, &deg))
    throw DomainError("euler_degree: polynomial is not w-homogeneous");
  return deg + profile.weight_sum - Rational(pole);
}

CohomologyClass reduce_class(const Polynomial& a, int pole, const SingularityProfile& profile) {
  if (pole < 1) throw DomainError("reduce_class: pole order must be >= 1");
  CohomologyClass out;
  // Only the Euler-degree-0 component survives at each level.
  Polynomial cur = graded_component(a, profile.w, Rational(pole) - profile.weight_sum);
  for (int level = pole; level >= 1; --level) {
    if (cur.is_zero()) break;
    DivisionResult div = normal_form_with_cofactors(cur, *profile.jacobian_gb);
    for (const auto& [m, c] : div.remainder.terms()) {
      auto [it, inserted] = out.coeffs.emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.coeffs.erase(it);
      }
    }
    if (level == 1) break;
    Polynomial next(profile.n);
    for (std::size_t i = 0; i < profile.n; ++i) next += div.cofactors[i].derivative(i);
    cur = graded_component(next * Rational(1, static_cast<unsigned long>(level - 1)),
                           profile.w, Rational(level - 1) - profile.weight_sum);
  }
  return out;
}

bool class_is_zero(const CohomologyClass& c) { return c.is_zero(); }

std::optional<int> max_pole_level(const CohomologyClass& c, const SingularityProfile& profile) {
  if (c.is_zero()) return std::nullopt;
  int best = 0;
  for (const auto& [beta, coeff] : c.coeffs) {
    Rational l = profile.spectral_value(beta);
    int level = static_cast<int>(to_long(l));
    if (level > best) best = level;
  }
  return best;
}

FiltrationTable pole_filtration_dims(const SingularityProfile& profile, int l_max) {
  if (l_max < 0) throw DomainError("pole_filtration_dims: l_max must be >= 0");
  FiltrationTable t;
  for (const auto& [beta, l] : profile.spectral)
    if (is_integer(l)) ++t.hprime_dim;
  t.dims.resize(static_cast<std::size_t>(l_max) + 1, 0);
  for (int l = 0; l <= l_max; ++l) {
    unsigned count = 0;
    for (const auto& [beta, lv] : profile.spectral)
      if (is_integer(lv) && cmp(lv, Rational(l + 1)) <= 0) ++count;
    t.dims[static_cast<std::size_t>(l)] = count;
  }
  return t;
}

} // namespace singlen
