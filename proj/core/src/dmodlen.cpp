#include "singlen/dmodlen.hpp"

#include <set>

#include "singlen/errors.hpp"
#include "singlen/linalg.hpp"

namespace singlen {

namespace {

// Exact division by f: h = q * f with zero remainder, or nullopt.
std::optional<Polynomial> divide_by_f(const Polynomial& h, const SingularityProfile& profile) {
  GroebnerBasis fgb = buchberger({profile.f}, profile.order);
  DivisionResult div = normal_form_with_cofactors(h, fgb);
  if (!div.remainder.is_zero()) return std::nullopt;
  return div.cofactors[0];
}

// Test monomials for the membership enumeration: for each graded
// component degree d of h only b with deg_w(b) = k - sum(w) - d can
// yield a nonzero class.
std::set<Monomial> test_monomials(const Polynomial& h, unsigned k,
                                  const SingularityProfile& profile) {
  std::set<Monomial> out;
  for (const auto& [d, comp] : graded_components(h, profile.w)) {
    Rational target = Rational(k) - profile.weight_sum - d;
    for (auto& m : monomials_of_weighted_degree(profile.n, profile.w, target))
      out.insert(std::move(m));
  }
  return out;
}

QVector class_coordinates(const CohomologyClass& c,
                          const std::map<Monomial, std::size_t>& index) {
  QVector v(index.size(), Rational(0));
  for (const auto& [beta, coeff] : c.coeffs) v[index.at(beta)] = coeff;
  return v;
}

} // namespace

MeromorphicGerm reduced_germ(Polynomial h, unsigned pole, const SingularityProfile& profile) {
  MeromorphicGerm s(std::move(h), pole);
  while (s.pole > 0 && !s.numerator.is_zero()) {
    auto q = divide_by_f(s.numerator, profile);
    if (!q) break;
    s.numerator = std::move(*q);
    s.pole -= 1;
    s.was_auto_reduced = true;
  }
  return s;
}

MeromorphicGerm germ_derivative(const MeromorphicGerm& s, std::size_t i,
                                const SingularityProfile& profile) {
  if (i >= profile.n) throw DomainError("germ_derivative: index out of range");
  if (s.pole == 0) return reduced_germ(s.numerator.derivative(i), 0, profile);
  Polynomial num = s.numerator.derivative(i) * profile.f -
                   s.numerator * profile.f.derivative(i) * Rational(s.pole);
  return reduced_germ(std::move(num), s.pole + 1, profile);
}

unsigned length_power_quotient(const SingularityProfile& profile, int l) {
  if (l < 0) throw DomainError("length_power_quotient: l must be >= 0");
  return pole_filtration_dims(profile, l).dims.back();
}

unsigned length_hodge_quotient(const SingularityProfile& profile, int l) {
  // F_l = P_l in the quasi-homogeneous scope.
  return length_power_quotient(profile, l);
}

unsigned reduced_genus(const SingularityProfile& profile) {
  return length_power_quotient(profile, 0);
}

LengthReport meromorphic_length_report(const SingularityProfile& profile, int l_max) {
  LengthReport r;
  r.pole_dims = pole_filtration_dims(profile, l_max);
  r.hprime_dim = r.pole_dims.hprime_dim;
  r.reduced_genus = r.pole_dims.dims.front();
  r.quotient_lengths = r.pole_dims.dims;
  r.total_length_including_O = 2 + r.hprime_dim;
  r.length_quotient_by_O = 1 + r.hprime_dim;
  return r;
}

bool vilonen_membership(const MeromorphicGerm& s, const SingularityProfile& profile) {
  if (s.pole == 0 || s.numerator.is_zero()) return true;
  for (const auto& beta : test_monomials(s.numerator, s.pole, profile)) {
    Polynomial a = s.numerator * Polynomial::monomial(beta, Rational(1));
    if (!reduce_class(a, static_cast<int>(s.pole), profile).is_zero()) return false;
  }
  return true;
}

bool power_membership(const MeromorphicGerm& s, int l, const SingularityProfile& profile) {
  if (l < 0) throw DomainError("power_membership: l must be >= 0");
  if (s.pole == 0 || s.numerator.is_zero()) return true;
  for (const auto& beta : test_monomials(s.numerator, s.pole, profile)) {
    Polynomial a = s.numerator * Polynomial::monomial(beta, Rational(1));
    auto level = max_pole_level(reduce_class(a, static_cast<int>(s.pole), profile), profile);
    if (level && *level > l + 1) return false;
  }
  return true;
}

std::optional<int> min_power_index(const MeromorphicGerm& s, const SingularityProfile& profile) {
  if (vilonen_membership(s, profile)) return std::nullopt;
  const int l_bound = static_cast<int>(profile.n) - 2;
  for (int l = 0; l <= l_bound; ++l)
    if (power_membership(s, l, profile)) return l;
  throw std::logic_error("min_power_index: no l <= n-2 admits membership");
}

unsigned submodule_length(const std::vector<MeromorphicGerm>& gens,
                          const SingularityProfile& profile) {
  bool has_pole = false;
  for (const auto& g : gens)
    if (g.pole >= 1 && !g.numerator.is_zero()) has_pole = true;
  if (!has_pole)
    throw GenericAgreementViolated(
        "no generator has a genuine pole; D.M does not agree generically with O(*Z)");

  std::map<Monomial, std::size_t> index;
  for (const auto& [beta, l] : profile.spectral)
    if (is_integer(l)) index.emplace(beta, index.size());

  RowSpan span(index.size());
  for (const auto& g : gens) {
    if (g.pole == 0 || g.numerator.is_zero()) continue;
    for (const auto& beta : test_monomials(g.numerator, g.pole, profile)) {
      Polynomial a = g.numerator * Polynomial::monomial(beta, Rational(1));
      CohomologyClass c = reduce_class(a, static_cast<int>(g.pole), profile);
      if (!c.is_zero()) span.insert(class_coordinates(c, index));
    }
  }
  return static_cast<unsigned>(span.rank());
}

LengthReport algebraic_report(const Polynomial& g, int l_max) {
  if (g.nvars() < 3) throw DomainError("n >= 3 is required");
  if (g.constant_term() != 0) throw DomainError("g(0) must vanish");
  std::vector<Polynomial> gens = jacobian_generators(g);
  gens.insert(gens.begin(), g);
  bool all_zero = true;
  for (const auto& p : gens)
    if (!p.is_zero()) all_zero = false;
  if (all_zero || !supported_only_at_origin(gens, TermOrder::grevlex(g.nvars())))
    throw MultipleOrNonIsolatedSingularities(
        "global singular support of {g = 0} is not {origin}");
  SingularityProfile profile = build_profile(g);
  return meromorphic_length_report(profile, l_max);
}

} // namespace singlen
