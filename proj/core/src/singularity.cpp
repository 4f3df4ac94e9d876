#include "singlen/singularity.hpp"

#include <algorithm>

#include "singlen/errors.hpp"
#include "singlen/linalg.hpp"

namespace singlen {

Rational SingularityProfile::spectral_value(const Monomial& beta) const {
  auto it = spectral.find(beta);
  if (it != spectral.end()) return it->second;
  Rational l = 0;
  for (std::size_t i = 0; i < n; ++i) l += Rational(beta.e[i] + 1) * w.w[i];
  return l;
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
  return out;
}

unsigned milnor_number(const Polynomial& f) {
  if (f.nvars() < 3) throw DomainError("n >= 3 is required");
  if (f.constant_term() != 0) throw DomainError("f(0) must vanish");
  auto gens = jacobian_generators(f);
  bool all_zero = true;
  for (const auto& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (all_zero) throw NonIsolatedError("Jacobian ideal is zero");
  TermOrder order = TermOrder::grevlex(f.nvars());
  GroebnerBasis gb = buchberger(gens, order);
  auto qb = quotient_basis(gb);
  if (!qb) throw NonIsolatedError("Milnor algebra is infinite-dimensional");
  if (!supported_only_at_origin(gb))
    throw NonIsolatedError("Jacobian ideal not supported only at the origin");
  return static_cast<unsigned>(qb->size());
}

std::optional<WeightVector> detect_weights(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("detect_weights: zero polynomial");
  const std::size_t n = f.nvars();
  QMatrix rows;
  QVector rhs;
  for (const auto& [m, c] : f.terms()) {
    QVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rational(m.e[i]);
    rows.push_back(std::move(row));
    rhs.push_back(Rational(1));
  }
  auto sol = solve_unique(std::move(rows), std::move(rhs));
  if (!sol) return std::nullopt; // inconsistent or underdetermined
  for (const auto& wi : *sol)
    if (sgn(wi) <= 0) return std::nullopt;
  WeightVector w;
  w.w = std::move(*sol);
  return w;
}

SingularityProfile build_profile(const Polynomial& f) {
  if (f.nvars() < 3) throw DomainError("n >= 3 is required");
  if (f.constant_term() != 0) throw DomainError("f(0) must vanish");

  auto gens = jacobian_generators(f);
  bool all_zero = true;
  for (const auto& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (all_zero) throw NonIsolatedError("Jacobian ideal is zero");

  // A positive-dimensional critical locus is reported before the weight
  // check (unit weights suffice for it); isolated-but-off-origin critical
  // points are only rejected afterwards, so inputs like x^4+y^4+z^4+xyz
  // surface the missing weight system rather than the distant critical
  // points.
  GroebnerBasis unit_gb = buchberger(gens, TermOrder::grevlex(f.nvars()));
  if (!quotient_basis(unit_gb))
    throw NonIsolatedError("Milnor algebra is infinite-dimensional");

  auto weights = detect_weights(f);
  if (!weights) throw NotQuasiHomogeneousError("no canonical positive weight system");

  if (!supported_only_at_origin(unit_gb))
    throw NonIsolatedError("singular locus is not {origin}");

  TermOrder order(*weights);
  auto gb = std::make_shared<GroebnerBasis>(buchberger(gens, order));
  auto qb = quotient_basis(*gb);
  if (!qb) throw NonIsolatedError("Milnor algebra is infinite-dimensional");

  SingularityProfile prof{f,
                          f.nvars(),
                          *weights,
                          weights->sum(),
                          static_cast<unsigned>(qb->size()),
                          std::move(*qb),
                          {},
                          gb,
                          order};
  for (const auto& beta : prof.basis) {
    Rational l = 0;
    for (std::size_t i = 0; i < prof.n; ++i) l += Rational(beta.e[i] + 1) * prof.w.w[i];
    prof.spectral.emplace(beta, std::move(l));
  }
  return prof;
}

} // namespace singlen
