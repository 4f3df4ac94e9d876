#include "singlen/oracle.hpp"

#include <algorithm>
#include <string>

#include "singlen/errors.hpp"

namespace singlen {

QVector TruncatedComplex::coordinates(const Polynomial& a, int k,
                                      const SingularityProfile& profile) const {
  QVector v(basis_n.size(), Rational(0));
  Rational target = Rational(k) - profile.weight_sum;
  for (const auto& [m, c] : a.terms()) {
    if (weighted_degree(m, profile.w) != target) continue; // exact stratum only
    auto it = index_n.find(NFormGen{m, k});
    if (it == index_n.end()) throw DomainError("oracle: form outside the truncated basis");
    v[it->second] = c;
  }
  return v;
}

TruncatedComplex build_truncated_complex(const SingularityProfile& profile, int pole_cap,
                                         const ComplexOptions& opts) {
  if (pole_cap < 1) throw DomainError("oracle: pole cap must be >= 1");
  const std::size_t n = profile.n;
  const Rational sw = profile.weight_sum;
  const int nm1_cap = opts.nminus1_cap >= 0 ? opts.nminus1_cap : pole_cap - 1;

  TruncatedComplex cx;
  cx.pole_cap = pole_cap;

  // n-form generators m dx / f^j in the chosen Euler stratum:
  // deg_w(m) = j - sum(w) + offset.
  for (int j = 0; j <= pole_cap; ++j) {
    Rational target = Rational(j) - sw + opts.euler_offset;
    for (const auto& m : monomials_of_weighted_degree(n, profile.w, target)) {
      cx.index_n.emplace(NFormGen{m, j}, cx.basis_n.size());
      cx.basis_n.push_back(NFormGen{m, j});
    }
  }

  // (n-1)-form generators m w^(i) / f^j with
  // deg_w(m) = j + w_i - sum(w) + offset, and their differentials
  // d(m w^(i) / f^j) = d_i(m)/f^j dx - j m d_i(f)/f^{j+1} dx.
  const auto partials = jacobian_generators(profile.f);
  for (int j = 0; j <= nm1_cap; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational target = Rational(j) + profile.w.w[i] - sw + opts.euler_offset;
      for (const auto& m : monomials_of_weighted_degree(n, profile.w, target)) {
        QVector col(cx.basis_n.size(), Rational(0));
        Polynomial gen = Polynomial::monomial(m, Rational(1));
        Polynomial low = gen.derivative(i);
        for (const auto& [mm, cc] : low.terms())
          col[cx.index_n.at(NFormGen{mm, j})] = cc;
        if (j > 0) {
          Polynomial high = gen * partials[i] * Rational(-j);
          for (const auto& [mm, cc] : high.terms())
            col[cx.index_n.at(NFormGen{mm, j + 1})] += cc;
        }
        cx.basis_nminus1.push_back(NMinus1FormGen{m, j, i});
        cx.d_columns.push_back(std::move(col));
      }
    }
  }
  return cx;
}

OracleSession::OracleSession(const SingularityProfile& profile, int pole_cap)
    : profile_(profile),
      complex_(build_truncated_complex(profile, pole_cap)),
      image_(complex_.basis_n.size()) {
  for (const auto& col : complex_.d_columns) image_.insert(col);
}

unsigned OracleSession::hprime_dim() const {
  return static_cast<unsigned>(complex_.basis_n.size() - image_.rank());
}

FiltrationTable OracleSession::pole_dims(int l_max) const {
  FiltrationTable t;
  t.hprime_dim = hprime_dim();
  t.dims.resize(static_cast<std::size_t>(l_max) + 1, 0);
  RowSpan span = image_;
  const std::size_t base = image_.rank();
  std::size_t idx = 0;
  for (int l = 0; l <= l_max; ++l) {
    // Adjoin the unit vectors of all generators with pole <= l + 1.
    while (idx < complex_.basis_n.size() && complex_.basis_n[idx].pole <= l + 1) {
      QVector unit(complex_.basis_n.size(), Rational(0));
      unit[idx] = 1;
      span.insert(std::move(unit));
      ++idx;
    }
    t.dims[static_cast<std::size_t>(l)] = static_cast<unsigned>(span.rank() - base);
  }
  return t;
}

bool OracleSession::class_vanishes(const Polynomial& a, int k) const {
  if (k > complex_.pole_cap) throw DomainError("oracle: pole order exceeds cap");
  return image_.contains(complex_.coordinates(a, k, profile_));
}

namespace {

void check_stabilized(const SingularityProfile& profile, int pole_cap, unsigned dim_at_cap) {
  OracleSession prev(profile, pole_cap - 1);
  if (prev.hprime_dim() != dim_at_cap)
    throw NotStabilizedError("oracle dimensions differ between pole caps " +
                             std::to_string(pole_cap - 1) + " and " + std::to_string(pole_cap));
}

} // namespace

unsigned oracle_hprime_dim(const SingularityProfile& profile, int pole_cap) {
  if (pole_cap < static_cast<int>(profile.n))
    throw DomainError("oracle: pole cap must be >= n");
  OracleSession s(profile, pole_cap);
  unsigned dim = s.hprime_dim();
  check_stabilized(profile, pole_cap, dim);
  return dim;
}

FiltrationTable oracle_pole_dims(const SingularityProfile& profile, int pole_cap, int l_max) {
  if (pole_cap < static_cast<int>(profile.n))
    throw DomainError("oracle: pole cap must be >= n");
  OracleSession s(profile, pole_cap);
  FiltrationTable t = s.pole_dims(l_max);
  check_stabilized(profile, pole_cap, t.hprime_dim);
  OracleSession prev(profile, pole_cap - 1);
  FiltrationTable tp = prev.pole_dims(std::min(l_max, pole_cap - 2));
  for (std::size_t l = 0; l < tp.dims.size(); ++l)
    if (tp.dims[l] != t.dims[l])
      throw NotStabilizedError("oracle filtration dims not stabilized");
  return t;
}

bool oracle_class_vanishes(const Polynomial& a, int k, const SingularityProfile& profile,
                           int pole_cap) {
  if (pole_cap < static_cast<int>(profile.n) || pole_cap < k)
    throw DomainError("oracle: pole cap must be >= max(k, n)");
  OracleSession s(profile, pole_cap);
  check_stabilized(profile, pole_cap, s.hprime_dim());
  return s.class_vanishes(a, k);
}

} // namespace singlen
