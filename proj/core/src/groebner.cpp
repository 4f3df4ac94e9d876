#include "singlen/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "singlen/errors.hpp"

namespace singlen {

namespace {

// Working representation inside the division/Buchberger loops: terms
// sorted by the active order so the leading term is *rbegin().
using OrderedTerms = std::map<Monomial, Rational, TermOrder::Less>;

OrderedTerms to_ordered(const Polynomial& p, const TermOrder& order) {
  OrderedTerms t(TermOrder::Less{&order});
  for (const auto& [m, c] : p.terms()) t.emplace(m, c);
  return t;
}

Polynomial to_poly(const OrderedTerms& t, std::size_t n) {
  Polynomial p(n);
  for (const auto& [m, c] : t) p.add_term(m, c);
  return p;
}

void axpy(OrderedTerms& dst, const Monomial& m, const Rational& c, const Polynomial& p) {
  // dst += c * x^m * p
  for (const auto& [pm, pc] : p.terms()) {
    Monomial key = pm * m;
    Rational add = pc * c;
    auto [it, inserted] = dst.emplace(key, add);
    if (!inserted) {
      it->second += add;
      if (it->second == 0) dst.erase(it);
    }
  }
}

struct WorkItem {
  Polynomial poly;                  // monic
  std::vector<Polynomial> row;      // poly = sum row[j] * gens[j]
  Monomial lead;
};

Monomial leading_monomial(const Polynomial& p, const TermOrder& order) {
  auto it = p.terms().begin();
  Monomial best = it->first;
  for (++it; it != p.terms().end(); ++it)
    if (order.less(best, it->first)) best = it->first;
  return best;
}

void make_monic(WorkItem& item, const TermOrder& order) {
  item.lead = leading_monomial(item.poly, order);
  Rational lc = item.poly.coeff(item.lead);
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    item.poly = item.poly * inv;
    for (auto& r : item.row) r = r * inv;
  }
}

// Full reduction of p (with cofactor row over the originals) by the
// current basis items. Returns the remainder item; remainder may be zero.
WorkItem reduce_full(Polynomial p, std::vector<Polynomial> row,
                     const std::vector<WorkItem>& basis, const TermOrder& order,
                     std::size_t n) {
  OrderedTerms work = to_ordered(p, order);
  OrderedTerms rem(TermOrder::Less{&order});
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial t = top->first;
    const Rational c = top->second;
    bool reduced = false;
    for (const auto& b : basis) {
      if (!b.lead.divides(t)) continue;
      Monomial q = t / b.lead;
      axpy(work, q, -c, b.poly);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (b.row[j].is_zero()) continue;
        row[j] += b.row[j] * Polynomial::monomial(q, -c);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.emplace(t, c);
      work.erase(top);
    }
  }
  WorkItem out{to_poly(rem, n), std::move(row), Monomial(n)};
  return out;
}

} // namespace

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, std::vector<Polynomial> basis,
                             std::vector<std::vector<Polynomial>> transform, TermOrder order)
    : generators_(std::move(generators)),
      basis_(std::move(basis)),
      transform_(std::move(transform)),
      order_(std::move(order)) {
  leading_.reserve(basis_.size());
  for (const auto& b : basis_) leading_.push_back(leading_monomial(b, order_));
}

std::size_t GroebnerBasis::nvars() const {
  return generators_.empty() ? 0 : generators_.front().nvars();
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order) {
  if (gens.empty()) throw DomainError("buchberger: empty generator list");
  const std::size_t n = gens.front().nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) throw DomainError("buchberger: variable-count mismatch");

  std::vector<WorkItem> basis;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    WorkItem item{gens[j], std::vector<Polynomial>(gens.size(), Polynomial(n)), Monomial(n)};
    item.row[j] = Polynomial::constant(n, Rational(1));
    make_monic(item, order);
    basis.push_back(std::move(item));
  }
  if (basis.empty()) throw DomainError("buchberger: all generators are zero");

  // Pair queue under normal selection (increasing lcm).
  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<std::pair<std::size_t, std::size_t>> done;
  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      queue.push_back({Monomial::lcm(basis[i].lead, basis[k].lead), i, k});
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair pr = *it;
    queue.erase(it);
    done.insert({pr.i, pr.j});

    // Product criterion: coprime leading terms.
    Monomial prod = basis[pr.i].lead * basis[pr.j].lead;
    if (pr.lcm == prod) continue;
    // Chain criterion: some k with lead_k | lcm and both (i,k),(j,k) done.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].lead.divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
    }
    if (skip) continue;

    // S-polynomial with cofactor tracking.
    Monomial qi = pr.lcm / basis[pr.i].lead;
    Monomial qj = pr.lcm / basis[pr.j].lead;
    Polynomial s = basis[pr.i].poly * Polynomial::monomial(qi, Rational(1)) -
                   basis[pr.j].poly * Polynomial::monomial(qj, Rational(1));
    std::vector<Polynomial> row(gens.size(), Polynomial(n));
    for (std::size_t t = 0; t < gens.size(); ++t) {
      row[t] = basis[pr.i].row[t] * Polynomial::monomial(qi, Rational(1)) -
               basis[pr.j].row[t] * Polynomial::monomial(qj, Rational(1));
    }
    WorkItem rem = reduce_full(std::move(s), std::move(row), basis, order, n);
    if (rem.poly.is_zero()) continue;
    make_monic(rem, order);
    basis.push_back(std::move(rem));
    push_pairs(basis.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<WorkItem> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lead.divides(basis[i].lead)) {
        // On equal leads keep the earlier element.
        if (basis[j].lead == basis[i].lead && j > i) continue;
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce each element against the others (auto-reduction).
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<WorkItem> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    WorkItem red =
        reduce_full(minimal[i].poly, minimal[i].row, others, order, n);
    make_monic(red, order);
    minimal[i] = std::move(red);
  }

  std::sort(minimal.begin(), minimal.end(), [&order](const WorkItem& a, const WorkItem& b) {
    return order.less(a.lead, b.lead);
  });

  std::vector<Polynomial> out_basis;
  std::vector<std::vector<Polynomial>> transform;
  for (auto& item : minimal) {
    out_basis.push_back(std::move(item.poly));
    transform.push_back(std::move(item.row));
  }
  return GroebnerBasis(gens, std::move(out_basis), std::move(transform), order);
}

DivisionResult normal_form_with_cofactors(const Polynomial& p, const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars();
  if (p.nvars() != n) throw DomainError("normal_form: variable-count mismatch");
  const TermOrder& order = gb.order();
  OrderedTerms work = to_ordered(p, order);
  OrderedTerms rem(TermOrder::Less{&order});
  // Cofactors against the reduced basis first.
  std::vector<Polynomial> basis_cof(gb.basis().size(), Polynomial(n));
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial t = top->first;
    const Rational c = top->second;
    bool reduced = false;
    for (std::size_t b = 0; b < gb.basis().size(); ++b) {
      if (!gb.leading_monomials()[b].divides(t)) continue;
      Monomial q = t / gb.leading_monomials()[b];
      axpy(work, q, -c, gb.basis()[b]);
      basis_cof[b].add_term(q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.emplace(t, c);
      work.erase(top);
    }
  }
  // Express against the original generators through the transform.
  DivisionResult out{to_poly(rem, n),
                     std::vector<Polynomial>(gb.generators().size(), Polynomial(n))};
  for (std::size_t b = 0; b < gb.basis().size(); ++b) {
    if (basis_cof[b].is_zero()) continue;
    for (std::size_t j = 0; j < gb.generators().size(); ++j) {
      if (gb.transform()[b][j].is_zero()) continue;
      out.cofactors[j] += basis_cof[b] * gb.transform()[b][j];
    }
  }
  return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars();
  if (p.nvars() != n) throw DomainError("normal_form: variable-count mismatch");
  const TermOrder& order = gb.order();
  OrderedTerms work = to_ordered(p, order);
  OrderedTerms rem(TermOrder::Less{&order});
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial t = top->first;
    const Rational c = top->second;
    bool reduced = false;
    for (std::size_t b = 0; b < gb.basis().size(); ++b) {
      if (!gb.leading_monomials()[b].divides(t)) continue;
      axpy(work, t / gb.leading_monomials()[b], -c, gb.basis()[b]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.emplace(t, c);
      work.erase(top);
    }
  }
  return to_poly(rem, n);
}

std::optional<std::vector<Monomial>> quotient_basis(const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars();
  const auto& leads = gb.leading_monomials();
  for (const auto& lm : leads)
    if (lm.is_one()) return std::vector<Monomial>{}; // unit ideal
  // Finite iff each variable has a pure power among the leading terms.
  std::vector<unsigned> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& lm : leads) {
      bool pure = lm.e[i] > 0;
      for (std::size_t k = 0; k < n && pure; ++k)
        if (k != i && lm.e[k] != 0) pure = false;
      if (pure) {
        found = true;
        if (bound[i] == 0 || lm.e[i] < bound[i]) bound[i] = lm.e[i];
      }
    }
    if (!found) return std::nullopt;
  }
  std::vector<Monomial> out;
  Monomial cur(n);
  // Enumerate the box below the pure-power bounds, filter by staircase.
  std::size_t total = 1;
  for (unsigned b : bound) total *= b;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      cur.e[i] = static_cast<unsigned>(rest % bound[i]);
      rest /= bound[i];
    }
    bool in_ideal = false;
    for (const auto& lm : leads)
      if (lm.divides(cur)) {
        in_ideal = true;
        break;
      }
    if (!in_ideal) out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool supported_only_at_origin(const GroebnerBasis& gb) {
  auto qb = quotient_basis(gb);
  if (!qb) return false;
  const std::size_t n = gb.nvars();
  const unsigned dim = static_cast<unsigned>(qb->size());
  for (std::size_t i = 0; i < n; ++i) {
    Monomial power(n);
    power.e[i] = dim;
    if (!normal_form(Polynomial::monomial(power, Rational(1)), gb).is_zero()) return false;
  }
  return true;
}

bool supported_only_at_origin(const std::vector<Polynomial>& gens, const TermOrder& order) {
  bool all_zero = true;
  for (const auto& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (all_zero) return false;
  return supported_only_at_origin(buchberger(gens, order));
}

} // namespace singlen
