#include "singlen/order.hpp"

#include <algorithm>
#include <sstream>

#include "singlen/errors.hpp"

namespace singlen {

Rational weighted_degree(const Monomial& m, const WeightVector& w) {
  if (m.nvars() != w.size()) throw DomainError("weight/monomial length mismatch");
  Rational d = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (m.e[i]) d += w.w[i] * Rational(m.e[i]);
  return d;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  int c = ::cmp(weighted_degree(a, w_), weighted_degree(b, w_));
  if (c != 0) return c;
  // Reverse-lex tie-break: at the last differing exponent, the monomial
  // with the larger entry is the smaller one.
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

std::string TermOrder::description() const {
  std::ostringstream os;
  os << "wgrevlex(w=";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) os << ",";
    os << w_.w[i].get_str();
  }
  os << "; ties reverse-lex, precedence x0>...>x" << (w_.size() - 1) << ")";
  return os.str();
}

std::map<Rational, Polynomial, RationalLess> graded_components(const Polynomial& p,
                                                               const WeightVector& w) {
  std::map<Rational, Polynomial, RationalLess> out;
  for (const auto& [m, c] : p.terms()) {
    Rational d = weighted_degree(m, w);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Polynomial(p.nvars())).first;
    it->second.add_term(m, c);
  }
  return out;
}

Polynomial graded_component(const Polynomial& p, const WeightVector& w, const Rational& d) {
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (weighted_degree(m, w) == d) out.add_term(m, c);
  return out;
}

bool is_weighted_homogeneous(const Polynomial& p, const WeightVector& w, Rational* deg) {
  bool first = true;
  Rational d = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational md = weighted_degree(m, w);
    if (first) {
      d = md;
      first = false;
    } else if (md != d) {
      return false;
    }
  }
  if (!first && deg) *deg = d;
  return true;
}

namespace {

void enumerate_rec(std::size_t i, std::size_t n, const WeightVector& w, const Rational& remaining,
                   Monomial& cur, std::vector<Monomial>& out) {
  if (i == n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  // Last variable: the remainder must be an exact multiple of w_i.
  Rational q = remaining / w.w[i];
  if (i + 1 == n) {
    if (sgn(q) >= 0 && is_integer(q) && q.get_num().fits_uint_p()) {
      cur.e[i] = static_cast<unsigned>(q.get_num().get_ui());
      out.push_back(cur);
      cur.e[i] = 0;
    }
    return;
  }
  long max_e = 0;
  if (sgn(q) > 0) {
    Integer fl = q.get_num() / q.get_den();
    max_e = fl.get_si();
  } else if (sgn(q) < 0) {
    return;
  }
  for (long e = 0; e <= max_e; ++e) {
    cur.e[i] = static_cast<unsigned>(e);
    enumerate_rec(i + 1, n, w, remaining - w.w[i] * Rational(e), cur, out);
  }
  cur.e[i] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_weighted_degree(std::size_t n, const WeightVector& w,
                                                   const Rational& target) {
  std::vector<Monomial> out;
  if (sgn(target) < 0) return out;
  Monomial cur(n);
  enumerate_rec(0, n, w, target, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace singlen
