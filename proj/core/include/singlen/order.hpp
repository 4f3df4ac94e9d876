#ifndef SINGLEN_ORDER_HPP
#define SINGLEN_ORDER_HPP

#include <map>
#include <string>
#include <vector>

#include "singlen/monomial.hpp"
#include "singlen/polynomial.hpp"
#include "singlen/rational.hpp"

namespace singlen {

// Positive rational weights; attached to f they make every monomial of
// f weighted-homogeneous of degree 1.
struct WeightVector {
  std::vector<Rational> w;

  std::size_t size() const { return w.size(); }

  Rational sum() const {
    Rational s = 0;
    for (const auto& x : w) s += x;
    return s;
  }

  static WeightVector units(std::size_t n) {
    WeightVector v;
    v.w.assign(n, Rational(1));
    return v;
  }

  bool operator==(const WeightVector&) const = default;
};

Rational weighted_degree(const Monomial& m, const WeightVector& w);

// Weighted graded reverse-lexicographic order: compare weighted degree
// first, ties broken reverse-lexicographically with variable precedence
// x0 > x1 > ... > x_{n-1}. Global (1 is minimal) and multiplicative.
class TermOrder {
public:
  explicit TermOrder(WeightVector w) : w_(std::move(w)) {}
  static TermOrder grevlex(std::size_t n) { return TermOrder(WeightVector::units(n)); }

  const WeightVector& weights() const { return w_; }

  // <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  struct Less {
    const TermOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const {
      return order->less(a, b);
    }
  };
  Less cmp() const { return Less{this}; }

  std::string description() const;

private:
  WeightVector w_;
};

// Weighted-degree-d graded pieces of p; summing components recovers p.
std::map<Rational, Polynomial, RationalLess> graded_components(const Polynomial& p,
                                                               const WeightVector& w);

// The component of p of weighted degree d (zero polynomial if absent).
Polynomial graded_component(const Polynomial& p, const WeightVector& w, const Rational& d);

// True iff all terms share one weighted degree (stored in *deg); the
// zero polynomial is homogeneous of every degree (deg untouched).
bool is_weighted_homogeneous(const Polynomial& p, const WeightVector& w, Rational* deg);

// All monomials in n variables of exact weighted degree `target`
// (finite since all weights are positive). Sorted ascending.
std::vector<Monomial> monomials_of_weighted_degree(std::size_t n, const WeightVector& w,
                                                   const Rational& target);

} // namespace singlen

#endif
