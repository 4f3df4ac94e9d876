#ifndef SINGLEN_MONOMIAL_HPP
#define SINGLEN_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace singlen {

// Exponent vector of a monomial in a fixed number of variables.
struct Monomial {
  std::vector<unsigned> e;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e(n, 0) {}
  Monomial(std::initializer_list<unsigned> init) : e(init) {}

  std::size_t nvars() const { return e.size(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
  }

  bool is_one() const {
    for (unsigned x : e)
      if (x) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + m.e[i];
    return r;
  }

  // Quotient this / m; caller guarantees m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - m.e[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i)
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }

  auto operator<=>(const Monomial&) const = default;
};

} // namespace singlen

#endif
