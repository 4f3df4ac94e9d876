#ifndef SINGLEN_RATIONAL_HPP
#define SINGLEN_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace singlen {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) { return q.get_num().get_si(); }

// "p" or "p/q", always in lowest terms.
inline std::string rational_str(const Rational& q) { return q.get_str(); }

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

} // namespace singlen

#endif
