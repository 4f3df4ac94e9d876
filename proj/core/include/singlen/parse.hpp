#ifndef SINGLEN_PARSE_HPP
#define SINGLEN_PARSE_HPP

#include <string>
#include <vector>

#include "singlen/polynomial.hpp"

namespace singlen {

// Grammar: rationals `a` or `a/b`, declared variable names, `+ - * ^`,
// parentheses; `^` takes a positive integer literal; explicit `*`
// between factors. Throws ParseError with position.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

std::string render_polynomial(const Polynomial& p, const std::vector<std::string>& variables);

// Meromorphic element "h" or "h/f^k" where the literal token f denotes
// the analyzed polynomial. Returns the numerator text and pole k.
struct ElementText {
  std::string numerator_text;
  unsigned pole = 0;
};
ElementText split_element(const std::string& text);

} // namespace singlen

#endif
