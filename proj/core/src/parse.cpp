#include "singlen/parse.hpp"

#include <cctype>
#include <sstream>

#include "singlen/errors.hpp"

namespace singlen {

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  Integer read_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", pos);
    return Integer(text.substr(start, pos - start));
  }

  Rational read_rational() {
    Integer num = read_uint();
    if (accept('/')) {
      Integer den = read_uint();
      if (den == 0) throw ParseError("zero denominator", pos);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  std::string read_ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  Polynomial primary() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial p = expression();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(vars.size(), read_rational());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      std::string name = read_ident();
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return Polynomial::variable(vars.size(), i);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError("unexpected character", pos);
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("exponent must be a positive integer", pos);
      Integer e = read_uint();
      if (e == 0) throw ParseError("exponent must be a positive integer", pos);
      if (!e.fits_uint_p()) throw ParseError("exponent too large", pos);
      unsigned long k = e.get_ui();
      Polynomial out = Polynomial::constant(vars.size(), Rational(1));
      for (unsigned long i = 0; i < k; ++i) out = out * base;
      return out;
    }
    return base;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Polynomial expression() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial p = term();
    if (negate) p = -p;
    while (true) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        break;
    }
    return p;
  }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  if (variables.empty()) throw ParseError("no variables declared", 0);
  Parser parser{text, variables};
  Polynomial p = parser.expression();
  if (!parser.at_end()) throw ParseError("trailing input", parser.pos);
  return p;
}

std::string render_polynomial(const Polynomial& p, const std::vector<std::string>& variables) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Iterate in descending map order so the output is canonical.
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool printed_coeff = false;
    if (m.is_one() || abs_c != 1) {
      os << abs_c.get_str();
      printed_coeff = true;
    }
    bool any_var = false;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m.e[i] == 0) continue;
      if (printed_coeff || any_var) os << "*";
      os << variables[i];
      if (m.e[i] > 1) os << "^" << m.e[i];
      any_var = true;
    }
  }
  return os.str();
}

ElementText split_element(const std::string& text) {
  ElementText out;
  // Trailing "/ f" or "/ f ^ k" denotes division by the analyzed
  // polynomial; everything before it is the numerator.
  std::size_t i = text.size();
  auto skip_back_ws = [&](std::size_t j) {
    while (j > 0 && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    return j;
  };
  std::size_t j = skip_back_ws(i);
  unsigned long k = 1;
  bool has_exp = false;
  std::size_t digits_end = j;
  while (j > 0 && std::isdigit(static_cast<unsigned char>(text[j - 1]))) --j;
  if (j < digits_end) {
    std::size_t j2 = skip_back_ws(j);
    if (j2 > 0 && text[j2 - 1] == '^') {
      has_exp = true;
      k = std::stoul(text.substr(j, digits_end - j));
      j = skip_back_ws(j2 - 1);
    } else {
      j = digits_end;
    }
  }
  if (!has_exp) j = skip_back_ws(j);
  if (j > 0 && text[j - 1] == 'f' &&
      (j == 1 || !(std::isalnum(static_cast<unsigned char>(text[j - 2])) || text[j - 2] == '_'))) {
    std::size_t j3 = skip_back_ws(j - 1);
    if (j3 > 0 && text[j3 - 1] == '/') {
      out.numerator_text = text.substr(0, j3 - 1);
      out.pole = static_cast<unsigned>(k);
      if (out.numerator_text.find_first_not_of(" \t") == std::string::npos)
        throw ParseError("empty numerator in element", 0);
      return out;
    }
  }
  out.numerator_text = text;
  out.pole = 0;
  return out;
}

} // namespace singlen
