#include <cycres/cli/parser.hpp>

#include <cctype>
#include <map>

namespace cycres::cli {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  }
};

IntPolynomial parse_coeff_list(const std::string& text, std::size_t start) {
  Cursor c{text, start};
  if (!c.eat('[')) throw PolynomialParseError("expected '[' after coeffs=", c.i);
  std::vector<BigInt> coeffs;
  if (!c.eat(']')) {
    while (true) {
      bool neg = false;
      if (c.eat('-'))
        neg = true;
      else
        c.eat('+');
      std::string d = c.digits();
      if (d.empty()) throw PolynomialParseError("expected an integer", c.i);
      BigInt v(d);
      coeffs.push_back(neg ? BigInt(-v) : v);
      if (c.eat(']')) break;
      if (!c.eat(',')) throw PolynomialParseError("expected ',' or ']'", c.i);
    }
  }
  if (!c.done()) throw PolynomialParseError("trailing input after ']'", c.i);
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial parse_polynomial(const std::string& text) {
  // alternative form: coeffs=[c0,c1,...]
  {
    Cursor c{text, 0};
    c.skip_ws();
    if (text.compare(c.i, 7, "coeffs=") == 0)
      return parse_coeff_list(text, c.i + 7);
  }

  Cursor c{text, 0};
  std::map<std::size_t, BigInt> terms;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.eat('-'))
      sign = -1;
    else if (c.eat('+')) {
      if (first) throw PolynomialParseError("unexpected leading '+'", c.i);
    } else if (!first) {
      throw PolynomialParseError("expected '+' or '-' between terms", c.i);
    }
    first = false;

    std::string d = c.digits();
    bool has_coeff = !d.empty();
    BigInt coeff = has_coeff ? BigInt(d) : BigInt(1);
    if (sign < 0) coeff = -coeff;

    std::size_t exp = 0;
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == 't') {
      ++c.i;
      exp = 1;
      if (c.eat('^')) {
        std::string e = c.digits();
        if (e.empty()) throw PolynomialParseError("expected an exponent after '^'", c.i);
        exp = std::stoul(e);
      }
    } else if (!has_coeff) {
      throw PolynomialParseError("expected a coefficient or 't'", c.i);
    }
    terms[exp] += coeff;
  }
  if (first) throw PolynomialParseError("empty polynomial", 0);

  std::size_t deg = 0;
  for (const auto& [e, v] : terms)
    if (v != 0) deg = std::max(deg, e);
  std::vector<BigInt> coeffs(deg + 1, BigInt(0));
  for (const auto& [e, v] : terms)
    if (e <= deg) coeffs[e] = v;
  return IntPolynomial(std::move(coeffs));
}

std::string format_polynomial(const IntPolynomial& f) { return f.to_string(); }

}  // namespace cycres::cli
