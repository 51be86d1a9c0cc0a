#pragma once

#include <cycres/errors.hpp>
#include <cycres/int_polynomial.hpp>

#include <cstddef>
#include <string>

namespace cycres::cli {

class PolynomialParseError : public DomainError {
 public:
  PolynomialParseError(const std::string& what, std::size_t position)
      : DomainError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: signed terms `[+|-] [coeff] [t [^ exp]]` over the variable t,
// arbitrary order, repeated exponents summed; or `coeffs=[c0,c1,...]`
// ascending.  Coefficients are arbitrary-precision.
IntPolynomial parse_polynomial(const std::string& text);

// Canonical text form; parse_polynomial(format_polynomial(f)) == f.
std::string format_polynomial(const IntPolynomial& f);

}  // namespace cycres::cli
