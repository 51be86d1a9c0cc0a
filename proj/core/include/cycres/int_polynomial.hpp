#pragma once

#include <cycres/bigint.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace cycres {

// Exact integer polynomial.  Coefficients are stored ascending by degree
// (constant term first) and kept canonical: the last element of a nonempty
// sequence is nonzero, and the zero polynomial is the empty sequence.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(BigInt value);
  static IntPolynomial monomial(BigInt coeff, std::size_t degree);
  // t^n - 1
  static IntPolynomial power_minus_one(unsigned long n);

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const;
  // coefficient of t^i, zero beyond the degree
  const BigInt& coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator*(const BigInt& c) const;
  bool operator==(const IntPolynomial&) const = default;

  // multiplication by t^k
  IntPolynomial shifted_up(std::size_t k) const;
  // coefficient reversal t^deg * f(1/t); trailing zero coefficients of the
  // reversal are dropped by canonicalization
  IntPolynomial reversed() const;
  // f(t + a) by iterated synthetic Taylor shift
  IntPolynomial shifted_argument(const BigInt& a) const;
  // largest k with t^k | f (0 for f(0) != 0); zero polynomial is an error
  std::size_t order_at_zero() const;

  // renders like "t^2-3t+1"; the zero polynomial renders as "0"
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<BigInt> coeffs_;
};

// Exact quotient if den divides num over the integers, nullopt otherwise.
std::optional<IntPolynomial> try_exact_divide(const IntPolynomial& num,
                                              const IntPolynomial& den);

// gcd of the coefficients, nonnegative; content of the zero polynomial is 0.
BigInt content(const IntPolynomial& f);

}  // namespace cycres
