#pragma once

#include <cycres/bigint.hpp>

#include <climits>
#include <string>
#include <vector>

namespace cycres {

// Finite-precision p-adic scalar: value = unit * p^val + O(p^(val+prec)),
// with p not dividing unit and unit in [1, p^prec).  Precision is relative
// ("prec significant base-p digits of the unit part"): multiplication
// preserves prec, addition of equal-valuation terms may lose leading digits
// and the loss is tracked.  A value that cancels entirely keeps only an
// absolute bound and becomes the distinguished zero-to-precision marker.
class PadicScalar {
 public:
  static PadicScalar from_integer(const BigInt& n, unsigned long p, int prec);
  static PadicScalar from_rational(const BigInt& num, const BigInt& den,
                                   unsigned long p, int prec);
  // zero-to-precision marker: the value is O(p^abs_prec)
  static PadicScalar zero(unsigned long p, long abs_prec);
  // exactly zero (zero to every precision)
  static PadicScalar exact_zero(unsigned long p);
  static PadicScalar one(unsigned long p, int prec);
  // value = unit * p^val known to relative precision prec
  static PadicScalar from_unit(BigInt unit, long val, unsigned long p, int prec);

  unsigned long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  // valuation; calling it on a zero marker is an invariant violation
  long valuation() const;
  const BigInt& unit() const;
  int precision() const;
  // p-adic exponent below which the value is fully known
  long abs_precision() const;

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator-(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator*(const PadicScalar& x, const PadicScalar& y);
  friend PadicScalar operator/(const PadicScalar& x, const PadicScalar& y);

  // value mod p^k in [0, p^k); requires val >= 0 and abs_precision() >= k
  BigInt residue(int k) const;
  // base-p digits of residue(k), little-endian, length k
  std::vector<unsigned long> digit_list(int k) const;
  // true when both values are congruent mod p^digits (both must be known
  // that far)
  bool agrees_with(const PadicScalar& other, int digits) const;

  // shift by p^e (exact rescaling of the valuation)
  PadicScalar shifted(long e) const;
  // forget digits beyond abs precision a
  PadicScalar truncated_abs(long a) const;

  std::string to_string() const;

 private:
  PadicScalar() = default;
  void normalize();

  unsigned long p_ = 0;
  bool zero_ = true;
  long val_ = 0;        // valuation when !zero_
  long zero_prec_ = 0;  // O(p^zero_prec_) when zero_
  int prec_ = 0;        // relative digits when !zero_
  BigInt unit_ = 0;
};

inline constexpr long kExactZeroPrec = LONG_MAX / 4;

// The unique root of unity of order prime to p congruent to x mod p
// (the fixed point of y -> y^p).  Requires v(x) = 0; for p = 2 this is 1.
PadicScalar teichmuller(const PadicScalar& x);

// p-adic logarithm log(1+u) = sum -(-u)^n / n, for v(x-1) >= 1.  The series
// is truncated so that every dropped term is O(p^abs_prec(x)).
PadicScalar padic_log(const PadicScalar& x);

struct RenderedDigits {
  std::string decimal;
  std::vector<unsigned long> digits;
};

// Residue of the value mod p^n_digits as a decimal string plus the base-p
// digit list (little-endian).  Requesting more digits than the known
// precision is an error.
RenderedDigits digits_render(const PadicScalar& x, int n_digits);

}  // namespace cycres
