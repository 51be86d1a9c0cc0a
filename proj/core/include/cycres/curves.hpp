#pragma once

#include <cycres/limits.hpp>

#include <optional>
#include <vector>

namespace cycres {

// y^2 = x^3 + ax + b over F_l, l a prime >= 5 (and <= the brute-force guard).
struct EllipticCurveSpec {
  unsigned long l = 5;
  unsigned long a = 0;
  unsigned long b = 0;
};

inline constexpr unsigned long kMaxBruteForceField = 10'000;

// validates primality, field-size guard and nonsingularity
EllipticCurveSpec make_curve(unsigned long l, long a, long b);

// |E(F_l)| by brute force over the quadratic character
unsigned long point_count(const EllipticCurveSpec& curve);

// Legendre symbol (d/l) for an odd prime l
int legendre_symbol(const BigInt& d, unsigned long l);

// L-polynomial / Frobenius-polynomial pair of a function field of genus g
// over F_q: L(0) = 1, L(1) = class number, a_(2g-i) = q^(g-i) a_i, and
// F(t) = t^2g L(1/t).
struct LPolynomialData {
  BigInt q = 0;
  unsigned genus = 1;
  IntPolynomial L;
  IntPolynomial F;
};

// builds the pair from L and enforces the invariants (plus the Hasse bound
// when genus = 1)
LPolynomialData make_l_polynomial(IntPolynomial L, BigInt q, unsigned genus);

LPolynomialData frobenius_poly(const EllipticCurveSpec& curve);

// Frobenius polynomial over the degree-e constant extension, by the trace
// recurrence s_(k+1) = s_1 s_k - q s_(k-1); genus 1 only.
LPolynomialData base_extend(const LPolynomialData& data, unsigned long e);

// |Cl^0| of the degree-n constant extension = |Res(t^n - 1, F)|
BigInt class_number(const LPolynomialData& data, unsigned long n,
                    std::uint64_t digit_budget = kDefaultDigitBudget);

enum class CurveClass { kSupersingular, kAnomalous, kOrdinaryGeneric };

struct CurveClassification {
  CurveClass kind = CurveClass::kOrdinaryGeneric;
  unsigned long points = 0;
  long trace = 0;
  // set when a CM discriminant was supplied: whether (D/l) = -1 matches the
  // supersingular flag
  std::optional<bool> cm_consistent;
};

CurveClassification classify(const EllipticCurveSpec& curve,
                             std::optional<long> cm_discriminant = std::nullopt);

struct ClassTower {
  LPolynomialData extended;
  LimitReport report;
  std::vector<BigInt> class_numbers;  // levels n = 0..levels
};

// tower of class numbers of the constant Z_p-extension over F_(l^e);
// when e = 1 and p = l the supersingular/anomalous dichotomy is enforced.
ClassTower class_tower(const EllipticCurveSpec& curve, unsigned long ext,
                       unsigned long p, int prec,
                       LimitMethod method = LimitMethod::kBoth, int levels = 3);

}  // namespace cycres
