#pragma once

#include <cycres/int_polynomial.hpp>

#include <cstdint>
#include <vector>

namespace cycres {

// Default cap on the decimal size of exact big-integer results.  Cyclic
// resultants grow like height^(n deg f); the guard turns runaway requests
// into a PrecisionError instead of an out-of-memory grind.
inline constexpr std::uint64_t kDefaultDigitBudget = 10'000'000;

// mu = min over coefficients of v_p; rejects the zero polynomial.
unsigned long p_content(const IntPolynomial& f, unsigned long p);

// Res(f, g) under the convention Res(f,g) = lc(f)^deg g * prod_{f(a)=0} g(a),
// so Res(f,g) = (-1)^{deg f deg g} Res(g,f).  Fraction-free subresultant PRS;
// rejects zero inputs.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

// m-th cyclotomic polynomial, by exact division of t^m - 1.
IntPolynomial cyclotomic(unsigned long m);

// Euler's totient.
unsigned long euler_phi(unsigned long m);

// Distinct prime factors of m >= 1.
std::vector<unsigned long> prime_factors(unsigned long m);

// Deterministic primality test for machine-word inputs.
bool is_prime(unsigned long n);

// Root-power (Graeffe) transform a0^m prod_i (t - a_i^m) for f = a0 prod (t - a_i),
// computed by resultant elimination in Z[x]/(f) -- no root extraction and no
// Newton identities.  Degree is preserved.
IntPolynomial power_transform(const IntPolynomial& f, unsigned long m,
                              std::uint64_t digit_budget = kDefaultDigitBudget);

// Res(t^n - 1, f) = prod_{z^n=1} f(z) as an exact integer (0 is legal).
BigInt cyclic_resultant(const IntPolynomial& f, unsigned long n,
                        std::uint64_t digit_budget = kDefaultDigitBudget);

// Largest k with Phi_m^k | f over the integers.
unsigned long cyclotomic_multiplicity(const IntPolynomial& f, unsigned long m);

}  // namespace cycres
