#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <string>

namespace cycres {

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt big_pow(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Exact quotient a/b; asserts that b divides a.
inline BigInt checked_divexact(const BigInt& a, const BigInt& b) {
  assert(b != 0);
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  assert(r == 0 && "checked_divexact: division is not exact");
  return q;
}

// p-adic valuation of x != 0: the largest k with p^k | x.
inline unsigned long big_valuation(const BigInt& x, const BigInt& p) {
  assert(x != 0);
  BigInt rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

// Valuation together with the cofactor x / p^v.
inline unsigned long big_remove(const BigInt& x, const BigInt& p, BigInt& rest) {
  assert(x != 0);
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

// Least nonnegative residue of a mod m (m > 0).
inline BigInt mod_reduce(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of a mod m; the caller must guarantee gcd(a, m) = 1.
inline BigInt invert_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  assert(ok && "invert_mod: element not invertible");
  (void)ok;
  return r;
}

inline std::string to_decimal(const BigInt& a) { return a.get_str(); }

}  // namespace cycres
