#pragma once

#include <cycres/limits.hpp>

#include <string>
#include <vector>

namespace cycres {

struct TorusKnotSpec {
  unsigned long a = 2;
  unsigned long b = 3;
};

struct TwistKnotSpec {
  long m = 1;  // J(2, 2m); J(2,2) is the trefoil, J(2,-2) the figure-eight
};

enum class KnotProvenance { kTorus, kTwist, kUser };

struct KnotPolynomial {
  IntPolynomial delta;
  KnotProvenance provenance = KnotProvenance::kUser;
  bool normalization_checked = true;  // delta(1) = +-1 verified
};

KnotPolynomial alexander_torus(const TorusKnotSpec& spec);
KnotPolynomial alexander_twist(const TwistKnotSpec& spec);
// wraps a user polynomial; unless allow_unnormalized, delta(1) = +-1 is
// enforced (towers built from unchecked polynomials carry a warning flag)
KnotPolynomial knot_polynomial(IntPolynomial delta, bool allow_unnormalized = false);

// |H_1| of the n-th branched cyclic cover = |Res(t^n - 1, delta)|; vanishing
// at an n-th root of unity means infinite homology and is an error.
BigInt homology_order(const KnotPolynomial& knot, unsigned long n,
                      std::uint64_t digit_budget = kDefaultDigitBudget);

struct HomologyTower {
  LimitReport report;   // tower of Res(t^p^n - 1, delta)
  int res_sign = 1;     // sign of Res at levels p^n, n >= 1 (sign law)
  PadicScalar homology_limit = PadicScalar::exact_zero(2);  // limit of |H_1|
  std::vector<BigInt> level_orders;  // |H_1(X_p^n)| for n = 0..levels
  bool normalization_warning = false;
};

HomologyTower homology_tower(const KnotPolynomial& knot, unsigned long p, int prec,
                             LimitMethod method = LimitMethod::kBoth,
                             int levels = 4);

// |H_1(X_p^n)| = b^(p^min(n,r) - 1) for the (a,b)-torus knot, p not dividing
// b, a = p^r a'.
BigInt torus_closed_form(const TorusKnotSpec& spec, unsigned long p, int n);

// limit of Res(t^p^n - 1, delta) for the twist knot J(2,2m) with p | m:
// -1 for p = 2, +1 otherwise.
long twist_special_limit(const TwistKnotSpec& spec, unsigned long p);

struct CompositeTower {
  IntPolynomial transformed;  // root-power transform of delta by m
  LimitReport report;         // tower of the transformed polynomial at p
  int res_sign = 1;           // sign of Res(t^(m p^n) - 1, delta), n >= 1
  int transform_sign = 1;     // Res(t^(m p^n)-1, delta) / Res(t^p^n-1, transformed)
  std::vector<BigInt> level_orders;    // |H_1(X_(m p^n))|, n = 0..levels
  std::vector<BigInt> scaled_orders;   // the same with the p-part removed
  PadicScalar homology_limit = PadicScalar::exact_zero(2);
  PadicScalar nonp_homology_limit = PadicScalar::exact_zero(2);
};

// Z/(m p^n) tower through the root-power transform; requires p not dividing m.
CompositeTower composite_tower(const KnotPolynomial& knot, unsigned long m,
                               unsigned long p, int prec, int levels = 4,
                               LimitMethod method = LimitMethod::kBoth);

struct LivingstonCertificate {
  bool trivial_for_all_towers = false;
  // cyclotomic factorization delta = +- prod Phi_m^e as (m, e) pairs
  std::vector<std::pair<unsigned long, unsigned long>> factors;
  std::string blocking;  // empty iff the predicate holds
};

// true iff every nontrivial factor of delta is Phi_m with m divisible by at
// least three distinct primes.
LivingstonCertificate livingston_predicate(const KnotPolynomial& knot);

}  // namespace cycres
