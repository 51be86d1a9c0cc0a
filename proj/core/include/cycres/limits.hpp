#pragma once

#include <cycres/int_polynomial.hpp>
#include <cycres/newton_polygon.hpp>
#include <cycres/padic.hpp>
#include <cycres/poly_algebra.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cycres {

// Root classification of f at p, read off the Newton polygon and the mod-p
// reduction without ever touching individual roots.
struct RootClassification {
  unsigned long mu = 0;        // maximal p-power dividing f
  IntPolynomial primitive;     // f / p^mu
  NewtonPolygon polygon;       // polygon of the primitive part
  unsigned long count_neg = 0;   // #roots with |a|_p > 1   (the set S)
  unsigned long count_unit = 0;  // #roots with |a|_p = 1
  unsigned long count_pos = 0;   // #roots with |a|_p < 1
  unsigned long lambda = 0;      // multiplicity of t-1 in (f/p^mu mod p)
  // monic integer lift (coefficients in [0,p)) of the unit-root part h of
  // the mod-p reduction; h(0) != 0, deg h = count_unit
  IntPolynomial unit_reduction;
};

RootClassification classify_roots(const IntPolynomial& f, unsigned long p);

struct IwasawaInvariants {
  unsigned long lambda = 0;
  unsigned long mu = 0;
  long nu = 0;
  // smallest n checked such that v_p(Res(t^p^m - 1, f)) = lambda m + mu p^m + nu
  // held for all levels m in [n, n_checked]
  int stabilization_level = 0;
};

// Monic p-adic polynomial whose roots are the Teichmuller lifts of the unit
// roots; fixed by the p-power root transform to the stated precision.
struct TeichPolynomial {
  unsigned long p = 0;
  int prec = 0;                 // coefficients known mod p^prec
  std::vector<BigInt> coeffs;   // ascending, monic, reduced mod p^prec

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  PadicScalar coefficient(std::size_t i) const;
  // H(1) as a p-adic value known mod p^prec
  PadicScalar eval_one() const;
};

// Monic distinguished factor g of f(1+T)/p^mu together with its cofactor:
// g = T^lambda mod p, g * cofactor = f(1+T)/p^mu mod p^prec, cofactor(0) a unit.
struct HenselFactor {
  unsigned long p = 0;
  int prec = 0;
  std::vector<BigInt> distinguished;  // ascending, monic, degree lambda
  std::vector<BigInt> cofactor;       // ascending

  int degree() const { return static_cast<int>(distinguished.size()) - 1; }
};

enum class LimitZeroReason { kNonzero, kMuPositive, kLambdaPositive };
enum class LimitMethod { kFormula, kSequence, kBoth };

// f = Phi_m mod p detected: the limit must equal l for m = l^e, else 1.
struct CyclotomicCase {
  unsigned long m = 0;
  unsigned long expected = 1;
};

struct LimitReport {
  unsigned long p = 0;
  int requested_precision = 0;
  LimitMethod method = LimitMethod::kFormula;

  PadicScalar limit = PadicScalar::exact_zero(2);
  bool limit_is_zero = false;
  LimitZeroReason zero_reason = LimitZeroReason::kNonzero;

  std::optional<PadicScalar> nonp_limit;
  std::string nonp_absent_reason;

  PadicScalar xi = PadicScalar::exact_zero(2);
  IwasawaInvariants invariants;
  int sign_parity = 0;  // parity of p deg f + #{|a|_p < 1}
  int agreement_digits = 0;
  std::optional<CyclotomicCase> cyclotomic_case;
  bool nu_shortcut_applies = false;
};

// --- sequence engine -------------------------------------------------------

// Per-level p-adic data of Res(t^p^n - 1, f): exact p-valuation and the
// residue of the signed non-p part mod p^digits.
struct LevelData {
  int n = 0;
  BigInt p_valuation = 0;
  PadicScalar nonp_residue = PadicScalar::exact_zero(2);
};

std::vector<LevelData> sequence_levels(const IntPolynomial& f, unsigned long p,
                                       int n_max, int digits);

// Limit and non-p limit read off the level-N term: valid because consecutive
// terms agree mod p^n.  Vanishing levels are detected exactly (cyclotomic
// divisibility) and reported as TowerVanishesError.
std::pair<PadicScalar, PadicScalar> limit_sequence_oracle(const IntPolynomial& f,
                                                          unsigned long p,
                                                          int prec);

// --- formula engine --------------------------------------------------------

// Teichmuller representative of the unit Newton-polygon vertex:
// xi = teichmuller((-1)^s c_s) for s = count_neg, c_s the coefficient of
// t^(deg-s) in f/p^mu.
PadicScalar xi_unit(const IntPolynomial& f, unsigned long p, int prec);

TeichPolynomial teich_poly(const IntPolynomial& f, unsigned long p, int prec);

HenselFactor hensel_distinguished_factor(const IntPolynomial& f, unsigned long p,
                                         int prec);

// prod over roots e of g of log(1+e), computed as a resultant against the
// scaled truncated log series; no root extraction.  The product's valuation
// is Iwasawa's nu.
PadicScalar log_product(const HenselFactor& g, int prec);

LimitReport limit_formula(const IntPolynomial& f, unsigned long p, int prec);

PadicScalar nonp_limit_formula(const IntPolynomial& f, unsigned long p, int prec);

IwasawaInvariants iwasawa_invariants(const IntPolynomial& f, unsigned long p);

// Top-level entry: formula engine, sequence engine, or both with an
// agreement check.
LimitReport tower_limit(const IntPolynomial& f, unsigned long p, int prec,
                        LimitMethod method = LimitMethod::kBoth);

}  // namespace cycres
