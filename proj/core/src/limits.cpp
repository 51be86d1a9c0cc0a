#include <cycres/limits.hpp>

#include <cycres/errors.hpp>

#include "detail/matrix.hpp"
#include "detail/modring.hpp"

#include <algorithm>
#include <cassert>

namespace cycres {

namespace {

using Coeffs = std::vector<BigInt>;

void ctrim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int cdeg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

Coeffs reduce_poly(const IntPolynomial& f, const BigInt& m) {
  Coeffs out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(mod_reduce(c, m));
  ctrim(out);
  return out;
}

Coeffs cmul(const Coeffs& a, const Coeffs& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) c = mod_reduce(c, m);
  ctrim(out);
  return out;
}

BigInt ceval_one(const Coeffs& a, const BigInt& m) {
  BigInt s = 0;
  for (const auto& c : a) s += c;
  return mod_reduce(s, m);
}

IntPolynomial divide_p_power(const IntPolynomial& f, unsigned long p, unsigned long mu) {
  if (mu == 0) return f;
  BigInt pk = big_pow(p, mu);
  Coeffs out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(checked_divexact(c, pk));
  return IntPolynomial(std::move(out));
}

IntPolynomial shift_down(const IntPolynomial& f, std::size_t e) {
  const auto& c = f.coeffs();
  return IntPolynomial(Coeffs(c.begin() + static_cast<long>(e), c.end()));
}

unsigned long ilog_floor(unsigned long n, unsigned long p) {
  unsigned long r = 0;
  while (n >= p) {
    n /= p;
    ++r;
  }
  return r;
}

// p^n as unsigned long, or PrecisionError if it does not fit.
unsigned long checked_prime_power(unsigned long p, int n) {
  unsigned long r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > (~0ul >> 2) / p) throw PrecisionError("p^n exceeds the machine exponent range");
    r *= p;
  }
  return r;
}

}  // namespace

RootClassification classify_roots(const IntPolynomial& f, unsigned long p) {
  if (f.is_zero()) throw ZeroPolynomialError();
  RootClassification cls;
  cls.mu = p_content(f, p);
  cls.primitive = divide_p_power(f, p, cls.mu);
  cls.polygon = NewtonPolygon::compute(cls.primitive, p);
  cls.count_neg = cls.polygon.count_neg();
  cls.count_unit = cls.polygon.count_unit();
  cls.count_pos = cls.polygon.count_pos();

  const int d = cls.primitive.degree();
  BigInt bp(p);
  Coeffs fbar = reduce_poly(cls.primitive, bp);

  // mod-p reduction drops exactly the negative-slope roots and vanishes at 0
  // exactly to the order of the positive-slope ones
  if (cdeg(fbar) != d - static_cast<int>(cls.count_neg))
    throw InvariantViolation("classification: mod-p degree disagrees with polygon");
  std::size_t ord0 = 0;
  while (fbar[ord0] == 0) ++ord0;
  if (ord0 != cls.count_pos)
    throw InvariantViolation("classification: mod-p order at 0 disagrees with polygon");

  // lambda = multiplicity of (t-1), by repeated synthetic division over F_p
  Coeffs w = fbar;
  while (cdeg(w) >= 1 && ceval_one(w, bp) == 0) {
    // divide by (t-1): q_(i-1) = w_i + q_i, descending
    Coeffs q(w.size() - 1, BigInt(0));
    BigInt carry = 0;
    for (std::size_t i = w.size(); i-- > 1;) {
      carry = mod_reduce(w[i] + carry, bp);
      q[i - 1] = carry;
    }
    w = std::move(q);
    ctrim(w);
    ++cls.lambda;
  }

  // monic unit-root part h = (fbar / t^ord0) normalized
  Coeffs h(fbar.begin() + static_cast<long>(ord0), fbar.end());
  BigInt inv_lead = invert_mod(h.back(), bp);
  for (auto& c : h) c = mod_reduce(c * inv_lead, bp);
  if (cdeg(h) != static_cast<int>(cls.count_unit))
    throw InvariantViolation("classification: unit part degree mismatch");
  if (h.front() == 0)
    throw InvariantViolation("classification: unit part vanishes at 0");
  cls.unit_reduction = IntPolynomial(std::move(h));

  if (cls.lambda > cls.count_unit)
    throw InvariantViolation("classification: lambda exceeds the unit root count");
  return cls;
}

// --------------------------------------------------------------------------
// Sequence engine: Res(t^n - 1, f) as an exact p-adic residue.  Everything is
// computed modulo a large p-power; the p-valuation is exact because the true
// value is a nonzero integer and the working precision is grown until its
// leading digit is visible.
// --------------------------------------------------------------------------

namespace {

struct PadicResidue {
  BigInt val;   // p-valuation of Res (includes the mu * n part)
  BigInt unit;  // signed non-p part reduced mod p^digits
  int digits;
};

// requires: f nonzero and Res(t^n-1, f) != 0 (vanishing excluded by caller)
PadicResidue cyclic_res_padic(const IntPolynomial& f, unsigned long p,
                              unsigned long n, int digits) {
  unsigned long mu = p_content(f, p);
  IntPolynomial g = divide_p_power(f, p, mu);
  BigInt val = BigInt(mu) * n;
  bool negate = false;

  std::size_t e0 = g.order_at_zero();
  if (e0 > 0) {
    g = shift_down(g, e0);
    if (((n + 1) * e0) & 1) negate = !negate;
  }

  const int d = g.degree();
  BigInt bp(p);
  if (d == 0) {
    BigInt m = big_pow(p, static_cast<unsigned long>(digits));
    BigInt u;
    mpz_powm(u.get_mpz_t(), mod_reduce(g.leading(), m).get_mpz_t(),
             BigInt(n).get_mpz_t(), m.get_mpz_t());
    if (negate) u = mod_reduce(-u, m);
    return {val, u, digits};
  }

  // Orient so that the leading coefficient carries the smaller p-valuation;
  // cyclic resultants of the reversal differ by (-1)^((n+1) deg).
  unsigned long vl = big_valuation(g.leading(), bp);
  unsigned long vc = big_valuation(g.coeff(0), bp);
  if (vl > vc) {
    g = g.reversed();
    if (((n + 1) * static_cast<unsigned long>(d)) & 1) negate = !negate;
    vl = vc;
  }

  // monicization divides the result by lc^(n(d-1)); its p-part costs padding
  unsigned __int128 pad128 = (unsigned __int128)n * (unsigned long)(d - 1) * vl;
  if (pad128 > 40'000'000ull)
    throw PrecisionError("cyclic resultant residue: p-divisible ends need too much padding");
  unsigned long pad = static_cast<unsigned long>(pad128);

  int K = digits + static_cast<int>((d + 1) * (ilog_floor(n, p) + 2)) + 8;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 40 || (unsigned long)K + pad > 60'000'000ul)
      throw PrecisionError("cyclic resultant residue: valuation exceeds working precision");
    BigInt mod = big_pow(p, static_cast<unsigned long>(K) + pad);

    detail::MonicMod ring;
    ring.om.m = &mod;
    {
      const BigInt& a0 = g.leading();
      Coeffs low(static_cast<std::size_t>(d));
      BigInt scale = 1;
      for (int i = d - 1; i >= 0; --i) {
        low[i] = mod_reduce(g.coeff(static_cast<std::size_t>(i)) * scale, mod);
        scale = mod_reduce(scale * a0, mod);
      }
      ring.low = std::move(low);
    }
    Coeffs r = ring.pow_x(n);
    detail::SquareMat mat = ring.mult_matrix(r);
    BigInt an;
    mpz_powm(an.get_mpz_t(), mod_reduce(g.leading(), mod).get_mpz_t(),
             BigInt(n).get_mpz_t(), mod.get_mpz_t());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        BigInt v = i == j ? BigInt(an - mat.at(i, j)) : BigInt(-mat.at(i, j));
        mat.at(i, j) = mod_reduce(v, mod);
      }
    BigInt det = mod_reduce(detail::bareiss_det(std::move(mat)), mod);

    // det = lc^(n(d-1)) * Res up to sign; peel the known p-part, then the unit
    if (det != 0 && pad > 0) {
      if (big_valuation(det, bp) < pad) {
        throw InvariantViolation("cyclic resultant residue: missing lc p-power");
      }
      det = checked_divexact(det, big_pow(p, pad));
    }
    BigInt modK = big_pow(p, static_cast<unsigned long>(K));
    det = mod_reduce(det, modK);
    if (det == 0) {
      K = 2 * K + 8;
      continue;
    }
    BigInt lc_unit = checked_divexact(g.leading(), big_pow(p, vl));
    BigInt lu_pow, lu_exp = BigInt(n) * (d - 1);
    mpz_powm(lu_pow.get_mpz_t(), mod_reduce(lc_unit, modK).get_mpz_t(),
             lu_exp.get_mpz_t(), modK.get_mpz_t());
    det = mod_reduce(det * invert_mod(lu_pow, modK), modK);
    if (((n + 1) * static_cast<unsigned long>(d)) & 1) det = mod_reduce(-det, modK);
    if (negate) det = mod_reduce(-det, modK);

    long v = static_cast<long>(big_valuation(det, bp));
    if (K - v < digits) {
      K = static_cast<int>(v) + digits + 8;
      continue;
    }
    BigInt unit = mod_reduce(checked_divexact(det, big_pow(p, static_cast<unsigned long>(v))),
                             big_pow(p, static_cast<unsigned long>(digits)));
    return {val + v, unit, digits};
  }
}

// Smallest k with Phi_(p^k) dividing f/p^mu, or -1.  Only k with
// phi(p^k) <= deg can divide.
int first_vanishing_level(const IntPolynomial& primitive, unsigned long p) {
  const unsigned long d = static_cast<unsigned long>(primitive.degree());
  if (cyclotomic_multiplicity(primitive, 1) > 0) return 0;
  unsigned long pk = p;
  for (int k = 1;; ++k) {
    unsigned long phi = pk / p * (p - 1);
    if (phi > d) return -1;
    if (cyclotomic_multiplicity(primitive, pk) > 0) return k;
    if (pk > d) return -1;
    pk *= p;
  }
}

}  // namespace

std::vector<LevelData> sequence_levels(const IntPolynomial& f, unsigned long p,
                                       int n_max, int digits) {
  if (f.is_zero()) throw ZeroPolynomialError();
  RootClassification cls = classify_roots(f, p);
  int vk = first_vanishing_level(cls.primitive, p);
  if (vk >= 0 && vk <= n_max) throw TowerVanishesError(vk);

  std::vector<LevelData> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    unsigned long level = checked_prime_power(p, n);
    PadicResidue r = cyclic_res_padic(f, p, level, digits);
    LevelData ld;
    ld.n = n;
    ld.p_valuation = r.val;
    ld.nonp_residue = PadicScalar::from_unit(r.unit, 0, p, digits);
    out.push_back(std::move(ld));
  }
  return out;
}

std::pair<PadicScalar, PadicScalar> limit_sequence_oracle(const IntPolynomial& f,
                                                          unsigned long p,
                                                          int prec) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (prec < 1) throw PrecisionError("sequence oracle: precision must be >= 1");
  RootClassification cls = classify_roots(f, p);
  int vk = first_vanishing_level(cls.primitive, p);
  if (vk >= 0 && vk <= prec) throw TowerVanishesError(vk);

  unsigned long level = checked_prime_power(p, prec);
  PadicResidue r = cyclic_res_padic(f, p, level, prec);
  PadicScalar nonp = PadicScalar::from_unit(r.unit, 0, p, prec);

  PadicScalar limit = PadicScalar::zero(p, prec);
  if (r.val < prec) {
    long v = r.val.get_si();
    limit = PadicScalar::from_unit(r.unit, v, p, prec - static_cast<int>(v));
  }
  return {limit, nonp};
}

// --------------------------------------------------------------------------
// Formula engine pieces
// --------------------------------------------------------------------------

PadicScalar TeichPolynomial::coefficient(std::size_t i) const {
  return PadicScalar::from_integer(coeffs.at(i), p, prec).truncated_abs(prec);
}

PadicScalar TeichPolynomial::eval_one() const {
  BigInt m = big_pow(p, static_cast<unsigned long>(prec));
  BigInt s = 0;
  for (const auto& c : coeffs) s += c;
  s = mod_reduce(s, m);
  if (s == 0) return PadicScalar::zero(p, prec);
  long v = static_cast<long>(big_valuation(s, BigInt(p)));
  return PadicScalar::from_unit(checked_divexact(s, big_pow(p, static_cast<unsigned long>(v))),
                                v, p, prec - static_cast<int>(v));
}

namespace {

PadicScalar xi_from_classification(const RootClassification& cls, unsigned long p,
                                   int prec) {
  const int d = cls.primitive.degree();
  const unsigned long s = cls.count_neg;
  BigInt c_s = cls.primitive.coeff(static_cast<std::size_t>(d) - s);
  if (c_s == 0 || big_valuation(c_s, BigInt(p)) != 0)
    throw InvariantViolation("xi: polygon vertex coefficient is not a p-unit");
  if (s & 1) c_s = -c_s;
  return teichmuller(PadicScalar::from_integer(c_s, p, prec));
}

TeichPolynomial teich_from_classification(const RootClassification& cls,
                                          unsigned long p, int prec) {
  if (cls.count_unit == 0)
    throw HypothesisError("teich_poly: no unit roots to lift");
  BigInt mod = big_pow(p, static_cast<unsigned long>(prec));
  auto reduce = [&](const IntPolynomial& h) {
    Coeffs c = h.coeffs();
    for (auto& x : c) x = mod_reduce(x, mod);
    return IntPolynomial(std::move(c));
  };

  // One p-adic digit of the root multiset is gained per p-power transform;
  // the lifted coefficients stay in [0, p^prec).
  IntPolynomial h = cls.unit_reduction;
  for (int it = 0; it < prec + 4; ++it) h = reduce(power_transform(h, p));
  if (reduce(power_transform(h, p)) != h)
    throw InvariantViolation("teich_poly: root transform did not reach a fixed point");

  // reduction mod p must be the unit-root part we started from
  {
    Coeffs a = reduce_poly(h, BigInt(p));
    Coeffs b = reduce_poly(cls.unit_reduction, BigInt(p));
    if (a != b)
      throw InvariantViolation("teich_poly: wrong reduction mod p");
  }

  TeichPolynomial t;
  t.p = p;
  t.prec = prec;
  t.coeffs = h.coeffs();
  return t;
}

HenselFactor hensel_from_classification(const RootClassification& cls,
                                        unsigned long p, int prec) {
  if (cls.lambda == 0) throw DomainError("hensel factor: no distinguished part");
  const unsigned long lambda = cls.lambda;
  BigInt bp(p);
  IntPolynomial F = cls.primitive.shifted_argument(1);  // f1(1+T)
  const int d = F.degree();

  Coeffs fbar = reduce_poly(F, bp);
  std::size_t ord0 = 0;
  while (fbar[ord0] == 0) ++ord0;
  if (ord0 != lambda)
    throw InvariantViolation("hensel factor: T-order of f1(1+T) mod p is not lambda");
  Coeffs b0(fbar.begin() + static_cast<long>(lambda), fbar.end());

  // Bezout mod p: t0 = b0^{-1} mod T^lambda (power-series inversion)
  Coeffs t0(lambda, BigInt(0));
  {
    BigInt inv0 = invert_mod(b0[0], bp);
    t0[0] = inv0;
    for (std::size_t k = 1; k < lambda; ++k) {
      BigInt acc = 0;
      for (std::size_t j = 1; j <= k && j < b0.size(); ++j) acc += b0[j] * t0[k - j];
      t0[k] = mod_reduce(-acc * inv0, bp);
    }
    ctrim(t0);
  }

  // linear Hensel lift: F = g*u mod p^k, one digit per step
  Coeffs g(lambda + 1, BigInt(0));
  g[lambda] = 1;
  Coeffs u = b0;
  BigInt mod = bp;
  for (int k = 1; k < prec; ++k) {
    BigInt mod_next = mod * p;
    Coeffs gu = cmul(g, u, mod_next);
    Coeffs diff(static_cast<std::size_t>(d) + 1, BigInt(0));
    for (int i = 0; i <= d; ++i)
      diff[static_cast<std::size_t>(i)] = mod_reduce(
          F.coeff(static_cast<std::size_t>(i)) -
              (i < static_cast<int>(gu.size()) ? gu[static_cast<std::size_t>(i)] : BigInt(0)),
          mod_next);
    // diff must be divisible by p^k
    Coeffs e;
    e.reserve(diff.size());
    BigInt pk = mod;  // p^k
    for (auto& c : diff) {
      if (mod_reduce(c, pk) != 0)
        throw InvariantViolation("hensel lift: residual not divisible by p^k");
      e.push_back(mod_reduce(checked_divexact(c, pk), bp));
    }
    ctrim(e);
    // solve dg*b0 + du*T^lambda = e over F_p with deg dg < lambda
    Coeffs dg = cmul(t0, e, bp);
    if (dg.size() > lambda) dg.resize(lambda);
    ctrim(dg);
    Coeffs rem = cmul(dg, b0, bp);
    if (rem.size() < e.size()) rem.resize(e.size(), BigInt(0));
    for (std::size_t i = 0; i < rem.size(); ++i) {
      BigInt lhs = i < e.size() ? e[i] : BigInt(0);
      rem[i] = mod_reduce(lhs - rem[i], bp);
    }
    ctrim(rem);
    for (std::size_t i = 0; i < rem.size() && i < lambda; ++i)
      if (rem[i] != 0)
        throw InvariantViolation("hensel lift: correction not divisible by T^lambda");
    Coeffs du(rem.size() > lambda ? rem.size() - lambda : 0, BigInt(0));
    for (std::size_t i = lambda; i < rem.size(); ++i) du[i - lambda] = rem[i];

    if (g.size() < lambda + 1) g.resize(lambda + 1, BigInt(0));
    for (std::size_t i = 0; i < dg.size(); ++i)
      g[i] = mod_reduce(g[i] + pk * dg[i], mod_next);
    if (u.size() < du.size()) u.resize(du.size(), BigInt(0));
    for (std::size_t i = 0; i < du.size(); ++i)
      u[i] = mod_reduce(u[i] + pk * du[i], mod_next);
    for (auto& c : g) c = mod_reduce(c, mod_next);
    for (auto& c : u) c = mod_reduce(c, mod_next);
    mod = mod_next;
  }

  // final checks: g monic distinguished, g*u = F mod p^prec, u(0) unit
  if (g.size() != lambda + 1 || g[lambda] != 1)
    throw InvariantViolation("hensel factor: distinguished part is not monic");
  for (std::size_t i = 0; i < lambda; ++i)
    if (mod_reduce(g[i], bp) != 0)
      throw InvariantViolation("hensel factor: not congruent to T^lambda mod p");
  {
    Coeffs gu = cmul(g, u, mod);
    for (int i = 0; i <= d; ++i) {
      BigInt want = mod_reduce(F.coeff(static_cast<std::size_t>(i)), mod);
      BigInt got = i < static_cast<int>(gu.size()) ? gu[static_cast<std::size_t>(i)] : BigInt(0);
      if (want != got)
        throw InvariantViolation("hensel factor: product does not reproduce f1(1+T)");
    }
  }
  if (u.empty() || mod_reduce(u[0], bp) == 0)
    throw InvariantViolation("hensel factor: cofactor constant term is not a unit");

  HenselFactor hf;
  hf.p = p;
  hf.prec = prec;
  hf.distinguished = std::move(g);
  hf.cofactor = std::move(u);
  return hf;
}

// prod over roots of g of log(1+e); returns whatever absolute precision the
// input supports (the caller checks it).
PadicScalar log_product_impl(const HenselFactor& hf) {
  const unsigned long p = hf.p;
  const int K = hf.prec;
  const int lambda = hf.degree();
  assert(lambda >= 1);
  BigInt bp(p);
  BigInt mod = big_pow(p, static_cast<unsigned long>(K));

  // every root has valuation >= 1/lambda, so truncating at M keeps all
  // dropped terms at valuation >= (M+1)/lambda - log_p(M+1) >= K
  unsigned long M = 1;
  while (true) {
    long lhs = static_cast<long>((M + 1) / static_cast<unsigned long>(lambda));
    if (lhs - static_cast<long>(ilog_floor(M + 1, p)) >= K) break;
    ++M;
    if (M > 2'000'000ul)
      throw PrecisionError("log product: truncation bound unreachable");
  }

  BigInt lcm = 1;
  for (unsigned long k = 2; k <= M; ++k) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), k);
  unsigned long lcm_v = big_valuation(lcm, bp);
  BigInt lcm_unit = checked_divexact(lcm, big_pow(p, lcm_v));

  // L(T) = sum_{k=1..M} (-1)^(k-1) (lcm/k) T^k reduced mod the monic g
  detail::MonicMod ring;
  ring.om.m = &mod;
  ring.low.assign(hf.distinguished.begin(), hf.distinguished.end() - 1);
  Coeffs tk(static_cast<std::size_t>(lambda), BigInt(0));
  if (lambda == 1)
    tk[0] = mod_reduce(-ring.low[0], mod);
  else
    tk[1] = 1;
  Coeffs acc(static_cast<std::size_t>(lambda), BigInt(0));
  for (unsigned long k = 1; k <= M; ++k) {
    if (k > 1) {
      // tk <- tk * x mod g  (multiplication by T: shift and reduce)
      tk.insert(tk.begin(), BigInt(0));
      ring.reduce_in_place(tk);
    }
    BigInt c = checked_divexact(lcm, BigInt(k));
    if ((k & 1) == 0) c = -c;
    c = mod_reduce(c, mod);
    for (int i = 0; i < lambda; ++i)
      acc[static_cast<std::size_t>(i)] =
          mod_reduce(acc[static_cast<std::size_t>(i)] + c * tk[static_cast<std::size_t>(i)], mod);
  }

  // lcm^lambda * prod L(e_i) = det of L acting on Z_p[T]/(g)
  detail::SquareMat mat = ring.mult_matrix(acc);
  BigInt det = mod_reduce(detail::bareiss_det(std::move(mat)), mod);

  unsigned long strip = lcm_v * static_cast<unsigned long>(lambda);
  long abs_prec = K - static_cast<long>(strip);
  if (abs_prec <= 0) throw PrecisionError("log product: no precision left after rescaling");
  BigInt modA = big_pow(p, static_cast<unsigned long>(abs_prec));
  if (det != 0 && strip > 0) {
    if (big_valuation(det, bp) < strip)
      throw InvariantViolation("log product: determinant misses the lcm p-power");
    det = checked_divexact(det, big_pow(p, strip));
  }
  det = mod_reduce(det, modA);
  if (det == 0) return PadicScalar::zero(p, abs_prec);
  BigInt inv_u;
  mpz_powm(inv_u.get_mpz_t(), mod_reduce(lcm_unit, modA).get_mpz_t(),
           BigInt(lambda).get_mpz_t(), modA.get_mpz_t());
  det = mod_reduce(det * invert_mod(inv_u, modA), modA);
  long v = static_cast<long>(big_valuation(det, bp));
  return PadicScalar::from_unit(checked_divexact(det, big_pow(p, static_cast<unsigned long>(v))),
                                v, p, static_cast<int>(abs_prec - v));
}

}  // namespace

PadicScalar xi_unit(const IntPolynomial& f, unsigned long p, int prec) {
  return xi_from_classification(classify_roots(f, p), p, prec);
}

TeichPolynomial teich_poly(const IntPolynomial& f, unsigned long p, int prec) {
  return teich_from_classification(classify_roots(f, p), p, prec);
}

HenselFactor hensel_distinguished_factor(const IntPolynomial& f, unsigned long p,
                                         int prec) {
  return hensel_from_classification(classify_roots(f, p), p, prec);
}

PadicScalar log_product(const HenselFactor& g, int prec) {
  PadicScalar v = log_product_impl(g);
  if (v.is_zero() || v.precision() < prec)
    throw PrecisionError("log product: requested precision not reached");
  return v;
}

namespace {

// Shared formula-engine state.
struct FormulaCore {
  RootClassification cls;
  PadicScalar xi = PadicScalar::exact_zero(2);
  int sign_parity = 0;
  PadicScalar limit = PadicScalar::exact_zero(2);
  LimitZeroReason reason = LimitZeroReason::kNonzero;
  std::optional<PadicScalar> nonp;
  std::string nonp_reason;
  long nu = 0;
  bool nu_shortcut = false;
  std::optional<CyclotomicCase> cyc;
};

PadicScalar apply_sign(PadicScalar v, int parity) { return parity ? -v : v; }

std::optional<CyclotomicCase> detect_cyclotomic_case(const RootClassification& cls,
                                                     unsigned long p) {
  if (cls.mu != 0) return std::nullopt;
  const int d = cls.primitive.degree();
  if (d < 1) return std::nullopt;
  if (cls.count_neg != 0 || cls.count_pos != 0) return std::nullopt;
  BigInt bp(p);
  if (mod_reduce(cls.primitive.leading(), bp) != 1) return std::nullopt;
  Coeffs fbar = reduce_poly(cls.primitive, bp);
  unsigned long m_cap = 2ul * d * d + 2;
  for (unsigned long m = 1; m <= m_cap; ++m) {
    if (m % p == 0) continue;
    if (euler_phi(m) != static_cast<unsigned long>(d)) continue;
    if (reduce_poly(cyclotomic(m), bp) != fbar) continue;
    CyclotomicCase c;
    c.m = m;
    auto primes = prime_factors(m);
    c.expected = (primes.size() == 1) ? primes[0] : 1;
    return c;
  }
  return std::nullopt;
}

FormulaCore formula_core(const IntPolynomial& f, unsigned long p, int prec) {
  if (f.is_zero()) throw ZeroPolynomialError();
  const int guard = 4;
  const int np = prec + guard;

  FormulaCore core;
  core.cls = classify_roots(f, p);
  const RootClassification& cls = core.cls;
  const int d = cls.primitive.degree();
  core.sign_parity = static_cast<int>((p * static_cast<unsigned long>(d) +
                                       cls.count_pos) & 1);
  core.xi = xi_from_classification(cls, p, np);
  core.cyc = detect_cyclotomic_case(cls, p);

  BigInt mod_np = big_pow(p, static_cast<unsigned long>(np));

  // the unit-root product prod (zeta_i - 1) = (-1)^deg H * H(1)
  std::optional<TeichPolynomial> H;
  if (cls.count_unit > 0) H = teich_from_classification(cls, p, np);

  // base value: sign * xi * prod(zeta_i - 1); this is the limit when mu = 0
  // and the non-p limit when additionally lambda = 0
  auto unit_product_value = [&]() {
    PadicScalar prod = PadicScalar::one(p, np);
    if (H) {
      prod = H->eval_one();
      if (cls.count_unit & 1) prod = -prod;
    }
    return apply_sign(core.xi * prod, core.sign_parity);
  };

  if (cls.mu > 0) {
    core.limit = PadicScalar::exact_zero(p);
    core.reason = LimitZeroReason::kMuPositive;
  } else if (cls.lambda > 0) {
    core.limit = PadicScalar::exact_zero(p);
    core.reason = LimitZeroReason::kLambdaPositive;
  } else {
    core.limit = unit_product_value();
    core.reason = LimitZeroReason::kNonzero;
  }

  // cyclotomic special case is an internal cross-check
  if (core.cyc && core.reason == LimitZeroReason::kNonzero) {
    PadicScalar want = PadicScalar::from_integer(BigInt(core.cyc->expected), p, prec);
    if (!core.limit.agrees_with(want, prec))
      throw InvariantViolation("formula: cyclotomic-congruence case mismatch");
  }

  // ---- non-p part ----
  int vk = first_vanishing_level(cls.primitive, p);
  if (vk >= 0) {
    core.nonp_reason = "tower vanishes at level " + std::to_string(vk);
    return core;
  }

  if (cls.lambda == 0) {
    core.nonp = unit_product_value();
    core.nu = 0;
  } else {
    // Hensel factor + log resultant, with adaptive working precision
    BigInt f1_at_one = cls.primitive.evaluate(1);
    long v_f1 = static_cast<long>(big_valuation(f1_at_one, BigInt(p)));
    int kh = np + static_cast<int>(cls.lambda) * (static_cast<int>(v_f1) + 2) + 6;
    PadicScalar lp = PadicScalar::exact_zero(p);
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 5)
        throw PrecisionError("non-p limit: log product precision not attainable");
      HenselFactor hf = hensel_from_classification(cls, p, kh);
      lp = log_product_impl(hf);
      if (!lp.is_zero() && lp.precision() >= prec) break;
      long seen = lp.is_zero() ? lp.abs_precision() : lp.valuation();
      kh = static_cast<int>(seen) + np +
           static_cast<int>(cls.lambda) * (static_cast<int>(ilog_floor(
                                               static_cast<unsigned long>(kh) *
                                                   static_cast<unsigned long>(cls.lambda),
                                               p)) +
                                           2) +
           8;
    }
    core.nu = lp.valuation();

    // H0 = H / (t-1)^lambda: the zeta != 1 part
    Coeffs h0 = H->coeffs;
    for (unsigned long i = 0; i < cls.lambda; ++i) {
      // remainder = H(1) at this stage must vanish mod p^np
      BigInt rem = 0;
      for (const auto& c : h0) rem += c;
      if (mod_reduce(rem, mod_np) != 0)
        throw InvariantViolation("formula: (t-1)^lambda does not divide H to precision");
      Coeffs q(h0.size() - 1, BigInt(0));
      BigInt carry = 0;
      for (std::size_t j = h0.size(); j-- > 1;) {
        carry = mod_reduce(h0[j] + carry, mod_np);
        q[j - 1] = carry;
      }
      h0 = std::move(q);
    }
    BigInt h0_at_one = 0;
    for (const auto& c : h0) h0_at_one += c;
    h0_at_one = mod_reduce(h0_at_one, mod_np);
    if (h0_at_one == 0 || big_valuation(h0_at_one, BigInt(p)) != 0)
      throw InvariantViolation("formula: H0(1) is not a unit");
    PadicScalar h0_val = PadicScalar::from_unit(h0_at_one, 0, p, np);

    unsigned long deg_h0 = cls.count_unit - cls.lambda;
    PadicScalar prod = h0_val;
    if (deg_h0 & 1) prod = -prod;
    PadicScalar log_unit = lp.shifted(-core.nu);  // p^-nu * prod log a_i
    core.nonp = apply_sign(core.xi * prod * log_unit, core.sign_parity);
  }

  // shortcut: if every positive slope of f1(1+T) exceeds 1/(p-1) then
  // p^nu = |f1(1)|^-1
  {
    IntPolynomial F = cls.primitive.shifted_argument(1);
    NewtonPolygon poly = NewtonPolygon::compute(F, p);
    bool all_steep = true;
    for (const auto& seg : poly.segments()) {
      if (seg.infinite) continue;  // exact root at 1 would be a vanishing tower
      if (seg.slope_num <= 0) continue;
      if (static_cast<unsigned long>(seg.slope_num) * (p - 1) <= seg.slope_den)
        all_steep = false;
    }
    core.nu_shortcut = all_steep;
    if (all_steep && core.nonp) {
      BigInt f1_at_one = cls.primitive.evaluate(1);
      if (core.nu != static_cast<long>(big_valuation(f1_at_one, BigInt(p))))
        throw InvariantViolation("formula: nu shortcut check failed");
    }
  }

  return core;
}

IwasawaInvariants verified_invariants(const IntPolynomial& f, unsigned long p,
                                      const RootClassification& cls, long nu) {
  IwasawaInvariants inv;
  inv.lambda = cls.lambda;
  inv.mu = cls.mu;
  inv.nu = nu;

  // v_p(Res(t^p^n - 1, f)) must equal lambda n + mu p^n + nu from some level
  // on; find two consecutive matching levels at desk scale
  int n_cap = p <= 3 ? 10 : (p <= 7 ? 8 : (p <= 100 ? 4 : 3));
  int first_match = -1;
  for (int n = 1; n <= n_cap; ++n) {
    unsigned long level;
    try {
      level = checked_prime_power(p, n);
    } catch (const PrecisionError&) {
      break;
    }
    PadicResidue r = cyclic_res_padic(f, p, level, 2);
    BigInt expect = BigInt(inv.lambda) * n + BigInt(inv.mu) * BigInt(level) + nu;
    if (r.val == expect) {
      if (first_match < 0) first_match = n;
      if (n > first_match) {
        inv.stabilization_level = first_match;
        return inv;
      }
    } else {
      first_match = -1;
    }
  }
  throw InvariantViolation(
      "iwasawa invariants: valuation law not observed at desk scale");
}

}  // namespace

LimitReport limit_formula(const IntPolynomial& f, unsigned long p, int prec) {
  FormulaCore core = formula_core(f, p, prec);
  LimitReport rep;
  rep.p = p;
  rep.requested_precision = prec;
  rep.method = LimitMethod::kFormula;
  rep.limit = core.limit;
  rep.limit_is_zero = core.limit.is_zero();
  rep.zero_reason = core.reason;
  rep.nonp_limit = core.nonp;
  rep.nonp_absent_reason = core.nonp_reason;
  rep.xi = core.xi;
  rep.sign_parity = core.sign_parity;
  rep.cyclotomic_case = core.cyc;
  rep.nu_shortcut_applies = core.nu_shortcut;
  if (core.nonp) {
    rep.invariants = verified_invariants(f, p, core.cls, core.nu);
  } else {
    rep.invariants.lambda = core.cls.lambda;
    rep.invariants.mu = core.cls.mu;
  }
  return rep;
}

PadicScalar nonp_limit_formula(const IntPolynomial& f, unsigned long p, int prec) {
  FormulaCore core = formula_core(f, p, prec);
  if (!core.nonp) throw TowerVanishesError(first_vanishing_level(core.cls.primitive, p));
  return *core.nonp;
}

IwasawaInvariants iwasawa_invariants(const IntPolynomial& f, unsigned long p) {
  FormulaCore core = formula_core(f, p, 8);
  if (!core.nonp) throw TowerVanishesError(first_vanishing_level(core.cls.primitive, p));
  return verified_invariants(f, p, core.cls, core.nu);
}

LimitReport tower_limit(const IntPolynomial& f, unsigned long p, int prec,
                        LimitMethod method) {
  if (method == LimitMethod::kSequence) {
    auto [limit, nonp] = limit_sequence_oracle(f, p, prec);
    LimitReport rep;
    rep.p = p;
    rep.requested_precision = prec;
    rep.method = method;
    rep.limit = limit;
    rep.limit_is_zero = limit.is_zero();
    rep.nonp_limit = nonp;
    rep.xi = PadicScalar::exact_zero(p);
    RootClassification cls = classify_roots(f, p);
    rep.zero_reason = cls.mu > 0 ? LimitZeroReason::kMuPositive
                      : cls.lambda > 0 ? LimitZeroReason::kLambdaPositive
                                       : LimitZeroReason::kNonzero;
    if (rep.limit_is_zero != (rep.zero_reason != LimitZeroReason::kNonzero))
      throw InvariantViolation("sequence limit zero marker contradicts p | f(1)");
    rep.sign_parity = static_cast<int>(
        (p * static_cast<unsigned long>(cls.primitive.degree()) + cls.count_pos) & 1);
    rep.invariants.lambda = cls.lambda;
    rep.invariants.mu = cls.mu;
    return rep;
  }

  LimitReport rep = limit_formula(f, p, prec);
  rep.method = method;
  if (method == LimitMethod::kFormula) return rep;

  // both: the sequence engine must agree to the requested precision
  auto [slimit, snonp] = limit_sequence_oracle(f, p, prec);
  if (!rep.limit.agrees_with(slimit, prec))
    throw InvariantViolation("tower engines disagree on the limit");
  if (rep.nonp_limit && !rep.nonp_limit->agrees_with(snonp, prec))
    throw InvariantViolation("tower engines disagree on the non-p limit");
  int agree = prec;
  {
    long cap = std::min<long>(rep.limit.abs_precision(), slimit.abs_precision());
    while (agree + 1 <= cap && rep.limit.agrees_with(slimit, agree + 1)) ++agree;
  }
  rep.agreement_digits = agree;
  return rep;
}

}  // namespace cycres
