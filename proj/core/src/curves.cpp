#include <cycres/curves.hpp>

#include <cycres/errors.hpp>

#include <vector>

namespace cycres {

EllipticCurveSpec make_curve(unsigned long l, long a, long b) {
  if (l < 5) throw HypothesisError("base field size must be a prime >= 5");
  if (l > kMaxBruteForceField)
    throw HypothesisError("base field exceeds the brute-force guard");
  if (!is_prime(l)) throw HypothesisError("base field size must be prime");
  auto reduce = [&](long x) {
    long r = x % static_cast<long>(l);
    if (r < 0) r += static_cast<long>(l);
    return static_cast<unsigned long>(r);
  };
  EllipticCurveSpec curve{l, reduce(a), reduce(b)};
  // nonsingular iff 4a^3 + 27b^2 != 0 mod l (l >= 5, so 16 is a unit)
  BigInt disc = 4 * big_pow(BigInt(curve.a), 3) + 27 * BigInt(curve.b) * curve.b;
  if (mod_reduce(disc, BigInt(l)) == 0)
    throw HypothesisError("singular curve: 4a^3 + 27b^2 = 0 mod l");
  return curve;
}

unsigned long point_count(const EllipticCurveSpec& curve) {
  const unsigned long l = curve.l;
  // quadratic character table
  std::vector<signed char> chi(l, -1);
  chi[0] = 0;
  for (unsigned long x = 1; x < l; ++x) chi[(x * x) % l] = 1;

  long sum = 0;
  for (unsigned long x = 0; x < l; ++x) {
    unsigned long v = (((x * x) % l) * x + curve.a * x + curve.b) % l;
    sum += chi[v];
  }
  unsigned long count = l + 1 + sum;
  // Hasse bound is a theorem; failing it means a counting bug
  long t = static_cast<long>(l) + 1 - static_cast<long>(count);
  if (BigInt(t) * t > 4 * BigInt(l))
    throw InvariantViolation("point count violates the Hasse bound");
  return count;
}

int legendre_symbol(const BigInt& d, unsigned long l) {
  if (l == 2 || !is_prime(l)) throw HypothesisError("Legendre symbol needs an odd prime");
  BigInt bl(l);
  BigInt r = mod_reduce(d, bl);
  if (r == 0) return 0;
  BigInt e = (bl - 1) / 2, pow;
  mpz_powm(pow.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), bl.get_mpz_t());
  return pow == 1 ? 1 : -1;
}

LPolynomialData make_l_polynomial(IntPolynomial L, BigInt q, unsigned genus) {
  if (q < 2) throw HypothesisError("field size must be >= 2");
  if (genus < 1) throw HypothesisError("genus must be >= 1");
  const unsigned long dg = 2ul * genus;
  if (L.degree() != static_cast<int>(dg))
    throw HypothesisError("L-polynomial degree must be 2g");
  if (L.coeff(0) != 1) throw HypothesisError("L(0) must be 1");
  if (L.evaluate(1) <= 0) throw HypothesisError("L(1) must be a positive class number");
  for (unsigned long i = 0; i <= dg; ++i) {
    BigInt lhs = L.coeff(dg - i);
    BigInt rhs = (i <= genus) ? L.coeff(i) * big_pow(q, genus - i)
                              : L.coeff(i);  // only i <= g carries new content
    if (i <= genus && lhs != rhs)
      throw HypothesisError("functional equation a_(2g-i) = q^(g-i) a_i fails");
  }
  if (genus == 1) {
    // reciprocal roots have |a| = sqrt(q): Hasse bound on the trace
    BigInt a1 = L.coeff(1);
    if (a1 * a1 > 4 * q) throw HypothesisError("trace violates the Hasse bound");
  }
  LPolynomialData data;
  data.q = std::move(q);
  data.genus = genus;
  data.F = L.reversed();
  data.L = std::move(L);
  return data;
}

LPolynomialData frobenius_poly(const EllipticCurveSpec& curve) {
  unsigned long count = point_count(curve);
  long trace = static_cast<long>(curve.l) + 1 - static_cast<long>(count);
  // L(t) = l t^2 - trace t + 1; F(t) = t^2 - trace t + l
  IntPolynomial L({1, -trace, static_cast<long>(curve.l)});
  return make_l_polynomial(std::move(L), BigInt(curve.l), 1);
}

LPolynomialData base_extend(const LPolynomialData& data, unsigned long e) {
  if (data.genus != 1)
    throw HypothesisError("base extension via the trace recurrence needs genus 1");
  if (e == 0) throw HypothesisError("extension degree must be >= 1");
  if (e == 1) return data;
  BigInt s_prev = 2;              // s_0
  BigInt s = -data.F.coeff(1);    // s_1 = trace
  BigInt s1 = s;
  for (unsigned long k = 1; k < e; ++k) {
    BigInt next = s1 * s - data.q * s_prev;
    s_prev = s;
    s = next;
  }
  BigInt qe = big_pow(data.q, e);
  IntPolynomial L(std::vector<BigInt>{BigInt(1), -s, qe});
  return make_l_polynomial(std::move(L), qe, 1);
}

BigInt class_number(const LPolynomialData& data, unsigned long n,
                    std::uint64_t digit_budget) {
  return abs(cyclic_resultant(data.F, n, digit_budget));
}

CurveClassification classify(const EllipticCurveSpec& curve,
                             std::optional<long> cm_discriminant) {
  CurveClassification out;
  out.points = point_count(curve);
  out.trace = static_cast<long>(curve.l) + 1 - static_cast<long>(out.points);
  if (out.points == curve.l + 1)
    out.kind = CurveClass::kSupersingular;
  else if (out.points == curve.l)
    out.kind = CurveClass::kAnomalous;
  else
    out.kind = CurveClass::kOrdinaryGeneric;
  if (cm_discriminant) {
    bool inert = legendre_symbol(BigInt(*cm_discriminant), curve.l) == -1;
    out.cm_consistent = (out.kind == CurveClass::kSupersingular) == inert;
  }
  return out;
}

ClassTower class_tower(const EllipticCurveSpec& curve, unsigned long ext,
                       unsigned long p, int prec, LimitMethod method, int levels) {
  ClassTower tower;
  tower.extended = base_extend(frobenius_poly(curve), ext);
  tower.report = tower_limit(tower.extended.F, p, prec, method);

  unsigned long level = 1;
  for (int n = 0; n <= levels; ++n) {
    tower.class_numbers.push_back(class_number(tower.extended, level));
    if (level > (~0ul) / p) break;
    level *= p;
  }

  if (ext == 1 && p == curve.l) {
    CurveClassification cls = classify(curve);
    bool limit_is_one =
        !tower.report.limit.is_zero() &&
        tower.report.limit.agrees_with(PadicScalar::one(p, prec), prec);
    if ((cls.kind == CurveClass::kSupersingular) != limit_is_one)
      throw InvariantViolation("class tower: supersingular <=> limit 1 failed");
    // The limit vanishes iff l | |E(F_l)|.  That means anomalous (|E| = l)
    // for l >= 7; l = 5 also admits |E| = 2l inside the Hasse interval.
    if (tower.report.limit_is_zero != (cls.points % curve.l == 0))
      throw InvariantViolation("class tower: limit 0 <=> l divides |E| failed");
    if (cls.kind == CurveClass::kAnomalous && tower.report.invariants.nu != 1)
      throw InvariantViolation("class tower: anomalous case must have nu = 1");
  }
  return tower;
}

}  // namespace cycres
