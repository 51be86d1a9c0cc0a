#include <cycres/knots.hpp>

#include <cycres/errors.hpp>

#include <numeric>
#include <sstream>

namespace cycres {

namespace {

int sign_of(const BigInt& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Lemma on signs: Res(t^n - 1, f) > 0 iff (2 | n and f(1)f(-1) > 0) or
// (2 !| n and f(1) > 0), whenever it is nonzero.
int res_sign_at_level(const IntPolynomial& f, bool level_even) {
  BigInt at_one = f.evaluate(1);
  if (level_even) return sign_of(at_one * f.evaluate(-1));
  return sign_of(at_one);
}

void check_no_vanishing(const IntPolynomial& delta, unsigned long n) {
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (euler_phi(d) > static_cast<unsigned long>(delta.degree())) continue;
    if (cyclotomic_multiplicity(delta, d) > 0)
      throw DomainError("infinite homology (Betti growth): delta vanishes at a " +
                        std::to_string(d) + "-th root of unity");
  }
}

}  // namespace

KnotPolynomial alexander_torus(const TorusKnotSpec& spec) {
  if (spec.a < 2 || spec.b < 2 || std::gcd(spec.a, spec.b) != 1)
    throw HypothesisError("torus knot parameters must be coprime and >= 2");
  const unsigned long ab = spec.a * spec.b;
  IntPolynomial delta = IntPolynomial::constant(1);
  for (unsigned long m = 1; m <= ab; ++m) {
    if (ab % m != 0 || spec.a % m == 0 || spec.b % m == 0) continue;
    delta = delta * cyclotomic(m);
  }
  // cross-check against (1-t)(1-t^ab) / ((1-t^a)(1-t^b))
  IntPolynomial num =
      (-IntPolynomial::power_minus_one(1)) * (-IntPolynomial::power_minus_one(ab));
  IntPolynomial den = (-IntPolynomial::power_minus_one(spec.a)) *
                      (-IntPolynomial::power_minus_one(spec.b));
  auto q = try_exact_divide(num, den);
  if (!q || *q != delta)
    throw InvariantViolation("torus Alexander polynomial: quotient check failed");
  return {delta, KnotProvenance::kTorus, true};
}

KnotPolynomial alexander_twist(const TwistKnotSpec& spec) {
  if (spec.m == 0) throw HypothesisError("twist knot parameter m must be nonzero");
  IntPolynomial delta({spec.m, 1 - 2 * spec.m, spec.m});
  return {delta, KnotProvenance::kTwist, true};
}

KnotPolynomial knot_polynomial(IntPolynomial delta, bool allow_unnormalized) {
  if (delta.is_zero()) throw ZeroPolynomialError();
  BigInt at_one = delta.evaluate(1);
  bool normalized = at_one == 1 || at_one == -1;
  if (!normalized && !allow_unnormalized)
    throw HypothesisError("Alexander polynomial must satisfy delta(1) = +-1");
  return {std::move(delta), KnotProvenance::kUser, normalized};
}

BigInt homology_order(const KnotPolynomial& knot, unsigned long n,
                      std::uint64_t digit_budget) {
  check_no_vanishing(knot.delta, n);
  BigInt r = cyclic_resultant(knot.delta, n, digit_budget);
  return abs(r);
}

HomologyTower homology_tower(const KnotPolynomial& knot, unsigned long p, int prec,
                             LimitMethod method, int levels) {
  HomologyTower tower;
  tower.normalization_warning = !knot.normalization_checked;
  tower.report = tower_limit(knot.delta, p, prec, method);
  tower.res_sign = res_sign_at_level(knot.delta, p == 2);
  if (tower.res_sign == 0)
    throw InvariantViolation("homology tower: vanishing resultant slipped through");
  tower.homology_limit =
      tower.res_sign < 0 ? -tower.report.limit : tower.report.limit;
  unsigned long level = 1;
  for (int n = 0; n <= levels; ++n) {
    tower.level_orders.push_back(homology_order(knot, level));
    if (level > (~0ul) / p) break;
    level *= p;
  }
  return tower;
}

BigInt torus_closed_form(const TorusKnotSpec& spec, unsigned long p, int n) {
  if (std::gcd(spec.a, spec.b) != 1)
    throw HypothesisError("torus knot parameters must be coprime");
  if (spec.b % p == 0)
    throw HypothesisError("closed form requires p not dividing b");
  int r = 0;
  unsigned long a = spec.a;
  while (a % p == 0) {
    a /= p;
    ++r;
  }
  unsigned long exp = 1;  // p^min(n, r)
  for (int i = 0; i < std::min(n, r); ++i) exp *= p;
  return big_pow(spec.b, exp - 1);
}

long twist_special_limit(const TwistKnotSpec& spec, unsigned long p) {
  long m = spec.m < 0 ? -spec.m : spec.m;
  if (m % static_cast<long>(p) != 0)
    throw HypothesisError("twist special limit requires p | m");
  return p == 2 ? -1 : 1;
}

CompositeTower composite_tower(const KnotPolynomial& knot, unsigned long m,
                               unsigned long p, int prec, int levels,
                               LimitMethod method) {
  if (m == 0 || m % p == 0)
    throw HypothesisError("composite tower requires m >= 1 with p not dividing m");
  CompositeTower tower;
  tower.transformed = power_transform(knot.delta, m);
  tower.report = tower_limit(tower.transformed, p, prec, method);

  const unsigned long d = static_cast<unsigned long>(knot.delta.degree());
  // Res(t^(m p^n) - 1, delta) = (-1)^((m+1) p^n deg) Res(t^p^n - 1, delta^(m));
  // constant for n >= 1
  bool flip = ((m + 1) * p * d) & 1;
  tower.transform_sign = flip ? -1 : 1;
  tower.res_sign = res_sign_at_level(knot.delta, (m % 2 == 0) || (p == 2));
  if (tower.res_sign == 0)
    throw InvariantViolation("composite tower: vanishing resultant slipped through");

  int total = tower.res_sign * tower.transform_sign;
  tower.homology_limit = total < 0 ? -tower.report.limit : tower.report.limit;
  if (tower.report.nonp_limit) {
    tower.nonp_homology_limit =
        total < 0 ? -*tower.report.nonp_limit : *tower.report.nonp_limit;
  }

  BigInt bp(p);
  unsigned long level = m;
  for (int n = 0; n <= levels; ++n) {
    check_no_vanishing(knot.delta, level);
    BigInt value = abs(cyclic_resultant(knot.delta, level));
    tower.level_orders.push_back(value);
    BigInt rest;
    big_remove(value, bp, rest);
    tower.scaled_orders.push_back(rest);
    if (level > (~0ul) / p) break;
    level *= p;
  }
  return tower;
}

LivingstonCertificate livingston_predicate(const KnotPolynomial& knot) {
  if (knot.delta.is_zero()) throw ZeroPolynomialError();
  LivingstonCertificate cert;
  IntPolynomial g = knot.delta;
  const unsigned long d0 = static_cast<unsigned long>(g.degree());
  const unsigned long m_cap = 2 * d0 * d0 + 6;
  for (unsigned long m = 1; m <= m_cap && g.degree() > 0; ++m) {
    if (euler_phi(m) > static_cast<unsigned long>(g.degree())) continue;
    IntPolynomial phi = cyclotomic(m);
    unsigned long e = 0;
    while (auto q = try_exact_divide(g, phi)) {
      g = std::move(*q);
      ++e;
    }
    if (e > 0) cert.factors.emplace_back(m, e);
  }
  if (g.degree() > 0) {
    cert.blocking = "non-cyclotomic factor " + g.to_string();
    return cert;
  }
  BigInt c = g.leading();
  if (c != 1 && c != -1) {
    cert.blocking = "non-unit content " + to_decimal(c);
    return cert;
  }
  for (const auto& [m, e] : cert.factors) {
    if (prime_factors(m).size() < 3) {
      std::ostringstream os;
      os << "factor Phi_" << m << " has fewer than three distinct prime divisors";
      cert.blocking = os.str();
      return cert;
    }
  }
  cert.trivial_for_all_towers = true;
  return cert;
}

}  // namespace cycres
