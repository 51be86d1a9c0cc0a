#include <cycres/errors.hpp>
#include <cycres/newton_polygon.hpp>
#include <cycres/padic.hpp>

#include <doctest.h>

#include "../support/oracles.hpp"

#include <random>

using namespace cycres;
namespace oracle = cycres::testing;

TEST_CASE("from_rational canonicalization") {
  PadicScalar a = PadicScalar::from_rational(6, 1, 3, 4);
  CHECK(a.valuation() == 1);
  CHECK(a.unit() == 2);

  PadicScalar b = PadicScalar::from_rational(-3, 1, 2, 4);
  CHECK(b.valuation() == 0);
  CHECK(b.unit() == 13);  // -3 = 13 mod 16

  PadicScalar c = PadicScalar::from_rational(35, 4, 2, 3);
  CHECK(c.valuation() == -2);
  CHECK(c.unit() == 3);  // 35 = 3 mod 8

  CHECK_THROWS_AS(PadicScalar::from_rational(1, 0, 5, 3), DomainError);
}

TEST_CASE("arithmetic and precision tracking") {
  PadicScalar one = PadicScalar::one(5, 6);
  PadicScalar minus_one = PadicScalar::from_integer(-1, 5, 6);
  PadicScalar sum = one + minus_one;
  CHECK(sum.is_zero());
  CHECK(sum.abs_precision() == 6);

  PadicScalar two = PadicScalar::from_integer(2, 7, 3);
  PadicScalar three = PadicScalar::from_integer(3, 7, 3);
  CHECK((two * three).residue(3) == 6);

  PadicScalar seven = PadicScalar::from_integer(7, 7, 3);
  PadicScalar q = PadicScalar::one(7, 3) / seven;
  CHECK(q.valuation() == -1);
  CHECK(q.unit() == 1);

  // cancellation of leading digits is tracked
  PadicScalar x = PadicScalar::from_integer(1 + 125, 5, 6);
  PadicScalar d = x - PadicScalar::one(5, 6);
  CHECK(d.valuation() == 3);
  CHECK(d.precision() == 3);

  CHECK_THROWS_AS(one / sum, DivisionByZeroToPrecision);
}

TEST_CASE("teichmuller representatives") {
  CHECK(teichmuller(PadicScalar::one(7, 4)).residue(4) == 1);
  CHECK(teichmuller(PadicScalar::from_integer(3, 7, 2)).residue(2) == 31);
  CHECK(teichmuller(PadicScalar::from_integer(2, 5, 2)).residue(2) == 7);
  CHECK(teichmuller(PadicScalar::from_integer(3, 2, 8)).residue(8) == 1);
  CHECK_THROWS_AS(teichmuller(PadicScalar::from_integer(10, 5, 4)), DomainError);

  std::mt19937_64 rng(5);
  for (unsigned long p : {3ul, 5ul, 7ul, 13ul}) {
    for (int i = 0; i < 15; ++i) {
      long u = 1 + static_cast<long>(rng() % (p - 1));
      long v = 1 + static_cast<long>(rng() % (p - 1));
      PadicScalar x = PadicScalar::from_integer(u, p, 6);
      PadicScalar y = PadicScalar::from_integer(v, p, 6);
      PadicScalar tx = teichmuller(x);
      // fixed point of the p-power map
      PadicScalar power = tx;
      for (unsigned long k = 1; k < p; ++k) power = power * tx;
      CHECK(power.agrees_with(tx, 6));
      // multiplicativity
      CHECK(teichmuller(x * y).agrees_with(teichmuller(x) * teichmuller(y), 6));
      // congruent to the input mod p
      CHECK(tx.agrees_with(x, 1));
    }
  }
}

namespace {

// independent series oracle: sum_{k=1..M} -(-u)^k / k over exact rationals,
// then reduced mod p^digits
BigInt log_series_oracle(long u_num, unsigned long p, int digits, int terms) {
  mpq_class sum(0);
  mpq_class u(u_num);
  mpq_class power(1);
  for (int k = 1; k <= terms; ++k) {
    power *= u;
    mpq_class term = power / k;
    if (k % 2 == 0) term = -term;
    sum += term;
  }
  // reduce a rational with p-unit denominator mod p^digits
  BigInt m = big_pow(p, static_cast<unsigned long>(digits));
  BigInt num = mod_reduce(BigInt(sum.get_num()), m);
  BigInt den = mod_reduce(BigInt(sum.get_den()), m);
  return mod_reduce(num * invert_mod(den, m), m);
}

}  // namespace

TEST_CASE("p-adic logarithm") {
  // log 1 = 0
  CHECK(padic_log(PadicScalar::one(5, 6)).is_zero());

  // frozen value from the series oracle: log 6 = 55 mod 125
  CHECK(log_series_oracle(5, 5, 3, 15) == 55);
  PadicScalar lg6 = padic_log(PadicScalar::from_integer(6, 5, 3));
  CHECK(lg6.residue(3) == 55);

  // homomorphism: log(x^2) = 2 log(x) for x = 1 + 5
  PadicScalar x = PadicScalar::from_integer(6, 5, 5);
  CHECK(padic_log(x * x).agrees_with(padic_log(x) + padic_log(x), 5));

  CHECK_THROWS_AS(padic_log(PadicScalar::from_integer(2, 5, 4)), DomainError);

  std::mt19937_64 rng(1234);
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    for (int i = 0; i < 12; ++i) {
      long a = 1 + static_cast<long>(p) * (1 + static_cast<long>(rng() % 30));
      long b = 1 + static_cast<long>(p) * (1 + static_cast<long>(rng() % 30));
      PadicScalar xa = PadicScalar::from_integer(a, p, 7);
      PadicScalar xb = PadicScalar::from_integer(b, p, 7);
      PadicScalar lhs = padic_log(xa * xb);
      PadicScalar rhs = padic_log(xa) + padic_log(xb);
      long digits = std::min(lhs.abs_precision(), rhs.abs_precision());
      CHECK(lhs.agrees_with(rhs, static_cast<int>(digits)));
      // |log a| = |1 - a| on the steep part of the convergence domain
      if (p > 2) {
        PadicScalar diff = xa - PadicScalar::one(p, 7);
        CHECK(padic_log(xa).valuation() == diff.valuation());
      }
    }
  }
  // p = 2 needs a = 1 mod 4 for |log a| = |1 - a|
  for (long a : {5l, 9l, 13l, 21l}) {
    PadicScalar xa = PadicScalar::from_integer(a, 2, 10);
    CHECK(padic_log(xa).valuation() ==
          (xa - PadicScalar::one(2, 10)).valuation());
  }
}

TEST_CASE("digit rendering") {
  RenderedDigits r = digits_render(PadicScalar::from_integer(-3, 2, 6), 4);
  CHECK(r.decimal == "13");
  CHECK(r.digits == std::vector<unsigned long>{1, 0, 1, 1});

  CHECK(digits_render(PadicScalar::zero(2, 5), 4).decimal == "0");
  CHECK_THROWS_AS(digits_render(PadicScalar::from_integer(3, 2, 2), 6),
                  PrecisionError);
}

TEST_CASE("newton polygon: pinned shapes") {
  NewtonPolygon a = NewtonPolygon::compute(IntPolynomial({5, -1, 1}), 5);
  CHECK(a.count_neg() == 0);
  CHECK(a.count_unit() == 1);
  CHECK(a.count_pos() == 1);

  NewtonPolygon b = NewtonPolygon::compute(IntPolynomial({5, 0, 1}), 5);
  CHECK(b.count_pos() == 2);
  CHECK(b.count_unit() == 0);
  REQUIRE(b.segments().size() == 1);
  CHECK(b.segments()[0].slope_num == 1);
  CHECK(b.segments()[0].slope_den == 2);

  NewtonPolygon c = NewtonPolygon::compute(IntPolynomial({-1, 2}), 2);
  CHECK(c.count_neg() == 1);

  // roots at t = 0 count into |a|_p < 1 through the infinite segment
  NewtonPolygon d = NewtonPolygon::compute(IntPolynomial({0, 0, 0, 1}), 3);
  CHECK(d.count_pos() == 3);
  REQUIRE(d.segments().size() == 1);
  CHECK(d.segments()[0].infinite);
}

TEST_CASE("newton polygon: constructive products pin the orientation") {
  // products of (c t - e) with known root valuation v_p(e) - v_p(c)
  std::mt19937_64 rng(99887);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int trial = 0; trial < 25; ++trial) {
      int k = 1 + static_cast<int>(rng() % 4);
      IntPolynomial f = IntPolynomial::constant(1);
      long neg = 0, unit = 0, pos = 0;
      for (int i = 0; i < k; ++i) {
        int shape = static_cast<int>(rng() % 3);
        long c = 1, e = 1 + static_cast<long>(rng() % (p - 1 ? p - 1 : 1));
        if (shape == 0) {  // |root| > 1: c = p, e unit
          c = static_cast<long>(p);
          ++neg;
        } else if (shape == 1) {  // unit root
          ++unit;
        } else {  // |root| < 1: e divisible by p
          e *= static_cast<long>(p);
          ++pos;
        }
        f = f * IntPolynomial({-e, c});
      }
      NewtonPolygon np = NewtonPolygon::compute(f, p);
      CAPTURE(f.to_string());
      CHECK(np.count_neg() == static_cast<unsigned long>(neg));
      CHECK(np.count_unit() == static_cast<unsigned long>(unit));
      CHECK(np.count_pos() == static_cast<unsigned long>(pos));
    }
  }
}
