#include <cycres/errors.hpp>
#include <cycres/poly_algebra.hpp>

#include <doctest.h>

#include "../support/oracles.hpp"

#include <random>

using namespace cycres;
namespace oracle = cycres::testing;

TEST_CASE("canonical form and basic queries") {
  IntPolynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(IntPolynomial({1, 2, 0, 0}).degree() == 1);
  CHECK(IntPolynomial({0}).is_zero());
  CHECK(IntPolynomial({0, 0, 3}).leading() == 3);
  CHECK(IntPolynomial({7}).degree() == 0);
  CHECK_THROWS_AS(z.leading(), ZeroPolynomialError);
}

TEST_CASE("evaluation") {
  CHECK(IntPolynomial({1, -1, 1}).evaluate(1) == 1);        // t^2 - t + 1 at 1
  CHECK(IntPolynomial({-1, 3, -1}).evaluate(-1) == -5);     // -t^2 + 3t - 1 at -1
  CHECK(IntPolynomial{}.evaluate(7) == 0);
  CHECK(IntPolynomial({5, -1, 1}).evaluate(2) == 7);
}

TEST_CASE("argument shift") {
  IntPolynomial f({5, -1, 1});  // t^2 - t + 5
  IntPolynomial g = f.shifted_argument(1);
  CHECK(g == IntPolynomial({5, 1, 1}));  // (1+T)^2 - (1+T) + 5 = T^2 + T + 5
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    IntPolynomial h = oracle::random_polynomial(rng, 5, 30);
    BigInt a = static_cast<long>(rng() % 11) - 5;
    CHECK(h.shifted_argument(a).evaluate(3) == h.evaluate(a + 3));
  }
}

TEST_CASE("p-content") {
  CHECK(p_content(IntPolynomial({5, 5}), 5) == 1);
  CHECK(p_content(IntPolynomial({5, -1, 1}), 5) == 0);
  CHECK(p_content(IntPolynomial({8, 0, 4}), 2) == 2);
  CHECK_THROWS_AS(p_content(IntPolynomial{}, 3), ZeroPolynomialError);
}

TEST_CASE("resultant: pinned values") {
  // Res(t-1, f) = f(1)
  IntPolynomial f({2, -3, 7});
  CHECK(resultant(IntPolynomial({-1, 1}), f) == f.evaluate(1));
  // Res(t^2-1, t^2-t+1) = 3
  CHECK(resultant(IntPolynomial({-1, 0, 1}), IntPolynomial({1, -1, 1})) == 3);
  // Res(Phi_6, Phi_2) = 3
  CHECK(resultant(cyclotomic(6), cyclotomic(2)) == 3);
  CHECK_THROWS_AS(resultant(IntPolynomial{}, f), ZeroPolynomialError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial f = oracle::random_polynomial(rng, 6, 20);
    IntPolynomial g = oracle::random_polynomial(rng, 6, 20);
    CAPTURE(f.to_string());
    CAPTURE(g.to_string());
    CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("resultant antisymmetry") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    IntPolynomial f = oracle::random_polynomial(rng, 5, 15);
    IntPolynomial g = oracle::random_polynomial(rng, 5, 15);
    BigInt lhs = resultant(f, g);
    BigInt rhs = resultant(g, f);
    if ((f.degree() & 1) && (g.degree() & 1)) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial({-1, 1}));
  CHECK(cyclotomic(6) == IntPolynomial({1, -1, 1}));
  CHECK(cyclotomic(8) == IntPolynomial({1, 0, 0, 0, 1}));
  CHECK(cyclotomic(12) == IntPolynomial({1, 0, -1, 0, 1}));
  for (unsigned long n : {2ul, 9ul, 15ul, 24ul, 30ul}) {
    IntPolynomial prod = IntPolynomial::constant(1);
    for (unsigned long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == IntPolynomial::power_minus_one(n));
  }
}

TEST_CASE("euler phi and prime factors") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(30) == 8);
  CHECK(prime_factors(30) == std::vector<unsigned long>{2, 3, 5});
  CHECK(is_prime(37));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
}

TEST_CASE("power transform: pinned values") {
  CHECK(power_transform(IntPolynomial({-2, 1}), 3) == IntPolynomial({-8, 1}));
  CHECK(power_transform(IntPolynomial({-1, 3, -1}), 3) == IntPolynomial({-1, 18, -1}));
  CHECK(power_transform(IntPolynomial({5, -1, 1}), 3) == IntPolynomial({125, 14, 1}));
  // degree preserved, constants raised to the m-th power
  CHECK(power_transform(IntPolynomial({4}), 5) == IntPolynomial::constant(1024));
}

TEST_CASE("power transform agrees with the power-sum oracle") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 80; ++i) {
    IntPolynomial f = oracle::random_polynomial(rng, 4, 12);
    int m = 1 + static_cast<int>(rng() % 6);
    CAPTURE(f.to_string());
    CAPTURE(m);
    CHECK(power_transform(f, m) == oracle::power_transform_oracle(f, m));
  }
}

TEST_CASE("power transform composition") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    IntPolynomial f = oracle::random_polynomial(rng, 4, 10);
    unsigned long a = 1 + rng() % 4, b = 1 + rng() % 4;
    CHECK(power_transform(power_transform(f, a), b) == power_transform(f, a * b));
  }
}

TEST_CASE("cyclic resultant: pinned values") {
  CHECK(cyclic_resultant(IntPolynomial({1, -1, 1}), 2) == 3);
  CHECK(cyclic_resultant(IntPolynomial({2, -3, 2}), 4) == 63);
  CHECK(cyclic_resultant(IntPolynomial({3, -5, 3}), 3) == 64);
  CHECK(cyclic_resultant(IntPolynomial({-2, 5, -2}), 2) == -9);
  CHECK(cyclic_resultant(IntPolynomial({-1, 3, -1}), 7) == 841);
  // legal zero
  CHECK(cyclic_resultant(IntPolynomial({-1, 1}), 6) == 0);
}

TEST_CASE("cyclic resultant equals Res(t^n - 1, f) along the PRS route") {
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 60; ++i) {
    IntPolynomial f = oracle::random_polynomial(rng, 4, 10);
    unsigned long n = 1 + rng() % 8;
    CAPTURE(f.to_string());
    CAPTURE(n);
    CHECK(cyclic_resultant(f, n) == resultant(IntPolynomial::power_minus_one(n), f));
  }
}

TEST_CASE("cyclic resultant: divisor product identity") {
  // Res(t^n-1, f) = prod_{d | n} Res(Phi_d, f): grouping the n-th roots of
  // unity by their order.  Equivalently prod (-1)^(deg f phi(d)) Res(f, Phi_d)
  // after swapping the arguments.
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 40; ++i) {
    IntPolynomial f = oracle::random_polynomial(rng, 4, 10);
    unsigned long n = 1 + rng() % 12;
    BigInt prod = 1, swapped = 1;
    for (unsigned long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      prod *= resultant(cyclotomic(d), f);
      BigInt r = resultant(f, cyclotomic(d));
      if ((static_cast<unsigned long>(f.degree()) * euler_phi(d)) & 1) r = -r;
      swapped *= r;
    }
    CAPTURE(f.to_string());
    CAPTURE(n);
    CHECK(cyclic_resultant(f, n) == prod);
    CHECK(cyclic_resultant(f, n) == swapped);
  }
}

TEST_CASE("Graeffe chain identity") {
  // Res(t^(m p^n) - 1, f) = (-1)^((m+1) p^n deg f) Res(t^p^n - 1, f^(m))
  std::mt19937_64 rng(777);
  const unsigned long pk_values[] = {2, 4, 8, 16, 3, 9, 27, 5, 25, 7};
  for (int i = 0; i < 50; ++i) {
    IntPolynomial f = oracle::random_polynomial(rng, 4, 8);
    unsigned long m = 1 + rng() % 6;
    unsigned long pk = pk_values[rng() % 10];
    BigInt rhs = cyclic_resultant(power_transform(f, m), pk);
    if (((m + 1) * pk * static_cast<unsigned long>(f.degree())) & 1) rhs = -rhs;
    CHECK(cyclic_resultant(f, m * pk) == rhs);
  }
}

TEST_CASE("sign law") {
  // Res(t^n-1, f) > 0 iff (2|n and f(1)f(-1) > 0) or (2!|n and f(1) > 0)
  std::mt19937_64 rng(2718);
  int checked = 0;
  while (checked < 120) {
    IntPolynomial f = oracle::random_polynomial(rng, 4, 9);
    unsigned long n = 1 + rng() % 12;
    BigInt r = cyclic_resultant(f, n);
    if (r == 0) continue;
    bool positive;
    if (n % 2 == 0)
      positive = f.evaluate(1) * f.evaluate(-1) > 0;
    else
      positive = f.evaluate(1) > 0;
    CAPTURE(f.to_string());
    CAPTURE(n);
    CHECK((r > 0) == positive);
    ++checked;
  }
}

TEST_CASE("Apostol resultants of cyclotomic polynomials") {
  for (unsigned long m = 2; m <= 20; ++m) {
    for (unsigned long n = 2; n < m; ++n) {
      if (std::gcd(m, n) == 1) continue;
      BigInt r = resultant(cyclotomic(m), cyclotomic(n));
      // q^phi(n) when m/n is a power of the prime q, else 1
      BigInt expected = 1;
      if (m % n == 0) {
        auto primes = prime_factors(m / n);
        if (primes.size() == 1) expected = big_pow(primes[0], euler_phi(n));
      }
      CAPTURE(m);
      CAPTURE(n);
      CHECK(r == expected);
    }
  }
}

TEST_CASE("cyclotomic multiplicity") {
  IntPolynomial phi6({1, -1, 1});
  CHECK(cyclotomic_multiplicity(phi6, 6) == 1);
  CHECK(cyclotomic_multiplicity(phi6, 4) == 0);
  CHECK(cyclotomic_multiplicity(phi6 * phi6, 6) == 2);
  CHECK(cyclotomic_multiplicity(phi6 * cyclotomic(1), 1) == 1);
}

TEST_CASE("digit budget guards runaway inputs") {
  IntPolynomial f({1, 50, -50, 1});
  CHECK_THROWS_AS(cyclic_resultant(f, 1ul << 40), PrecisionError);
  CHECK_THROWS_AS(power_transform(f, 1ul << 40), PrecisionError);
}

TEST_CASE("exact division") {
  IntPolynomial f({1, -1, 1});
  IntPolynomial g({1, 1});
  auto q = try_exact_divide(f * g, g);
  REQUIRE(q.has_value());
  CHECK(*q == f);
  CHECK(!try_exact_divide(f, g).has_value());
  CHECK(!try_exact_divide(IntPolynomial({2, 2}), IntPolynomial({0, 2})).has_value());
}

TEST_CASE("rendering") {
  CHECK(IntPolynomial({1, -3, 1}).to_string() == "t^2-3t+1");
  CHECK(IntPolynomial({-1, 3, -1}).to_string() == "-t^2+3t-1");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial({0, 1}).to_string() == "t");
  CHECK(IntPolynomial({-7}).to_string() == "-7");
}
