#include <cycres/errors.hpp>
#include <cycres/knots.hpp>

#include <doctest.h>

#include <numeric>

using namespace cycres;

TEST_CASE("alexander polynomials of torus knots") {
  CHECK(alexander_torus({2, 3}).delta == IntPolynomial({1, -1, 1}));
  CHECK(alexander_torus({2, 5}).delta == IntPolynomial({1, -1, 1, -1, 1}));
  CHECK(alexander_torus({3, 4}).delta == cyclotomic(6) * cyclotomic(12));
  CHECK_THROWS_AS(alexander_torus({2, 4}), HypothesisError);
}

TEST_CASE("alexander polynomials of twist knots") {
  CHECK(alexander_twist({1}).delta == IntPolynomial({1, -1, 1}));
  CHECK(alexander_twist({-1}).delta == IntPolynomial({-1, 3, -1}));
  CHECK(alexander_twist({2}).delta == IntPolynomial({2, -3, 2}));
  CHECK_THROWS_AS(alexander_twist({0}), HypothesisError);
}

TEST_CASE("user polynomials require normalization") {
  CHECK_THROWS_AS(knot_polynomial(IntPolynomial({2, 1})), HypothesisError);
  KnotPolynomial loose = knot_polynomial(IntPolynomial({2, 1}), true);
  CHECK(!loose.normalization_checked);
  CHECK(knot_polynomial(IntPolynomial({-1, 3, -1})).normalization_checked);
}

TEST_CASE("homology orders") {
  KnotPolynomial fig8 = alexander_twist({-1});
  CHECK(homology_order(fig8, 2) == 5);
  CHECK(homology_order(alexander_twist({2}), 4) == 63);
  CHECK(homology_order(alexander_torus({2, 3}), 2) == 3);
  // a vanishing root of unity means infinite homology
  KnotPolynomial bad = knot_polynomial(cyclotomic(5), true);
  CHECK_THROWS_AS(homology_order(bad, 5), DomainError);
}

TEST_CASE("homology towers of the figure-eight knot") {
  KnotPolynomial fig8 = alexander_twist({-1});

  HomologyTower t2 = homology_tower(fig8, 2, 12);
  CHECK(t2.res_sign == -1);  // delta(1) delta(-1) = -5 < 0
  CHECK(t2.homology_limit.agrees_with(PadicScalar::from_integer(-3, 2, 12), 12));

  HomologyTower t3 = homology_tower(fig8, 3, 12);
  CHECK(t3.res_sign == 1);
  CHECK(t3.homology_limit.agrees_with(PadicScalar::from_integer(-2, 3, 12), 12));

  HomologyTower t5 = homology_tower(fig8, 5, 12);
  CHECK(t5.homology_limit.agrees_with(PadicScalar::from_integer(-4, 5, 12), 12));

  HomologyTower t7 = homology_tower(fig8, 7, 6);
  CHECK(t7.homology_limit.residue(2) == 8);

  // Cauchy property: the limit matches each exact level order mod p^n
  for (int n = 1; n < static_cast<int>(t3.level_orders.size()); ++n) {
    PadicScalar lv = PadicScalar::from_integer(t3.level_orders[n], 3, 12);
    CHECK(t3.homology_limit.agrees_with(lv, n));
  }
}

TEST_CASE("trefoil towers run to fixed small limits") {
  KnotPolynomial trefoil = alexander_torus({2, 3});
  HomologyTower t5 = homology_tower(trefoil, 5, 8);
  CHECK(t5.homology_limit.agrees_with(PadicScalar::one(5, 8), 8));
  for (const auto& v : t5.level_orders) CHECK(v == 1);

  HomologyTower t2 = homology_tower(trefoil, 2, 8);
  for (std::size_t n = 1; n < t2.level_orders.size(); ++n)
    CHECK(t2.level_orders[n] == 3);
  HomologyTower t3 = homology_tower(trefoil, 3, 8);
  for (std::size_t n = 1; n < t3.level_orders.size(); ++n)
    CHECK(t3.level_orders[n] == 4);
}

TEST_CASE("torus closed form") {
  CHECK(torus_closed_form({3, 2}, 3, 1) == 4);   // 2^(3-1)
  CHECK(torus_closed_form({2, 3}, 2, 1) == 3);   // 3^(2-1)
  CHECK(torus_closed_form({2, 3}, 5, 3) == 1);   // 3^(5^0 - 1)
  CHECK_THROWS_AS(torus_closed_form({2, 3}, 3, 1), HypothesisError);

  // closed form = |H_1| across a small grid
  for (unsigned long a : {2ul, 3ul, 4ul, 5ul, 6ul, 9ul}) {
    for (unsigned long b = 2; b <= 7; ++b) {
      if (std::gcd(a, b) != 1) continue;
      KnotPolynomial knot = alexander_torus({a, b});
      for (unsigned long p : {2ul, 3ul, 5ul}) {
        if (b % p == 0) continue;
        unsigned long level = 1;
        for (int n = 0; n <= 2; ++n) {
          CHECK(torus_closed_form({a, b}, p, n) == homology_order(knot, level));
          level *= p;
        }
      }
    }
  }
}

TEST_CASE("twist special limit") {
  CHECK(twist_special_limit({2}, 2) == -1);
  CHECK(twist_special_limit({-2}, 2) == -1);
  CHECK(twist_special_limit({3}, 3) == 1);
  CHECK_THROWS_AS(twist_special_limit({3}, 2), HypothesisError);

  // must agree with the tower limit of Res
  HomologyTower t = homology_tower(alexander_twist({2}), 2, 8);
  CHECK(t.report.limit.agrees_with(PadicScalar::from_integer(-1, 2, 8), 8));
  HomologyTower tm = homology_tower(alexander_twist({-2}), 2, 8);
  CHECK(tm.report.limit.agrees_with(PadicScalar::from_integer(-1, 2, 8), 8));
  HomologyTower t3 = homology_tower(alexander_twist({3}), 3, 8);
  CHECK(t3.report.limit.agrees_with(PadicScalar::one(3, 8), 8));
}

TEST_CASE("5_2 and J(2,-4) and J(2,6) level tables") {
  KnotPolynomial k52 = alexander_twist({2});
  const long values52[] = {7, 63, 63, 60543};
  for (int n = 1; n <= 4; ++n) {
    BigInt res = cyclic_resultant(k52.delta, 1ul << n);
    CHECK(res == values52[n - 1]);
    CHECK(mod_reduce(res, big_pow(2, n)) == big_pow(2, n) - 1);  // = -1
  }

  KnotPolynomial km4 = alexander_twist({-2});
  const BigInt valuesm4[] = {BigInt(-9), BigInt(-225), BigInt(-65025),
                             BigInt("-4294836225")};
  for (int n = 1; n <= 4; ++n) {
    BigInt res = cyclic_resultant(km4.delta, 1ul << n);
    CHECK(res == valuesm4[n - 1]);
    CHECK(mod_reduce(res, big_pow(2, n)) == big_pow(2, n) - 1);
  }

  KnotPolynomial k6 = alexander_twist({3});
  const BigInt values6[] = {BigInt(64), BigInt(18496), BigInt("30417519283264")};
  unsigned long level = 3;
  for (int n = 1; n <= 3; ++n) {
    BigInt res = cyclic_resultant(k6.delta, level);
    CHECK(res == values6[n - 1]);
    CHECK(mod_reduce(res, big_pow(3, n)) == 1);
    level *= 3;
  }
}

TEST_CASE("composite tower of the figure-eight knot") {
  KnotPolynomial fig8 = alexander_twist({-1});
  CompositeTower tower = composite_tower(fig8, 3, 2, 10, 10);
  CHECK(tower.transformed == IntPolynomial({-1, 18, -1}));
  CHECK(tower.report.invariants.lambda == 2);
  CHECK(tower.report.invariants.nu == 4);

  const BigInt scaled[] = {1, 5, 405, 10498005};
  for (int n = 0; n <= 3; ++n) CHECK(tower.scaled_orders[n] == scaled[n]);

  // scaled orders carry exactly the 2-power 2^(2n+4) for n >= 1
  for (int n = 1; n <= 10; ++n) {
    CHECK(tower.level_orders[n] ==
          tower.scaled_orders[n] * big_pow(2, 2 * n + 4));
  }

  // residue row: scaled_n mod 2^n
  const long residues[] = {1, 1, 5, 5, 21, 21, 85, 213, 213, 213};
  for (int n = 1; n <= 10; ++n)
    CHECK(mod_reduce(tower.scaled_orders[n], big_pow(2, n)) == residues[n - 1]);

  CHECK_THROWS_AS(composite_tower(fig8, 2, 2, 6), HypothesisError);

  // m = 1 coincides with the plain tower
  CompositeTower plain = composite_tower(fig8, 1, 3, 8, 3);
  HomologyTower direct = homology_tower(fig8, 3, 8, LimitMethod::kBoth, 3);
  CHECK(plain.level_orders == direct.level_orders);
  CHECK(plain.homology_limit.agrees_with(direct.homology_limit, 8));
}

TEST_CASE("livingston predicate") {
  CHECK(livingston_predicate(knot_polynomial(IntPolynomial({1}), true))
            .trivial_for_all_towers);

  auto trefoil = livingston_predicate(alexander_torus({2, 3}));
  CHECK(!trefoil.trivial_for_all_towers);
  CHECK(trefoil.blocking.find("Phi_6") != std::string::npos);

  auto phi30 = livingston_predicate(knot_polynomial(cyclotomic(30), true));
  CHECK(phi30.trivial_for_all_towers);
  REQUIRE(phi30.factors.size() == 1);
  CHECK(phi30.factors[0] == std::pair<unsigned long, unsigned long>{30, 1});

  auto mixed = livingston_predicate(
      knot_polynomial(cyclotomic(30) * cyclotomic(30), true));
  CHECK(mixed.trivial_for_all_towers);

  auto blocked = livingston_predicate(
      knot_polynomial(cyclotomic(30) * cyclotomic(6), true));
  CHECK(!blocked.trivial_for_all_towers);

  auto noncyc = livingston_predicate(knot_polynomial(IntPolynomial({-1, 3, -1})));
  CHECK(!noncyc.trivial_for_all_towers);
  CHECK(noncyc.blocking.find("non-cyclotomic") != std::string::npos);

  // forward direction: trivial predicate forces |H_1| = 1 at prime-power levels
  KnotPolynomial k30 = knot_polynomial(cyclotomic(30), true);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    unsigned long level = p;
    while (level <= 27) {
      CHECK(homology_order(k30, level) == 1);
      level *= p;
    }
  }
}
