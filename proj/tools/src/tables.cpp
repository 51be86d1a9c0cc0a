#include <cycres/cli/tables.hpp>

#include <cycres/curves.hpp>
#include <cycres/errors.hpp>
#include <cycres/knots.hpp>
#include <cycres/limits.hpp>

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace cycres::cli {

namespace {

void check_cell(TableDoc& doc, const std::string& what, const std::string& got,
                const std::string& want) {
  if (got != want) {
    doc.pass = false;
    doc.diffs.push_back(what + ": got " + got + ", want " + want);
  }
}

void check_flag(TableDoc& doc, const std::string& what, bool ok) {
  if (!ok) {
    doc.pass = false;
    doc.diffs.push_back(what);
  }
}

std::string res_mod(const BigInt& value, unsigned long p, int n) {
  return to_decimal(mod_reduce(value, big_pow(p, static_cast<unsigned long>(n))));
}

// --- the tower tables ------------------------------------------------------

TableDoc fig8_p7() {
  TableDoc doc{.id = "fig8-p7",
               .title = "figure-eight knot, 7-adic tower of resultant residues"};
  const IntPolynomial delta({-1, 3, -1});
  const std::vector<std::string> expected = {"1", "8", "106", "2164", "4565", "38179"};
  std::vector<std::string> values, residues;
  unsigned long level = 7;
  for (int n = 1; n <= 6; ++n) {
    doc.col_labels.push_back("n=" + std::to_string(n));
    BigInt r = cyclic_resultant(delta, level);
    residues.push_back(res_mod(r, 7, n));
    check_cell(doc, "residue at n=" + std::to_string(n), residues.back(),
               expected[n - 1]);
    level *= 7;
  }
  doc.rows.emplace_back("Res mod 7^n", residues);
  doc.notes.push_back("Res(t^7^n - 1, -t^2+3t-1) mod 7^n, exact integers");
  return doc;
}

TableDoc fig8_limits() {
  TableDoc doc{.id = "fig8-limits",
               .title = "figure-eight knot, homology tower limits"};
  KnotPolynomial fig8 = alexander_twist({-1});
  doc.col_labels = {"p=2", "p=3", "p=5", "p=7"};
  std::vector<std::string> cells;

  const long expected_small[] = {-3, -2, -4};
  const unsigned long primes[] = {2, 3, 5};
  for (int i = 0; i < 3; ++i) {
    HomologyTower t = homology_tower(fig8, primes[i], 12, LimitMethod::kBoth, 3);
    PadicScalar want = PadicScalar::from_integer(expected_small[i], primes[i], 12);
    check_flag(doc,
               "limit at p=" + std::to_string(primes[i]) + " must be " +
                   std::to_string(expected_small[i]) + " to 12 digits",
               t.homology_limit.agrees_with(want, 12));
    check_flag(doc, "engines agree to 12 digits at p=" + std::to_string(primes[i]),
               t.report.agreement_digits >= 12);
    cells.push_back(t.homology_limit.residue(12).get_str());
  }
  HomologyTower t7 = homology_tower(fig8, 7, 6, LimitMethod::kBoth, 3);
  check_cell(doc, "limit mod 49 at p=7", t7.homology_limit.residue(2).get_str(), "8");
  check_flag(doc, "engines agree to 6 digits at p=7", t7.report.agreement_digits >= 6);
  cells.push_back(t7.homology_limit.residue(2).get_str());
  doc.rows.emplace_back("|H1| limit residues", cells);
  doc.notes.push_back("limits are -3, -2, -4 (shown mod p^12) and 8 mod 49");
  return doc;
}

TableDoc twist_table(const std::string& id, long m, unsigned long p, int n_max,
                     const std::vector<std::string>& expected_values,
                     const std::vector<std::string>& expected_residues) {
  TableDoc doc{.id = id,
               .title = "twist knot J(2," + std::to_string(2 * m) + "), p = " +
                        std::to_string(p)};
  KnotPolynomial knot = alexander_twist({m});
  std::vector<std::string> values, residues;
  unsigned long level = p;
  for (int n = 1; n <= n_max; ++n) {
    doc.col_labels.push_back("n=" + std::to_string(n));
    BigInt r = cyclic_resultant(knot.delta, level);
    values.push_back(to_decimal(r));
    residues.push_back(res_mod(r, p, n));
    check_cell(doc, "value at n=" + std::to_string(n), values.back(),
               expected_values[n - 1]);
    check_cell(doc, "residue at n=" + std::to_string(n), residues.back(),
               expected_residues[n - 1]);
    level *= p;
  }
  doc.rows.emplace_back("Res", values);
  doc.rows.emplace_back("mod p^n", residues);
  // the special limit of Res for p | m must match the tower limit
  long special = twist_special_limit({m}, p);
  HomologyTower tower = homology_tower(knot, p, 8);
  check_flag(doc, "tower limit equals the closed-form value " + std::to_string(special),
             tower.report.limit.agrees_with(
                 PadicScalar::from_integer(special, p, 8), 8));
  return doc;
}

TableDoc torus_grid() {
  TableDoc doc{.id = "torus-grid",
               .title = "torus knots: closed form vs homology order"};
  int checked = 0;
  for (unsigned long a : {2ul, 3ul, 4ul, 5ul, 6ul, 9ul}) {
    for (unsigned long b = 2; b <= 7; ++b) {
      if (std::gcd(a, b) != 1) continue;
      KnotPolynomial knot = alexander_torus({a, b});
      for (unsigned long p : {2ul, 3ul, 5ul}) {
        if (b % p == 0) continue;
        unsigned long level = 1;
        for (int n = 0; n <= 3; ++n) {
          BigInt closed = torus_closed_form({a, b}, p, n);
          BigInt order = homology_order(knot, level);
          if (closed != order) {
            doc.pass = false;
            doc.diffs.push_back("T(" + std::to_string(a) + "," + std::to_string(b) +
                                ") p=" + std::to_string(p) + " n=" +
                                std::to_string(n) + ": closed form " +
                                to_decimal(closed) + " vs order " +
                                to_decimal(order));
          }
          ++checked;
          level *= p;
        }
      }
    }
  }
  doc.col_labels = {"cases"};
  doc.rows.emplace_back("checked", std::vector<std::string>{std::to_string(checked)});
  doc.notes.push_back("grid: a in {2,3,4,5,6,9}, coprime b <= 7, p in {2,3,5}, n <= 3");
  return doc;
}

TableDoc fig8_m3_p2() {
  TableDoc doc{.id = "fig8-m3-p2",
               .title = "figure-eight knot, Z/(3*2^n) tower at p = 2"};
  KnotPolynomial fig8 = alexander_twist({-1});
  CompositeTower tower = composite_tower(fig8, 3, 2, 10, 10);

  const std::vector<std::string> expected_scaled = {"1", "5", "405", "10498005"};
  const std::vector<std::string> expected_residues = {"1", "1",  "5",   "5",
                                                      "21", "21", "85", "213",
                                                      "213", "213"};
  std::vector<std::string> scaled, residues;
  for (int n = 0; n <= 10; ++n) {
    doc.col_labels.push_back("n=" + std::to_string(n));
    scaled.push_back(to_decimal(tower.scaled_orders[n]));
    residues.push_back(n == 0 ? "-" : res_mod(tower.scaled_orders[n], 2, n));
  }
  for (int n = 0; n <= 3; ++n)
    check_cell(doc, "scaled value at n=" + std::to_string(n), scaled[n],
               expected_scaled[n]);
  for (int n = 1; n <= 10; ++n)
    check_cell(doc, "residue at n=" + std::to_string(n), residues[n],
               expected_residues[n - 1]);
  check_cell(doc, "nu", std::to_string(tower.report.invariants.nu), "4");
  doc.rows.emplace_back("|H1| / 2-part", scaled);
  doc.rows.emplace_back("mod 2^n", residues);
  doc.notes.push_back("|H1(X_(3*2^n))| carries exactly 2^(2n+4) for n >= 1; nu = 4");
  return doc;
}

TableDoc curve_levels_table(const std::string& id, const IntPolynomial& frob,
                            unsigned long p, int n_max, unsigned long lambda,
                            long nu, const std::vector<std::string>& expected,
                            const std::string& title) {
  TableDoc doc{.id = id, .title = title};
  auto levels = sequence_levels(frob, p, n_max, n_max + 4);
  std::vector<std::string> residues;
  for (int n = 1; n <= n_max; ++n) {
    doc.col_labels.push_back("n=" + std::to_string(n));
    BigInt expected_val = BigInt(lambda) * n + nu;
    check_cell(doc, "p-valuation at n=" + std::to_string(n),
               to_decimal(levels[n].p_valuation), to_decimal(expected_val));
    residues.push_back(levels[n].nonp_residue.residue(n).get_str());
    check_cell(doc, "residue at n=" + std::to_string(n), residues.back(),
               expected[n - 1]);
  }
  doc.rows.emplace_back("non-p part mod p^n", residues);

  IwasawaInvariants inv = iwasawa_invariants(frob, p);
  check_cell(doc, "lambda", std::to_string(inv.lambda), std::to_string(lambda));
  check_cell(doc, "nu", std::to_string(inv.nu), std::to_string(nu));
  // the two engines must agree on the non-p limit
  LimitReport rep = tower_limit(frob, p, std::min(n_max, 6), LimitMethod::kBoth);
  check_flag(doc, "formula and sequence engines agree",
             rep.agreement_digits >= std::min(n_max, 6));
  return doc;
}

TableDoc curve5_p3() {
  TableDoc doc{.id = "curve5-p3",
               .title = "y^2 = x^3+3x+3 over F_5, constant 3-adic tower"};
  LPolynomialData d = frobenius_poly(make_curve(5, 3, 3));
  LimitReport rep = tower_limit(d.F, 3, 8, LimitMethod::kBoth);
  // digits frozen after cross-checking both engines; the limit squares to -2
  const std::vector<std::string> expected = {"2", "5", "5", "59", "221", "221",
                                             "1679", "3866"};
  std::vector<std::string> residues;
  for (int n = 1; n <= 8; ++n) {
    doc.col_labels.push_back("n=" + std::to_string(n));
    residues.push_back(rep.limit.residue(n).get_str());
    check_cell(doc, "limit mod 3^" + std::to_string(n), residues.back(),
               expected[n - 1]);
  }
  doc.rows.emplace_back("limit mod 3^n", residues);
  check_flag(doc, "engines agree to 8 digits", rep.agreement_digits >= 8);
  PadicScalar sq = rep.limit * rep.limit;
  check_flag(doc, "limit squares to -2 (an 8th-root-of-unity value)",
             sq.agrees_with(PadicScalar::from_integer(-2, 3, 8), 8));
  doc.notes.push_back("the limit is (1-z)(1-zbar) over the primitive 8th roots "
                      "lifting t^2+2t+2 mod 3; it squares to -2");
  return doc;
}

TableDoc curve125_p2() {
  TableDoc doc{.id = "curve125-p2",
               .title = "y^2 = x^3+3x+3 over F_(5^3), constant 2-adic tower"};
  LPolynomialData d = base_extend(frobenius_poly(make_curve(5, 3, 3)), 3);
  check_cell(doc, "Frobenius polynomial", d.F.to_string(), "t^2+14t+125");
  auto levels = sequence_levels(d.F, 2, 10, 14);
  const std::vector<std::string> expected = {"1", "1", "1", "1", "17",
                                             "17", "17", "145", "401", "401"};
  std::vector<std::string> residues;
  for (int n = 1; n <= 10; ++n) {
    doc.col_labels.push_back("n=" + std::to_string(n));
    check_cell(doc, "p-valuation at n=" + std::to_string(n),
               to_decimal(levels[n].p_valuation), std::to_string(2 * n + 4));
    residues.push_back(levels[n].nonp_residue.residue(n).get_str());
    check_cell(doc, "residue at n=" + std::to_string(n), residues.back(),
               expected[n - 1]);
  }
  doc.rows.emplace_back("non-2 part mod 2^n", residues);
  IwasawaInvariants inv = iwasawa_invariants(d.F, 2);
  check_cell(doc, "lambda", std::to_string(inv.lambda), "2");
  check_cell(doc, "nu", std::to_string(inv.nu), "4");
  return doc;
}

using TableFn = std::function<TableDoc()>;

const std::vector<std::pair<std::string, std::pair<std::string, TableFn>>>&
registry() {
  static const std::vector<std::pair<std::string, std::pair<std::string, TableFn>>>
      tables = {
          {"fig8-p7",
           {"figure-eight knot: Res(t^7^n-1, delta) mod 7^n, n = 1..6", fig8_p7}},
          {"fig8-limits",
           {"figure-eight knot: homology limits at p = 2, 3, 5, 7", fig8_limits}},
          {"tk52-p2",
           {"5_2 twist knot: 2-adic tower values and residues",
            [] {
              return twist_table("tk52-p2", 2, 2, 4, {"7", "63", "63", "60543"},
                                 {"1", "3", "7", "15"});
            }}},
          {"j2m4-p2",
           {"J(2,-4) twist knot: 2-adic tower values and residues",
            [] {
              return twist_table("j2m4-p2", -2, 2, 4,
                                 {"-9", "-225", "-65025", "-4294836225"},
                                 {"1", "3", "7", "15"});
            }}},
          {"j26-p3",
           {"J(2,6) twist knot: 3-adic tower values and residues",
            [] {
              return twist_table("j26-p3", 3, 3, 3,
                                 {"64", "18496", "30417519283264"},
                                 {"1", "1", "1"});
            }}},
          {"torus-grid",
           {"torus knots: closed form vs homology order over the grid",
            torus_grid}},
          {"fig8-m3-p2",
           {"figure-eight knot: composite Z/(3*2^n) tower, nu = 4", fig8_m3_p2}},
          {"curve5-p5",
           {"y^2=x^3+3x+3 / F_5: anomalous 5-adic tower, lambda = nu = 1",
            [] {
              return curve_levels_table(
                  "curve5-p5", IntPolynomial({5, -1, 1}), 5, 6, 1, 1,
                  {"1", "21", "71", "321", "1571", "14071"},
                  "y^2 = x^3+3x+3 over F_5, 5-adic tower of non-5 parts");
            }}},
          {"curve37-p37",
           {"y^2=x^3-5 / F_37: anomalous 37-adic tower, lambda = nu = 1",
            [] {
              return curve_levels_table(
                  "curve37-p37", IntPolynomial({37, -1, 1}), 37, 3, 1, 1,
                  {"1", "741", "13062"},
                  "y^2 = x^3-5 over F_37, 37-adic tower of non-37 parts");
            }}},
          {"curve125-p2",
           {"y^2=x^3+3x+3 / F_125: 2-adic tower, lambda = 2, nu = 4",
            curve125_p2}},
          {"curve5-p3",
           {"y^2=x^3+3x+3 / F_5: 3-adic tower limit (squares to -2)", curve5_p3}},
      };
  return tables;
}

}  // namespace

std::vector<std::string> table_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, rest] : registry()) ids.push_back(id);
  return ids;
}

std::string table_description(const std::string& id) {
  for (const auto& [tid, rest] : registry())
    if (tid == id) return rest.first;
  throw DomainError("unknown table id: " + id);
}

TableDoc run_table(const std::string& id) {
  for (const auto& [tid, rest] : registry())
    if (tid == id) return rest.second();
  throw DomainError("unknown table id: " + id);
}

}  // namespace cycres::cli
