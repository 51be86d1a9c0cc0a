#include <cycres/cli/selfcheck.hpp>

#include <cycres/errors.hpp>
#include <cycres/limits.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

namespace cycres::cli {

namespace {

struct Case {
  int index;
  IntPolynomial f;
  unsigned long p;
};

struct CaseOutcome {
  bool vanishing = false;
  bool failed = false;
  std::string note;
};

CaseOutcome run_case(const Case& c, int digits) {
  CaseOutcome out;
  bool p_divides_f1 = mod_reduce(c.f.evaluate(1), BigInt(c.p)) == 0;
  try {
    LimitReport rep = tower_limit(c.f, c.p, digits, LimitMethod::kBoth);
    if (rep.agreement_digits < digits) {
      out.failed = true;
      out.note = "agreement below target";
    } else if (rep.limit_is_zero != p_divides_f1) {
      out.failed = true;
      out.note = "zero criterion violated";
    }
  } catch (const TowerVanishesError&) {
    out.vanishing = true;
    if (!p_divides_f1) {
      out.failed = true;
      out.note = "vanishing tower with p not dividing f(1)";
    }
  } catch (const std::exception& e) {
    out.failed = true;
    out.note = e.what();
  }
  if (out.failed) {
    out.note = "case " + std::to_string(c.index) + " f=" + c.f.to_string() +
               " p=" + std::to_string(c.p) + ": " + out.note;
  }
  return out;
}

}  // namespace

SelfcheckResult run_selfcheck(const SelfcheckOptions& options) {
  auto start = std::chrono::steady_clock::now();

  // generate the corpus up front so results do not depend on scheduling
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> deg_dist(0, options.max_degree);
  std::uniform_int_distribution<long> coeff_dist(-options.coeff_bound,
                                                 options.coeff_bound);
  std::vector<Case> cases;
  cases.reserve(static_cast<std::size_t>(options.cases) * options.primes.size());
  for (int i = 0; i < options.cases; ++i) {
    IntPolynomial f;
    do {
      int d = deg_dist(rng);
      std::vector<BigInt> coeffs(static_cast<std::size_t>(d) + 1);
      for (auto& c : coeffs) c = coeff_dist(rng);
      f = IntPolynomial(std::move(coeffs));
    } while (f.is_zero());
    for (unsigned long p : options.primes)
      cases.push_back({static_cast<int>(cases.size()), f, p});
  }

  std::vector<CaseOutcome> outcomes(cases.size());
  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, 16);
  if (threads <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i)
      outcomes[i] = run_case(cases[i], options.digits);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= cases.size()) return;
        outcomes[i] = run_case(cases[i], options.digits);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SelfcheckResult result;
  result.cases_run = options.cases;
  for (const auto& out : outcomes) {
    if (out.vanishing)
      ++result.vanishing_towers;
    else
      ++result.towers_compared;
    if (out.failed) {
      ++result.failures;
      if (result.failure_notes.size() < 10) result.failure_notes.push_back(out.note);
    }
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace cycres::cli
