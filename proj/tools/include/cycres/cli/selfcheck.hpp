#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cycres::cli {

struct SelfcheckOptions {
  int cases = 200;
  std::uint64_t seed = 77003;
  int max_degree = 5;
  long coeff_bound = 50;
  std::vector<unsigned long> primes = {2, 3, 5, 7};
  int digits = 6;
  int threads = 0;  // 0 = hardware concurrency
};

struct SelfcheckResult {
  int cases_run = 0;
  int towers_compared = 0;
  int vanishing_towers = 0;
  int failures = 0;
  std::vector<std::string> failure_notes;  // first few, deterministic order
  double seconds = 0.0;
};

// Randomized oracle-vs-formula agreement run: for every generated polynomial
// and prime, the two engines must agree to `digits` digits and the zero
// criterion (limit = 0 iff p | f(1)) must hold.  Deterministic for a fixed
// seed and independent of the thread count.
SelfcheckResult run_selfcheck(const SelfcheckOptions& options);

}  // namespace cycres::cli
