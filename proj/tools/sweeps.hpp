#pragma once

// Exhaustive identity sweeps behind `logres verify`.

#include <string>
#include <vector>

namespace logres::cli {

struct SweepResult {
  std::string suite;
  int max_n = 0;
  int max_k = 0;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> counterexamples;  // first few failures, human readable
  std::vector<std::string> paths;            // computation routes compared
  bool passed() const { return failures == 0; }
};

struct SweepBounds {
  int max_n;
  int max_k;
};

SweepBounds default_bounds(const std::string& suite);
bool is_known_suite(const std::string& suite);

// a in [-5, 5]
SweepResult sweep_smooth(int max_n, int max_k);
// N in [2, 4], a in [-3, 3], plus order invariance of the retained components
SweepResult sweep_ncd(int max_n, int max_k);
// k in [1, max_k], d in [0, max_k], n in [2, max_n]
SweepResult sweep_delta(int max_n, int max_k);
// smooth routes for k <= max_k; NCD routes for N <= 3
SweepResult sweep_logchern(int max_n, int max_k);

SweepResult run_sweep(const std::string& suite, int max_n, int max_k);

}  // namespace logres::cli
