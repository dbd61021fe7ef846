#pragma once

// Randomized verification of the representation and variety invariants.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "knotchar/modular.hpp"
#include "knotchar/tolerance.hpp"
#include "knotchar/variety.hpp"

namespace knotchar {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::int64_t samples = 0;
  double worst_defect = 0.0;
  double tolerance = 0.0;
};

struct SuiteReport {
  KnotType kt;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  VarietyCounts counts;

  bool all_passed() const;
};

/// Engine for sample `index`; depends only on (seed, index).
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Draws used by the suite and the CLI. t has uniform argument and
/// |log |t|| <= min(log 1.25, 2 / mn), which keeps |t^mn| <= e^2;
/// r is uniform on [-2, 2]^2 and at least 0.05 away from 0 and 1.
Complex random_t(std::mt19937_64& rng, const KnotType& kt);
Complex random_r(std::mt19937_64& rng);
Word random_word(std::mt19937_64& rng, std::size_t max_length);

/// Runs, in order: constructor soundness, conjugation invariance,
/// double-ratio round trip, endpoint consistency, classification round
/// trip, nodal checks, count checks. Failures are recorded, not thrown.
SuiteReport run_suite(const KnotType& kt, std::int64_t samples, std::uint64_t seed,
                      const Tolerances& tol = {});

/// One line per check plus a summary line.
std::string format_report(const SuiteReport& report);

}  // namespace knotchar
