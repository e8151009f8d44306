#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deco/bijections.hpp"

namespace deco {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

/// Outcome of one exhaustive check. At most kKeptFailures failure entries
/// are stored; failure_count is always exact, and a report passes exactly
/// when it is zero.
struct Report {
  static constexpr std::size_t kKeptFailures = 10;

  std::string check_name;
  int n = 0;
  std::uint64_t total_cases = 0;
  std::vector<Failure> failures;
  std::uint64_t failure_count = 0;
  std::string notes;

  bool passed() const noexcept { return failure_count == 0; }
  void add_failure(std::string input, std::string expected, std::string actual);

  /// One-line structured record, stable field names.
  std::string line() const;

  /// Human-readable form: the structured line plus the kept failures.
  std::string text() const;
};

/// Exhaustive size cap for the checks below; a configuration value, not a
/// hard constant (the CLI reads DECO_MAX_N to override it).
inline constexpr int kDefaultCap = 8;

/// Maps all n! permutations, asserting image validity, pairwise-distinct
/// images and exact round trips through invert.
Report check_bijection(int n, BijectionId id, int cap = kDefaultCap);

/// Evaluates every statistic identity registered for the bijection over
/// all of S_n.
Report check_statistics(int n, BijectionId id, int cap = kDefaultCap);

/// Pointwise equivalence of 321-avoidance with parallelogram images under
/// phi2 and phi4, and all three counts against the Catalan number.
Report check_theorems(int n, int cap = kDefaultCap);

/// Audits the audited: the linear avoids_321 scan against a cubic
/// brute-force oracle over S_n, and the area statistic against a
/// rasterizing cell count over D_n. Both oracles are re-implementations
/// private to the harness, sharing no code with what they check.
Report check_oracles(int n, int cap = kDefaultCap);

/// Draws seeded codes, maps them through phi2 and chi-square-tests the
/// permutation tallies against uniform at significance 0.001 with n!-1
/// degrees of freedom. Requires n <= 6 so the bins stay tractable.
Report check_uniformity(int n, std::uint64_t samples, std::uint64_t seed);

} // namespace deco
