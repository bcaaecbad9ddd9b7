#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qconvex {

enum class SweepSuite { spectrum_equivalence, tmin_bound, contraction_identity, bres_bound, torus_sharpness };

std::string_view to_string(SweepSuite s);
std::optional<SweepSuite> sweep_suite_from_string(std::string_view s);
std::vector<SweepSuite> all_sweep_suites();

struct SweepConfig {
  std::uint64_t seed = 42;
  int n_min = 3;
  int n_max = 6;
  int samples = 1000;
  std::vector<SweepSuite> suites;  ///< empty: every suite
  unsigned threads = 0;            ///< 0: hardware concurrency
};

struct SuiteResult {
  std::string suite;
  double tolerance = 0.0;
  int samples = 0;
  int passed = 0;
  int failed = 0;
  double max_violation = 0.0;
  std::optional<int> first_counterexample;               ///< sample index
  std::optional<std::uint64_t> counterexample_seed;      ///< seed of that sample's stream

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

struct SweepReport {
  std::string version;
  std::uint64_t seed = 0;
  int n_min = 0;
  int n_max = 0;
  int samples = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Executes the randomized property suites. Output depends only on the config
/// (not on thread count). Throws DomainError on an invalid n range or sample count.
SweepReport random_sweep(const SweepConfig& config);

std::string render_structured(const SweepReport& r);
std::string render_text(const SweepReport& r);

}  // namespace qconvex
