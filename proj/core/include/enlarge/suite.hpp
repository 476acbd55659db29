#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enlarge/scalar.hpp"

namespace enlarge::suite {

struct SuiteOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  ArithMode mode = ArithMode::Float;
  unsigned threads = 0;              ///< 0: hardware concurrency
  std::vector<std::string> only;     ///< property-name prefixes; empty runs all
};

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t boundary = 0;          ///< trials excluded as tolerance-boundary cases
  std::string counterexample;        ///< first failing instance, serialized
  double elapsed_ms = 0.0;
};

struct SuiteReport {
  ArithMode mode = ArithMode::Float;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  double elapsed_ms = 0.0;

  bool passed() const;
  std::size_t failures() const;
};

std::vector<std::string> property_names();

/// Trials are independent and seeded from (seed, property name, index); the
/// report does not depend on the thread count.
SuiteReport run_suite(const SuiteOptions& options);

/// YAML text; timing fields are omitted when include_timing is false.
std::string format_report(const SuiteReport& report, bool include_timing = true);

}  // namespace enlarge::suite
