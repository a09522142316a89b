#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "assocgeom/field.hpp"
#include "assocgeom/report.hpp"

namespace asg {

struct RunConfig {
  Field field = Field::prime(2);
  std::size_t n = 3;
  std::uint64_t seed = 1;
  std::size_t budget = 1000;
  /// Enumerate all points instead of sampling wherever the geometry is small enough.
  bool exhaustive = false;
  /// Replace Γ by a table with two swapped outputs in the axiom suite; it must then fail.
  bool corrupt = false;
};

struct CheckLine {
  std::string suite;
  std::string name;
  std::string mode;  // "exhaustive", "sampled", or "skipped: <reason>"
  CheckResult result;

  bool skipped() const { return mode.rfind("skipped", 0) == 0; }
};

struct VerifyReport {
  RunConfig config;
  std::vector<CheckLine> lines;

  bool ok() const;
  /// One line per check, failures followed by their counterexample block; no timings.
  std::string text() const;
  std::string json() const;
  const CheckLine* find(const std::string& suite, const std::string& name) const;
};

/// Suites in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite, or every suite for "all". Throws kInvalidArgument for an unknown name.
VerifyReport run_verify(const std::string& suite, const RunConfig& config);

}  // namespace asg
