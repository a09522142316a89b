#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

namespace asg {

/// Outcome of one sampled or exhaustive property check.
struct CheckResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> witness;  // first counterexample, as text

  bool ok() const noexcept { return failures == 0; }

  void record(bool passed, const std::function<std::string()>& describe) {
    ++cases;
    if (passed) return;
    ++failures;
    if (!witness) witness = describe();
  }

  CheckResult& operator+=(const CheckResult& other) {
    cases += other.cases;
    failures += other.failures;
    if (!witness) witness = other.witness;
    return *this;
  }
};

}  // namespace asg
