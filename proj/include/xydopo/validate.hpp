#pragma once

#include <string>
#include <vector>

namespace xydopo {

enum class ValidationLevel { Quick, Full };

struct ValidationOptions {
  ValidationLevel level = ValidationLevel::Quick;
  /// Added to every mapped detuning before the DOPO side is evaluated.
  /// Non-zero values exist only to prove the checks can fail.
  double perturbation = 0.0;
};

struct Check {
  std::string name;
  bool passed;
  double value;      // measured residual or quantity
  double threshold;  // pass bound on value
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;
  bool passed() const;
  int failures() const;
};

/// Quick: fixed spectral-match, energy-shift, closed-form, critical-point and
/// small-ring ED checks. Full adds 1000 random spectral draws, 100 random
/// energy-shift draws and the dense ED convergence table for n = 6..12.
/// Failures are collected, never thrown.
ValidationReport run_validate(const ValidationOptions& opts);

}  // namespace xydopo
