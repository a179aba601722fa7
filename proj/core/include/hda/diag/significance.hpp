/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <optional>
#include <span>

namespace hda::diag {

/// Two-sided paired t-test recipe: Sidak-corrected level, confidence
/// interval inflated before the zero-crossing verdict.
struct SignificanceConfig {
  double level = 0.95;      // confidence level
  double inflation = 1.25;  // CI half-width multiplier
  int n_tests = 1;          // independent tests for the Sidak correction

  void validate() const;
};

/// Sidak-corrected test level: 1 - level^(1/n).
double sidak_alpha(double level, int n_tests);

struct SignificanceResult {
  bool valid = false;  // false on degenerate inputs (missing verdict)
  bool significant = false;
  double mean = 0.0;
  double t_stat = 0.0;
  double half_width = 0.0;  // inflated CI half-width
  double pvalue = 1.0;      // raw two-sided p-value
  double corrected_alpha = 0.0;
};

/// Verdict on the mean of paired differences.
SignificanceResult significance(std::span<const double> paired_diffs,
                                const SignificanceConfig& cfg);

}  // namespace hda::diag
