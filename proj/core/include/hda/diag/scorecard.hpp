/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hda/diag/forecast.hpp"
#include "hda/diag/significance.hpp"

namespace hda::diag {

struct ScorecardCell {
  std::string variable;
  int lead = 0;
  double rmse_change_pct = 0.0;  // 100 (rmse_exp - rmse_ref) / rmse_ref
  bool significant = false;
  std::optional<double> pvalue;  // missing on degenerate samples
};

struct Scorecard {
  std::string experiment;
  std::string reference;
  std::vector<ScorecardCell> cells;  // ordered by (variable, lead)
};

/// Normalized forecast-RMSE change of one experiment against a reference,
/// with a paired significance verdict per (variable, lead) cell. The two
/// curve sets must share launch windows and leads.
Scorecard make_scorecard(const RmseCurves& experiment, const RmseCurves& reference,
                         const std::string& experiment_id, const std::string& reference_id,
                         const std::string& variable, const SignificanceConfig& scfg);

}  // namespace hda::diag
