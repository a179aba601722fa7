/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "hda/assim/cycling.hpp"

namespace hda::diag {

enum class VerifyAgainst : std::uint8_t { Truth = 0, OwnAnalysis = 1 };

std::string to_string(VerifyAgainst v);

struct ForecastConfig {
  std::vector<int> leads;  // lead times in windows, ascending, >= 1
  int first_window = 0;
  int last_window = -1;  // inclusive launch window; -1 picks the largest usable

  void validate() const;
};

/// Forecast-error curves from cycled analyses. Forecasts run the archive's
/// model; the network correction is recomputed at every window boundary from
/// the current forecast state with the launch window's parameters.
struct RmseCurves {
  std::vector<int> leads;
  std::vector<int> windows;  // launch windows
  net::Matrix per_window;    // launches x leads, spatial RMSE
  std::vector<double> mean_rmse;
};

RmseCurves forecast_rmse(const assim::CycleArchive& archive, const assim::NatureRun& nature,
                         const ForecastConfig& cfg, VerifyAgainst against);

/// Spatial RMSE of each analysis against the OSSE truth, one value per
/// window.
std::vector<double> analysis_rmse_series(const assim::CycleArchive& archive,
                                         const assim::NatureRun& nature);

/// Window-mean of a series over [first, last).
double mean_over(const std::vector<double>& series, int first, int last);

}  // namespace hda::diag
