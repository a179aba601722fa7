/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/diag/forecast.hpp"

#include <algorithm>
#include <cmath>

#include "hda/errors.hpp"

namespace hda::diag {

std::string to_string(VerifyAgainst v) {
  return v == VerifyAgainst::Truth ? "truth" : "own-analysis";
}

void ForecastConfig::validate() const {
  if (leads.empty()) throw ConfigError("ForecastConfig: no lead times");
  int prev = 0;
  for (int lead : leads) {
    if (lead <= prev) throw ConfigError("ForecastConfig: leads must be ascending and >= 1");
    prev = lead;
  }
  if (first_window < 0) throw ConfigError("ForecastConfig: negative first window");
}

RmseCurves forecast_rmse(const assim::CycleArchive& archive, const assim::NatureRun& nature,
                         const ForecastConfig& cfg, VerifyAgainst against) {
  cfg.validate();
  const int n_windows = archive.n_windows();
  const int max_lead = cfg.leads.back();
  const int last = cfg.last_window >= 0 ? cfg.last_window : n_windows - 1 - max_lead;
  if (last < cfg.first_window || last + max_lead > n_windows - 1 + (against == VerifyAgainst::Truth ? 1 : 0))
    throw ConfigError("forecast_rmse: window range does not fit the archive");
  if (against == VerifyAgainst::Truth && last + max_lead >= static_cast<int>(nature.window_starts.size()))
    throw ConfigError("forecast_rmse: nature run too short for requested leads");

  const dyn::OneScaleModel model(archive.model);
  const dyn::HybridConfig* corr = archive.corr ? &*archive.corr : nullptr;
  const Vector fixed_p = corr ? archive.corr->net.flatten() : Vector();
  const int steps = archive.model.steps_per_window;
  const double window_len = archive.model.window_length();

  RmseCurves curves;
  curves.leads = cfg.leads;
  const int n_launch = last - cfg.first_window + 1;
  curves.per_window.resize(n_launch, static_cast<int>(cfg.leads.size()));
  curves.windows.reserve(n_launch);

  for (int t = cfg.first_window; t <= last; ++t) {
    curves.windows.push_back(t);
    const auto& rec = archive.records[t];
    const Vector& p =
        archive.mode == assim::CycleMode::Nn4dvar ? rec.params : fixed_p;
    Vector state = rec.analysis;
    std::size_t lead_idx = 0;
    for (int ell = 1; ell <= max_lead; ++ell) {
      const double t0 = rec.t0 + (ell - 1) * window_len;
      // Correction updated at each window boundary from the forecast state.
      const dyn::HybridTrajectory traj(model, corr, corr ? p : Vector(), state, steps, t0);
      state = traj.states().back();
      if (lead_idx < cfg.leads.size() && cfg.leads[lead_idx] == ell) {
        const Vector& ref = against == VerifyAgainst::Truth
                                ? nature.window_starts[t + ell]
                                : archive.records[t + ell].analysis;
        curves.per_window(t - cfg.first_window, static_cast<int>(lead_idx)) =
            std::sqrt((state - ref).squaredNorm() / state.size());
        ++lead_idx;
      }
    }
  }

  curves.mean_rmse.resize(cfg.leads.size());
  for (std::size_t l = 0; l < cfg.leads.size(); ++l)
    curves.mean_rmse[l] = curves.per_window.col(static_cast<int>(l)).mean();
  return curves;
}

std::vector<double> analysis_rmse_series(const assim::CycleArchive& archive,
                                         const assim::NatureRun& nature) {
  if (archive.n_windows() > nature.n_windows())
    throw ConfigError("analysis_rmse_series: archive longer than nature run");
  std::vector<double> series;
  series.reserve(archive.n_windows());
  for (int w = 0; w < archive.n_windows(); ++w) {
    const Vector& truth = nature.window_starts[w];
    const Vector& xa = archive.records[w].analysis;
    series.push_back(std::sqrt((xa - truth).squaredNorm() / xa.size()));
  }
  return series;
}

double mean_over(const std::vector<double>& series, int first, int last) {
  if (first < 0 || last > static_cast<int>(series.size()) || first >= last)
    throw DimensionError("mean_over: bad range");
  double sum = 0.0;
  for (int i = first; i < last; ++i) sum += series[i];
  return sum / (last - first);
}

}  // namespace hda::diag
