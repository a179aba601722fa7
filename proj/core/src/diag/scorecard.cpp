/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/diag/scorecard.hpp"

#include "hda/errors.hpp"

namespace hda::diag {

Scorecard make_scorecard(const RmseCurves& experiment, const RmseCurves& reference,
                         const std::string& experiment_id, const std::string& reference_id,
                         const std::string& variable, const SignificanceConfig& scfg) {
  if (experiment.leads != reference.leads)
    throw ConfigError("scorecard: experiments use different lead times");
  if (experiment.windows != reference.windows)
    throw ConfigError("scorecard: experiments cover different cycle sets");

  Scorecard card;
  card.experiment = experiment_id;
  card.reference = reference_id;
  const int n_launch = static_cast<int>(experiment.windows.size());
  for (std::size_t l = 0; l < experiment.leads.size(); ++l) {
    ScorecardCell cell;
    cell.variable = variable;
    cell.lead = experiment.leads[l];
    const double ref = reference.mean_rmse[l];
    if (!(ref > 0.0)) throw NumericsError("scorecard: reference RMSE is zero at a lead time");
    cell.rmse_change_pct = 100.0 * (experiment.mean_rmse[l] - ref) / ref;

    std::vector<double> diffs(n_launch);
    for (int t = 0; t < n_launch; ++t)
      diffs[t] = experiment.per_window(t, static_cast<int>(l)) -
                 reference.per_window(t, static_cast<int>(l));
    const SignificanceResult sig = significance(diffs, scfg);
    cell.significant = sig.valid && sig.significant;
    if (sig.valid) cell.pvalue = sig.pvalue;
    card.cells.push_back(std::move(cell));
  }
  return card;
}

}  // namespace hda::diag
