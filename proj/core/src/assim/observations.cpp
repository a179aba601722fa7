/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/assim/observations.hpp"

#include <string>

#include "hda/errors.hpp"

namespace hda::assim {

void ObsConfig::validate(int n_sites, int steps_per_window) const {
  if (!(sigma_obs > 0.0)) throw ConfigError("ObsConfig: sigma_obs must be positive");
  for (const auto& batch : batches) {
    if (batch.step < 0 || batch.step > steps_per_window)
      throw ConfigError("ObsConfig: observation step " + std::to_string(batch.step) +
                        " outside window of " + std::to_string(steps_per_window) + " steps");
    for (int s : batch.sites)
      if (s < 0 || s >= n_sites)
        throw ConfigError("ObsConfig: site index " + std::to_string(s) + " out of range");
  }
}

ObsConfig ObsConfig::strided(int n_sites, std::span<const int> steps, int stride, double sigma) {
  if (stride < 1) throw ConfigError("ObsConfig: stride must be >= 1");
  ObsConfig cfg;
  cfg.sigma_obs = sigma;
  for (int step : steps) {
    Batch batch;
    batch.step = step;
    for (int s = 0; s < n_sites; s += stride) batch.sites.push_back(s);
    cfg.batches.push_back(std::move(batch));
  }
  return cfg;
}

int WindowObs::total_count() const {
  int n = 0;
  for (const auto& b : batches) n += static_cast<int>(b.sites.size());
  return n;
}

WindowObs make_observations(std::span<const Vector> window_states, const ObsConfig& cfg,
                            Rng& rng) {
  WindowObs obs;
  for (const auto& batch : cfg.batches) {
    if (batch.step >= static_cast<int>(window_states.size()))
      throw DimensionError("make_observations: trajectory shorter than observation step " +
                           std::to_string(batch.step));
    WindowObs::Batch out;
    out.step = batch.step;
    out.sites = batch.sites;
    out.values.resize(static_cast<Eigen::Index>(batch.sites.size()));
    for (std::size_t k = 0; k < batch.sites.size(); ++k)
      out.values[static_cast<Eigen::Index>(k)] =
          window_states[batch.step][batch.sites[k]] + cfg.sigma_obs * rng.gaussian();
    obs.batches.push_back(std::move(out));
  }
  return obs;
}

WindowObs make_observations(std::span<const Vector> window_states, const ObsConfig& cfg,
                            std::uint64_t seed) {
  Rng rng(seed);
  return make_observations(window_states, cfg, rng);
}

}  // namespace hda::assim
