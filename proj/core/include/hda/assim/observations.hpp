/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hda/dyn/lorenz96.hpp"
#include "hda/rng.hpp"

namespace hda::assim {

using dyn::Vector;

/// Observation layout within a window: which sites are seen at which step
/// indices, and the error standard deviation used to perturb the truth.
struct ObsConfig {
  struct Batch {
    int step;                // step index in [0, steps_per_window]
    std::vector<int> sites;  // observed slow-variable indices
  };
  std::vector<Batch> batches;
  double sigma_obs = 1.0;

  void validate(int n_sites, int steps_per_window) const;

  /// Every stride-th site observed at each of the given steps.
  static ObsConfig strided(int n_sites, std::span<const int> steps, int stride, double sigma);
};

/// Observations drawn for one window.
struct WindowObs {
  struct Batch {
    int step;
    std::vector<int> sites;
    Vector values;
  };
  std::vector<Batch> batches;

  int total_count() const;
};

/// Sample truth at the configured times/sites and add N(0, sigma^2) noise.
/// window_states holds the slow state at steps 0..steps_per_window.
WindowObs make_observations(std::span<const Vector> window_states, const ObsConfig& cfg,
                            Rng& rng);
WindowObs make_observations(std::span<const Vector> window_states, const ObsConfig& cfg,
                            std::uint64_t seed);

}  // namespace hda::assim
