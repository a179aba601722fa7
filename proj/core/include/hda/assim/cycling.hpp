/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hda/assim/variational.hpp"

namespace hda::assim {

/// OSSE nature run: two-scale truth states at window starts, plus the
/// observation draws for every window.
struct NatureRun {
  dyn::ModelConfig model;
  ObsConfig obs_cfg;
  std::vector<Vector> window_starts;  // slow states, n_windows + 1 entries
  std::vector<WindowObs> obs;         // n_windows entries
  std::uint64_t state_seed = 0;
  std::uint64_t obs_seed = 0;
  std::string config_text;

  int n_windows() const { return static_cast<int>(obs.size()); }
};

/// Integrate the two-scale truth after spin-up and draw observations.
NatureRun generate_nature(const dyn::ModelConfig& cfg, const ObsConfig& obs_cfg, int n_windows,
                          int spinup_windows, std::uint64_t state_seed, std::uint64_t obs_seed);

enum class CycleMode : std::uint8_t { Sc = 0, ScFixedNet = 1, Nn4dvar = 2 };

std::string to_string(CycleMode mode);
CycleMode cycle_mode_from_string(const std::string& s);

/// Per-window archive entry.
struct CycleRecord {
  double t0 = 0.0;
  Vector background;
  Vector analysis;
  Vector increment;  // analysis - background
  Vector forcing;    // network correction applied over the window (zero for sc)
  WindowObs obs;
  Vector params;  // analysis parameters (nn4dvar mode only)
};

struct CycleArchive {
  CycleMode mode = CycleMode::Sc;
  dyn::ModelConfig model;
  std::optional<dyn::HybridConfig> corr;  // architecture + normalization; net
                                          // weights hold the initial/fixed p
  std::vector<CycleRecord> records;
  std::vector<std::pair<std::string, std::uint64_t>> seeds;
  std::string config_text;

  int n_windows() const { return static_cast<int>(records.size()); }
  int n_sites() const { return model.n_sites; }
};

struct CycleSetup {
  dyn::ModelConfig model;  // forecast model
  CovSpec covs;
  MinimizerConfig minimizer;
  std::optional<dyn::HybridConfig> corr;
  double background_noise = 1.0;  // std of the initial background perturbation
  std::uint64_t background_seed = 7;
  std::optional<Vector> first_background;  // overrides the perturbed truth draw
  double t_start = 0.0;                    // clock of the first window
};

/// Sequential cycling: minimize, archive the increment and applied forcing,
/// propagate the analysis with the window's model to form the next
/// background; in nn4dvar mode the parameter background persists (pb <- pa).
CycleArchive run_cycles(CycleMode mode, const NatureRun& nature, int n_windows,
                        const CycleSetup& setup);

}  // namespace hda::assim
