/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hda/assim/cycling.hpp"
#include "hda/config/toml.hpp"
#include "hda/dataset/partition.hpp"
#include "hda/diag/forecast.hpp"
#include "hda/diag/significance.hpp"
#include "hda/net/training.hpp"

namespace hda::cfg {

/// Fully resolved experiment description. Field defaults are the default
/// OSSE; a TOML file overrides them section by section, and unknown keys are
/// hard errors. Archives embed the canonical re-emission (to_toml) so every
/// output is self-describing.
struct ExperimentConfig {
  // [model] shared dynamics constants (two-scale truth / one-scale forecast)
  dyn::ModelConfig model;

  // [truth]
  int truth_windows = 2200;
  int spinup_windows = 400;
  std::uint64_t truth_seed = 101;

  // [observations]
  std::vector<int> obs_steps = {5, 10};
  int obs_site_stride = 1;
  double obs_sigma = 0.1;
  std::uint64_t obs_seed = 202;

  // [covariance]
  assim::CovSpec covs;

  // [minimizer]
  assim::MinimizerConfig minimizer;

  // [network]
  std::vector<int> hidden_dims = {32, 32};
  int stencil = 0;
  double t_cycle = 5.0;
  std::uint64_t net_init_seed = 303;

  // [training]
  net::TrainConfig training;

  // [dataset]
  std::string dataset_mode = "prediction";  // or "post-processing"
  int windows_per_day = 2;
  int train_days = 760;
  std::string size_strategy = "old-and-new";
  int size_days = 0;  // 0 keeps the full training split

  // [cycling]
  int cycle_windows = 500;
  double background_noise = 0.15;
  std::uint64_t background_seed = 505;

  // [online]
  std::uint64_t scratch_seed = 606;
  double early_p_std = 0.0;  // optional larger parameter spread, first cycles
  int early_windows = 0;

  // [diagnostics]
  std::vector<int> leads = {1, 2, 4, 8};
  diag::SignificanceConfig significance;
  int sidak_tests = 0;  // 0 = one test per lead time
  int spectra_max_wavenumber = 0;  // 0 = (n_sites - 1) / 2
  double eval_fraction = 1.0 / 3.0;  // trailing fraction scored by `evaluate`

  // [paths] file names, resolved against the output root
  std::string out_dir;  // empty = $HDA_DATA_DIR or "."
  std::string nature_path = "nature.hda";
  std::string archive_path = "archive.hda";
  std::string dataset_path = "dataset.hda";
  std::string net_path = "net.fnn";
  std::vector<std::string> scorecard_experiments;
  std::string scorecard_reference;

  // [sweep]
  std::vector<double> sweep_fractions = {0.125, 0.25, 0.5, 1.0};
  std::vector<int> sweep_truncations = {4, 8, 0};  // 0 = full resolution
  std::vector<double> sweep_p_values = {1e-3, 5e-4, 1e-4};

  static ExperimentConfig from_toml(const TomlTable& table);
  static ExperimentConfig from_file(const std::string& path);

  /// Canonical TOML re-emission (deterministic ordering and formatting).
  std::string to_toml() const;

  /// Derived objects.
  assim::ObsConfig observations() const;
  dyn::HybridConfig hybrid(net::NetParams net) const;
  dyn::CorrectionMode correction_mode() const;
  int spectra_wavenumber() const;
  int sidak_test_count() const { return sidak_tests > 0 ? sidak_tests : static_cast<int>(leads.size()); }
  std::string resolve_path(const std::string& name) const;

  void validate() const;
};

}  // namespace hda::cfg
