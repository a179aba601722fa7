/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <string>
#include <vector>

#include "hda/dataset/increments.hpp"
#include "hda/diag/spectra.hpp"

namespace hda::diag {

/// Training-data size sensitivity: re-train on a shrinking training split
/// selected by the given strategy, score on the unchanged test split.
struct SizeSweepEntry {
  double fraction = 1.0;
  int train_days = 0;
  bool ok = false;
  std::string error;
  double test_rel_wmse = 0.0;
};

std::vector<SizeSweepEntry> size_sweep(const dataset::PairSet& pairs,
                                       const dataset::SplitSpec& split,
                                       const net::NetParams& init, const net::TrainConfig& tcfg,
                                       const std::vector<double>& fractions,
                                       dataset::SizeStrategy strategy, int jobs = 1);

/// Low-pass every pair's state and target fields at the given ring
/// wavenumber; the coordinate/time channels are untouched.
dataset::PairSet truncate_pair_fields(const dataset::PairSet& pairs, int max_wavenumber);

/// Training-resolution ladder: train on truncated data, evaluate spectra on
/// the full-resolution test split. truncation 0 means full resolution.
struct ResolutionSweepEntry {
  int truncation = 0;  // 0 = full
  bool ok = false;
  std::string error;
  double test_rel_wmse = 0.0;
  SpectraReport spectra;
};

std::vector<ResolutionSweepEntry> resolution_sweep(const dataset::PairSet& pairs,
                                                   const dataset::SplitSpec& split,
                                                   const net::NetParams& init,
                                                   const net::TrainConfig& tcfg,
                                                   const std::vector<int>& truncations,
                                                   int eval_max_wavenumber, int jobs = 1);

}  // namespace hda::diag
