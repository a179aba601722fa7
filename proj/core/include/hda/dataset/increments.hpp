/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hda/assim/cycling.hpp"
#include "hda/dataset/partition.hpp"
#include "hda/net/training.hpp"

namespace hda::dataset {

using net::Matrix;
using net::Vector;

/// One window's worth of column samples: per-site predictor vectors (state
/// stencil plus coordinate/time channels) and per-site increment targets.
struct IncrementPair {
  int window = 0;
  double t_input = 0.0;
  Matrix inputs;   // in_dim x n_sites, physical units
  Matrix targets;  // out_dim x n_sites, physical units
};

/// Pair list extracted from a cycling archive in one pairing mode.
struct PairSet {
  dyn::CorrectionMode mode = dyn::CorrectionMode::Prediction;
  int n_sites = 0;
  int stencil = 0;
  double t_cycle = 5.0;
  Vector site_weights;  // uniform on the ring
  std::vector<IncrementPair> pairs;
  std::uint64_t source_hash = 0;

  int in_dim() const { return 2 * stencil + 1 + 4; }
  int out_dim() const { return 1; }
};

/// Build pairs from an archive. Prediction mode: analysis(t) -> increment at
/// t+1 (one pair per window transition); post-processing mode: background(t)
/// -> increment at t (one pair per window).
PairSet make_pairs(const assim::CycleArchive& archive, dyn::CorrectionMode mode, int stencil,
                   double t_cycle);

/// Per-channel mean/std over the training split only; the four trailing
/// coordinate/time channels keep identity statistics.
net::NormStats fit_norm_stats(const PairSet& pairs, const SplitSpec& split);

/// Normalized column samples of one split, ready for training.
net::ColumnSamples to_samples(const PairSet& pairs, const SplitSpec& split, Split which,
                              const net::NormStats& stats);

/// Offline training loss: sum_t sum_i w_i || z_o - net(z_i) ||^2 over
/// normalized samples, with its parameter gradient.
double wmse_loss(const net::NetParams& params, const net::ColumnSamples& samples);
Vector wmse_grad(const net::NetParams& params, const net::ColumnSamples& samples);

/// Relative wMSE in physical units (network composed with normalization):
/// weighted squared prediction error over weighted squared target norm.
/// 1 for the zero predictor, 0 for perfect predictions.
double relative_wmse(const net::NetParams& params, const PairSet& pairs, const SplitSpec& split,
                     Split which);

/// Relative wMSE of selected output channels only.
double relative_wmse(const net::NetParams& params, const PairSet& pairs, const SplitSpec& split,
                     Split which, std::span<const int> var_subset);

}  // namespace hda::dataset
