/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <optional>
#include <vector>

#include "hda/dataset/increments.hpp"

namespace hda::diag {

using net::Vector;

/// Per-window skill of a trained network over a pair set.
struct TemporalScore {
  int window = 0;
  double relative_wmse = 0.0;
  std::optional<double> pearson;  // missing when either field has zero variance
};

/// Relative wMSE and Pearson correlation over space, one entry per pair of
/// the chosen split.
std::vector<TemporalScore> temporal_scores(const net::NetParams& params,
                                           const dataset::PairSet& pairs,
                                           const dataset::SplitSpec& split, dataset::Split which);

/// Weighted spatial-moment comparison of one prediction/target field pair.
struct BiasVariance {
  double wmse = 0.0;        // sum w (pred - target)^2
  double bias = 0.0;        // weighted mean of (pred - target)
  double bias_share = 0.0;  // squared-bias contribution to the wMSE, in [0, 1]
  double target_variance = 0.0;
  double prediction_variance = 0.0;
  std::optional<double> variance_ratio;  // target/prediction, missing if degenerate
};

BiasVariance bias_variance_decomposition(const Vector& predictions, const Vector& targets,
                                         const Vector& weights);

/// Pearson correlation between two fields over space; missing on zero
/// variance.
std::optional<double> pearson(const Vector& a, const Vector& b);

}  // namespace hda::diag
