/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "hda/net/network.hpp"

namespace hda::net {

/// Batch of column samples in normalized space. Each column of the matrices
/// is one sample; weights carry the latitude quadrature weight of the site
/// the sample came from.
struct ColumnSamples {
  Matrix inputs;   // in_dim x n
  Matrix targets;  // out_dim x n
  Vector weights;  // n

  int size() const { return static_cast<int>(weights.size()); }
};

struct TrainConfig {
  double learning_rate = 1e-3;
  int batch_size = 256;
  int max_epochs = 200;
  double dropout_rate = 0.1;
  int patience = 16;  // epochs without validation improvement before stopping
  std::uint64_t seed = 1;
};

struct TrainResult {
  NetParams params;  // best-epoch parameters, restored exactly
  int best_epoch = -1;
  int epochs_run = 0;
  std::vector<double> train_loss;  // weighted mean square per epoch
  std::vector<double> valid_loss;
};

/// Weighted mean-squared error of the network over samples (no dropout):
/// sum w ||target - net(input)||^2 / sum w.
double weighted_mse(const NetParams& params, const ColumnSamples& samples);

/// Offline training: Adam on minibatches with inverted dropout, early
/// stopping on the validation loss, best parameters restored on exit.
/// Identical seeds and inputs reproduce the result bit for bit.
TrainResult train_offline(const NetParams& init, const ColumnSamples& train,
                          const ColumnSamples& valid, const TrainConfig& cfg);

}  // namespace hda::net
