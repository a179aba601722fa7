/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/net/training.hpp"

#include <algorithm>
#include <numeric>

#include "hda/errors.hpp"
#include "hda/net/adam.hpp"

namespace hda::net {

double weighted_mse(const NetParams& params, const ColumnSamples& samples) {
  if (samples.size() == 0) throw DimensionError("weighted_mse: empty sample set");
  double loss = 0.0, wsum = 0.0;
  for (int s = 0; s < samples.size(); ++s) {
    const Vector out = forward(params, samples.inputs.col(s));
    loss += samples.weights[s] * (samples.targets.col(s) - out).squaredNorm();
    wsum += samples.weights[s];
  }
  return loss / wsum;
}

TrainResult train_offline(const NetParams& init, const ColumnSamples& train,
                          const ColumnSamples& valid, const TrainConfig& cfg) {
  if (train.size() == 0 || valid.size() == 0)
    throw DimensionError("train_offline: empty training or validation set");
  if (cfg.patience < 1) throw ConfigError("train_offline: patience must be >= 1");
  if (cfg.batch_size < 1) throw ConfigError("train_offline: batch size must be >= 1");

  NetParams params = init;
  Vector flat = params.flatten();
  AdamState adam(flat.size());
  Rng rng(cfg.seed);

  std::vector<int> order(train.size());
  std::iota(order.begin(), order.end(), 0);

  TrainResult result;
  Vector best_flat = flat;
  double best_valid = std::numeric_limits<double>::infinity();
  int since_best = 0;

  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    // Fisher-Yates with the archive RNG keeps the run reproducible.
    for (int i = train.size() - 1; i > 0; --i)
      std::swap(order[i], order[static_cast<int>(rng.below(i + 1))]);

    double epoch_loss = 0.0, epoch_wsum = 0.0;
    for (int start = 0; start < train.size(); start += cfg.batch_size) {
      const int end = std::min(start + cfg.batch_size, train.size());
      Vector grad = Vector::Zero(flat.size());
      const bool use_dropout = cfg.dropout_rate > 0.0;
      DropoutMask mask;
      for (int s = start; s < end; ++s) {
        const int idx = order[s];
        if (use_dropout) mask = DropoutMask::sample(params, cfg.dropout_rate, rng);
        const DropoutMask* mp = use_dropout ? &mask : nullptr;
        const Vector out = forward(params, train.inputs.col(idx), mp);
        const Vector resid = out - train.targets.col(idx);
        const double w = train.weights[idx];
        epoch_loss += w * resid.squaredNorm();
        epoch_wsum += w;
        grad += vjp(params, train.inputs.col(idx), 2.0 * w * resid, mp).grad_params;
      }
      grad /= static_cast<double>(end - start);
      adam_step(adam, flat, grad, cfg.learning_rate);
      params.unflatten(flat);
    }

    result.train_loss.push_back(epoch_loss / epoch_wsum);
    const double vloss = weighted_mse(params, valid);
    result.valid_loss.push_back(vloss);
    result.epochs_run = epoch + 1;

    if (vloss < best_valid) {
      best_valid = vloss;
      best_flat = flat;
      result.best_epoch = epoch;
      since_best = 0;
    } else {
      since_best += 1;
      if (since_best >= cfg.patience) break;
    }
  }

  params.unflatten(best_flat);
  result.params = std::move(params);
  return result;
}

}  // namespace hda::net
