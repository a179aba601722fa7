/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/dataset/increments.hpp"

#include <cmath>

#include "hda/dyn/hybrid.hpp"
#include "hda/errors.hpp"

namespace hda::dataset {

PairSet make_pairs(const assim::CycleArchive& archive, dyn::CorrectionMode mode, int stencil,
                   double t_cycle) {
  const int n_windows = archive.n_windows();
  if (n_windows < 2) throw ConfigError("make_pairs: archive needs at least 2 windows");

  PairSet set;
  set.mode = mode;
  set.n_sites = archive.n_sites();
  set.stencil = stencil;
  set.t_cycle = t_cycle;
  set.site_weights = Vector::Ones(set.n_sites);

  const auto& rec = archive.records;
  if (mode == dyn::CorrectionMode::Prediction) {
    // analysis(t) -> analysis(t+1) - background(t+1)
    for (int t = 0; t + 1 < n_windows; ++t) {
      IncrementPair pair;
      pair.window = t;
      pair.t_input = rec[t].t0;
      pair.inputs = dyn::column_inputs(rec[t].analysis, rec[t].t0, stencil, t_cycle);
      pair.targets = rec[t + 1].increment.transpose();
      set.pairs.push_back(std::move(pair));
    }
  } else {
    // background(t) -> analysis(t) - background(t)
    for (int t = 0; t < n_windows; ++t) {
      IncrementPair pair;
      pair.window = t;
      pair.t_input = rec[t].t0;
      pair.inputs = dyn::column_inputs(rec[t].background, rec[t].t0, stencil, t_cycle);
      pair.targets = rec[t].increment.transpose();
      set.pairs.push_back(std::move(pair));
    }
  }
  return set;
}

namespace {

bool in_split(const PairSet& set, const SplitSpec& split, Split which, const IncrementPair& pair) {
  // Prediction-mode targets live at window t+1; label pairs by the target
  // window so validation/tests never leak training-era increments.
  const int label_window =
      set.mode == dyn::CorrectionMode::Prediction ? pair.window + 1 : pair.window;
  return split.window_label(label_window) == which;
}

}  // namespace

net::NormStats fit_norm_stats(const PairSet& set, const SplitSpec& split) {
  const int in_dim = set.in_dim(), out_dim = set.out_dim();
  const int n_state_channels = in_dim - 4;

  double count = 0.0;
  Vector in_sum = Vector::Zero(in_dim), in_sq = Vector::Zero(in_dim);
  Vector out_sum = Vector::Zero(out_dim), out_sq = Vector::Zero(out_dim);
  for (const auto& pair : set.pairs) {
    if (!in_split(set, split, Split::Train, pair)) continue;
    for (int i = 0; i < set.n_sites; ++i) {
      in_sum += pair.inputs.col(i);
      in_sq += pair.inputs.col(i).cwiseAbs2();
      out_sum += pair.targets.col(i);
      out_sq += pair.targets.col(i).cwiseAbs2();
      count += 1.0;
    }
  }
  if (count == 0.0) throw ConfigError("fit_norm_stats: empty training split");

  net::NormStats stats = net::NormStats::identity(in_dim, out_dim, 4);
  auto finish = [&](Vector& mean, Vector& std_out, const Vector& sum, const Vector& sq,
                    int n_channels, const char* what) {
    for (int c = 0; c < n_channels; ++c) {
      const double m = sum[c] / count;
      const double var = sq[c] / count - m * m;
      const double sd = std::sqrt(std::max(var, 0.0));
      if (sd <= 1e-13 * (std::abs(m) + 1.0))
        throw NumericsError(std::string("fit_norm_stats: zero-variance ") + what + " channel " +
                            std::to_string(c));
      mean[c] = m;
      std_out[c] = sd;
    }
  };
  finish(stats.in_mean, stats.in_std, in_sum, in_sq, n_state_channels, "input");
  finish(stats.out_mean, stats.out_std, out_sum, out_sq, out_dim, "target");
  return stats;
}

net::ColumnSamples to_samples(const PairSet& set, const SplitSpec& split, Split which,
                              const net::NormStats& stats) {
  stats.validate();
  int n = 0;
  for (const auto& pair : set.pairs)
    if (in_split(set, split, which, pair)) n += set.n_sites;
  if (n == 0) throw ConfigError("to_samples: split '" + to_string(which) + "' is empty");

  net::ColumnSamples samples;
  samples.inputs.resize(set.in_dim(), n);
  samples.targets.resize(set.out_dim(), n);
  samples.weights.resize(n);
  int col = 0;
  for (const auto& pair : set.pairs) {
    if (!in_split(set, split, which, pair)) continue;
    for (int i = 0; i < set.n_sites; ++i, ++col) {
      samples.inputs.col(col) =
          ((pair.inputs.col(i) - stats.in_mean).array() / stats.in_std.array()).matrix();
      samples.targets.col(col) =
          ((pair.targets.col(i) - stats.out_mean).array() / stats.out_std.array()).matrix();
      samples.weights[col] = set.site_weights[i];
    }
  }
  return samples;
}

double wmse_loss(const net::NetParams& params, const net::ColumnSamples& samples) {
  double loss = 0.0;
  for (int s = 0; s < samples.size(); ++s) {
    const Vector out = net::forward(params, samples.inputs.col(s));
    loss += samples.weights[s] * (samples.targets.col(s) - out).squaredNorm();
  }
  return loss;
}

Vector wmse_grad(const net::NetParams& params, const net::ColumnSamples& samples) {
  Vector grad = Vector::Zero(params.n_params());
  for (int s = 0; s < samples.size(); ++s) {
    const Vector out = net::forward(params, samples.inputs.col(s));
    const Vector resid = out - samples.targets.col(s);
    grad += net::vjp(params, samples.inputs.col(s), 2.0 * samples.weights[s] * resid).grad_params;
  }
  return grad;
}

double relative_wmse(const net::NetParams& params, const PairSet& pairs, const SplitSpec& split,
                     Split which) {
  return relative_wmse(params, pairs, split, which, {});
}

double relative_wmse(const net::NetParams& params, const PairSet& set, const SplitSpec& split,
                     Split which, std::span<const int> var_subset) {
  double err = 0.0, ref = 0.0;
  auto accum = [&](const Vector& pred, const Vector& target, double w) {
    if (var_subset.empty()) {
      err += w * (target - pred).squaredNorm();
      ref += w * target.squaredNorm();
    } else {
      for (int c : var_subset) {
        const double d = target[c] - pred[c];
        err += w * d * d;
        ref += w * target[c] * target[c];
      }
    }
  };
  for (const auto& pair : set.pairs) {
    if (!in_split(set, split, which, pair)) continue;
    for (int i = 0; i < set.n_sites; ++i)
      accum(net::forward_phys(params, pair.inputs.col(i)), pair.targets.col(i),
            set.site_weights[i]);
  }
  if (ref == 0.0) throw NumericsError("relative_wmse: zero target norm over the split");
  return err / ref;
}

}  // namespace hda::dataset
