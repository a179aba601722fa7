/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/diag/scores.hpp"

#include <cmath>

#include "hda/errors.hpp"

namespace hda::diag {

std::optional<double> pearson(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("pearson: length mismatch");
  const auto n = static_cast<double>(a.size());
  if (n < 2) throw DimensionError("pearson: need at least 2 points");
  const double ma = a.mean(), mb = b.mean();
  const Vector da = a.array() - ma, db = b.array() - mb;
  const double va = da.squaredNorm(), vb = db.squaredNorm();
  if (va == 0.0 || vb == 0.0) return std::nullopt;
  return da.dot(db) / std::sqrt(va * vb);
}

std::vector<TemporalScore> temporal_scores(const net::NetParams& params,
                                           const dataset::PairSet& set,
                                           const dataset::SplitSpec& split, dataset::Split which) {
  std::vector<TemporalScore> scores;
  for (const auto& pair : set.pairs) {
    const int label_window =
        set.mode == dyn::CorrectionMode::Prediction ? pair.window + 1 : pair.window;
    if (split.window_label(label_window) != which) continue;

    Vector pred(set.n_sites), target(set.n_sites);
    for (int i = 0; i < set.n_sites; ++i) {
      pred[i] = net::forward_phys(params, pair.inputs.col(i))[0];
      target[i] = pair.targets(0, i);
    }
    double err = 0.0, ref = 0.0;
    for (int i = 0; i < set.n_sites; ++i) {
      const double w = set.site_weights[i];
      err += w * (pred[i] - target[i]) * (pred[i] - target[i]);
      ref += w * target[i] * target[i];
    }
    TemporalScore score;
    score.window = pair.window;
    score.relative_wmse = ref > 0.0 ? err / ref : 0.0;
    score.pearson = pearson(pred, target);
    scores.push_back(score);
  }
  return scores;
}

BiasVariance bias_variance_decomposition(const Vector& predictions, const Vector& targets,
                                         const Vector& weights) {
  if (predictions.size() != targets.size() || predictions.size() != weights.size())
    throw DimensionError("bias_variance_decomposition: length mismatch");
  const double wsum = weights.sum();
  if (!(wsum > 0.0)) throw DimensionError("bias_variance_decomposition: zero total weight");

  auto moments = [&](const Vector& f) {
    const double mean = weights.dot(f) / wsum;
    const double var = (weights.array() * (f.array() - mean).square()).sum() / wsum;
    return std::pair{mean, var};
  };
  const auto [mt, vt] = moments(targets);
  const auto [mp, vp] = moments(predictions);
  if (vt == 0.0) throw NumericsError("bias_variance_decomposition: degenerate targets");

  BiasVariance out;
  const Vector diff = predictions - targets;
  out.wmse = (weights.array() * diff.array().square()).sum();
  out.bias = weights.dot(diff) / wsum;
  out.bias_share = out.wmse > 0.0 ? out.bias * out.bias * wsum / out.wmse : 0.0;
  out.target_variance = vt;
  out.prediction_variance = vp;
  if (vp > 0.0) out.variance_ratio = vt / vp;
  return out;
}

}  // namespace hda::diag
