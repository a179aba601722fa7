/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "hda/rng.hpp"

namespace hda::net {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Activation : std::uint8_t { Tanh = 0, Identity = 1 };

/// Per-channel normalization statistics. The trailing n_extra input channels
/// (coordinate/time predictors) carry identity statistics and pass through
/// unchanged.
struct NormStats {
  Vector in_mean, in_std;
  Vector out_mean, out_std;
  int n_extra = 0;

  static NormStats identity(int in_dim, int out_dim, int n_extra = 0);
  void validate() const;
};

/// Fully connected column network: tanh hidden layers, linear output.
/// Weights are stored per layer; the flattened parameter vector (weights
/// row-major then bias, layer-major) is the control-vector layout used by
/// Adam and by the variational minimizer.
class NetParams {
 public:
  NetParams() = default;
  /// Zero-initialized network with the given layer dimensions.
  explicit NetParams(std::vector<int> layer_dims);

  /// Glorot-uniform weights, zero biases, reproducible from the seed.
  static NetParams glorot(std::vector<int> layer_dims, std::uint64_t seed);

  const std::vector<int>& layer_dims() const { return dims_; }
  int n_layers() const { return static_cast<int>(weights_.size()); }
  int input_dim() const { return dims_.front(); }
  int output_dim() const { return dims_.back(); }

  Matrix& weight(int layer) { return weights_[layer]; }
  const Matrix& weight(int layer) const { return weights_[layer]; }
  Vector& bias(int layer) { return biases_[layer]; }
  const Vector& bias(int layer) const { return biases_[layer]; }
  Activation activation(int layer) const { return activations_[layer]; }

  NormStats& norm() { return norm_; }
  const NormStats& norm() const { return norm_; }

  std::int64_t n_params() const;
  Vector flatten() const;
  void unflatten(const Vector& flat);

 private:
  std::vector<int> dims_;
  std::vector<Matrix> weights_;
  std::vector<Vector> biases_;
  std::vector<Activation> activations_;
  NormStats norm_;
};

/// Exact scalar parameter count for the given layer dimensions.
std::int64_t param_count(const std::vector<int>& layer_dims);

/// Inverted-dropout mask: keep flags per hidden layer, survivors scaled by
/// 1/(1-rate). Sampled fresh per training batch; absent at inference.
struct DropoutMask {
  double rate = 0.0;
  std::vector<Vector> keep;  // one per hidden layer, entries 0 or 1

  static DropoutMask sample(const NetParams& params, double rate, Rng& rng);
};

/// Deterministic forward pass in normalized space; a mask enables dropout.
Vector forward(const NetParams& params, const Vector& input,
               const DropoutMask* mask = nullptr);

struct VjpResult {
  Vector grad_params;  // flattened layout
  Vector grad_input;
};

/// Reverse-mode products for cotangent^T * output.
VjpResult vjp(const NetParams& params, const Vector& input, const Vector& cotangent,
              const DropoutMask* mask = nullptr);

/// Forward-mode directional derivative in (input, params).
/// Either tangent may be empty (treated as zero).
Vector jvp(const NetParams& params, const Vector& input, const Vector& tangent_input,
           const Vector& tangent_params);

/// Channelwise (x - mean) / std; extra predictor channels pass unchanged.
Vector normalize_input(const Vector& x, const NormStats& stats);
Vector normalize_output(const Vector& y, const NormStats& stats);
Vector denormalize_output(const Vector& z, const NormStats& stats);

/// Network composed with normalization: physical input -> physical output.
Vector forward_phys(const NetParams& params, const Vector& input);
VjpResult vjp_phys(const NetParams& params, const Vector& input, const Vector& cotangent);
Vector jvp_phys(const NetParams& params, const Vector& input, const Vector& tangent_input,
                const Vector& tangent_params);

}  // namespace hda::net
