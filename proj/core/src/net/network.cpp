/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/net/network.hpp"

#include <cmath>
#include <string>

#include "hda/errors.hpp"

namespace hda::net {

NormStats NormStats::identity(int in_dim, int out_dim, int n_extra) {
  NormStats s;
  s.in_mean = Vector::Zero(in_dim);
  s.in_std = Vector::Ones(in_dim);
  s.out_mean = Vector::Zero(out_dim);
  s.out_std = Vector::Ones(out_dim);
  s.n_extra = n_extra;
  return s;
}

void NormStats::validate() const {
  for (int c = 0; c < in_std.size(); ++c)
    if (!(in_std[c] > 0.0))
      throw NumericsError("normalization: non-positive std for input channel " + std::to_string(c));
  for (int c = 0; c < out_std.size(); ++c)
    if (!(out_std[c] > 0.0))
      throw NumericsError("normalization: non-positive std for output channel " + std::to_string(c));
}

NetParams::NetParams(std::vector<int> layer_dims) : dims_(std::move(layer_dims)) {
  if (dims_.size() < 2) throw DimensionError("NetParams: need at least two layer dims");
  for (int d : dims_)
    if (d < 1) throw DimensionError("NetParams: layer dims must be positive");
  const int n_layers = static_cast<int>(dims_.size()) - 1;
  for (int l = 0; l < n_layers; ++l) {
    weights_.emplace_back(Matrix::Zero(dims_[l + 1], dims_[l]));
    biases_.emplace_back(Vector::Zero(dims_[l + 1]));
    activations_.push_back(l + 1 < n_layers ? Activation::Tanh : Activation::Identity);
  }
  norm_ = NormStats::identity(dims_.front(), dims_.back());
}

NetParams NetParams::glorot(std::vector<int> layer_dims, std::uint64_t seed) {
  NetParams p(std::move(layer_dims));
  Rng rng(seed);
  for (int l = 0; l < p.n_layers(); ++l) {
    Matrix& w = p.weight(l);
    const double limit = std::sqrt(6.0 / (w.cols() + w.rows()));
    for (Eigen::Index i = 0; i < w.rows(); ++i)
      for (Eigen::Index j = 0; j < w.cols(); ++j) w(i, j) = rng.uniform(-limit, limit);
  }
  return p;
}

std::int64_t NetParams::n_params() const { return param_count(dims_); }

Vector NetParams::flatten() const {
  Vector flat(n_params());
  std::int64_t pos = 0;
  for (int l = 0; l < n_layers(); ++l) {
    const Matrix& w = weights_[l];
    for (Eigen::Index i = 0; i < w.rows(); ++i)
      for (Eigen::Index j = 0; j < w.cols(); ++j) flat[pos++] = w(i, j);
    for (Eigen::Index i = 0; i < biases_[l].size(); ++i) flat[pos++] = biases_[l][i];
  }
  return flat;
}

void NetParams::unflatten(const Vector& flat) {
  if (flat.size() != n_params())
    throw DimensionError("unflatten: expected " + std::to_string(n_params()) + " parameters, got " +
                         std::to_string(flat.size()));
  std::int64_t pos = 0;
  for (int l = 0; l < n_layers(); ++l) {
    Matrix& w = weights_[l];
    for (Eigen::Index i = 0; i < w.rows(); ++i)
      for (Eigen::Index j = 0; j < w.cols(); ++j) w(i, j) = flat[pos++];
    for (Eigen::Index i = 0; i < biases_[l].size(); ++i) biases_[l][i] = flat[pos++];
  }
}

std::int64_t param_count(const std::vector<int>& layer_dims) {
  if (layer_dims.size() < 2) throw DimensionError("param_count: need at least two layer dims");
  std::int64_t total = 0;
  for (std::size_t l = 0; l + 1 < layer_dims.size(); ++l)
    total += static_cast<std::int64_t>(layer_dims[l]) * layer_dims[l + 1] + layer_dims[l + 1];
  return total;
}

DropoutMask DropoutMask::sample(const NetParams& params, double rate, Rng& rng) {
  if (rate < 0.0 || rate >= 1.0) throw ConfigError("dropout rate must be in [0, 1)");
  DropoutMask mask;
  mask.rate = rate;
  for (int l = 0; l + 1 < params.n_layers(); ++l) {
    Vector keep(params.layer_dims()[l + 1]);
    for (Eigen::Index i = 0; i < keep.size(); ++i) keep[i] = rng.uniform() < rate ? 0.0 : 1.0;
    mask.keep.push_back(std::move(keep));
  }
  return mask;
}

namespace {

void check_input(const NetParams& params, const Vector& input) {
  if (input.size() != params.input_dim())
    throw DimensionError("network input length " + std::to_string(input.size()) +
                         " does not match first layer dim " + std::to_string(params.input_dim()));
}

inline void apply_mask(Vector& h, const DropoutMask* mask, int hidden_layer) {
  if (!mask) return;
  const double scale = 1.0 / (1.0 - mask->rate);
  h.array() *= mask->keep[hidden_layer].array() * scale;
}

}  // namespace

Vector forward(const NetParams& params, const Vector& input, const DropoutMask* mask) {
  check_input(params, input);
  Vector h = input;
  for (int l = 0; l < params.n_layers(); ++l) {
    Vector z = params.weight(l) * h + params.bias(l);
    if (params.activation(l) == Activation::Tanh) {
      h = z.array().tanh().matrix();
      apply_mask(h, mask, l);
    } else {
      h = std::move(z);
    }
  }
  return h;
}

VjpResult vjp(const NetParams& params, const Vector& input, const Vector& cotangent,
              const DropoutMask* mask) {
  check_input(params, input);
  if (cotangent.size() != params.output_dim())
    throw DimensionError("vjp: cotangent length does not match output dim");

  const int n_layers = params.n_layers();
  std::vector<Vector> acts;  // post-activation (post-mask) per layer, acts[0] = input
  acts.reserve(n_layers + 1);
  acts.push_back(input);
  std::vector<Vector> tanh_vals(n_layers);  // pre-mask tanh values for hidden layers
  for (int l = 0; l < n_layers; ++l) {
    Vector z = params.weight(l) * acts.back() + params.bias(l);
    if (params.activation(l) == Activation::Tanh) {
      tanh_vals[l] = z.array().tanh().matrix();
      Vector h = tanh_vals[l];
      apply_mask(h, mask, l);
      acts.push_back(std::move(h));
    } else {
      acts.push_back(std::move(z));
    }
  }

  VjpResult result;
  result.grad_params = Vector::Zero(params.n_params());

  // Layer offsets in the flattened layout.
  std::vector<std::int64_t> offsets(n_layers);
  std::int64_t pos = 0;
  for (int l = 0; l < n_layers; ++l) {
    offsets[l] = pos;
    pos += params.weight(l).size() + params.bias(l).size();
  }

  Vector delta = cotangent;  // gradient wrt post-activation of current layer
  for (int l = n_layers - 1; l >= 0; --l) {
    Vector dz;  // gradient wrt pre-activation z_l
    if (params.activation(l) == Activation::Tanh) {
      Vector d = delta;
      apply_mask(d, mask, l);  // mask scaling is linear, same factor backwards
      dz = (d.array() * (1.0 - tanh_vals[l].array().square())).matrix();
    } else {
      dz = delta;
    }
    const Matrix& w = params.weight(l);
    const Vector& a_prev = acts[l];
    double* gp = result.grad_params.data() + offsets[l];
    for (Eigen::Index i = 0; i < w.rows(); ++i)
      for (Eigen::Index j = 0; j < w.cols(); ++j) gp[i * w.cols() + j] = dz[i] * a_prev[j];
    for (Eigen::Index i = 0; i < w.rows(); ++i) gp[w.size() + i] = dz[i];
    delta = w.transpose() * dz;
  }
  result.grad_input = std::move(delta);
  return result;
}

Vector jvp(const NetParams& params, const Vector& input, const Vector& tangent_input,
           const Vector& tangent_params) {
  check_input(params, input);
  const bool has_dp = tangent_params.size() != 0;
  if (has_dp && tangent_params.size() != params.n_params())
    throw DimensionError("jvp: tangent_params length does not match parameter count");
  if (tangent_input.size() != 0 && tangent_input.size() != params.input_dim())
    throw DimensionError("jvp: tangent_input length does not match input dim");

  Vector a = input;
  Vector da = tangent_input.size() ? tangent_input : Vector::Zero(params.input_dim());
  std::int64_t pos = 0;
  for (int l = 0; l < params.n_layers(); ++l) {
    const Matrix& w = params.weight(l);
    Vector z = w * a + params.bias(l);
    Vector dz = w * da;
    if (has_dp) {
      for (Eigen::Index i = 0; i < w.rows(); ++i) {
        double acc = 0.0;
        const double* dw = tangent_params.data() + pos + i * w.cols();
        for (Eigen::Index j = 0; j < w.cols(); ++j) acc += dw[j] * a[j];
        dz[i] += acc + tangent_params[pos + w.size() + i];
      }
    }
    pos += w.size() + params.bias(l).size();
    if (params.activation(l) == Activation::Tanh) {
      a = z.array().tanh().matrix();
      da = (dz.array() * (1.0 - a.array().square())).matrix();
    } else {
      a = std::move(z);
      da = std::move(dz);
    }
  }
  return da;
}

Vector normalize_input(const Vector& x, const NormStats& stats) {
  if (x.size() != stats.in_mean.size())
    throw DimensionError("normalize_input: channel count mismatch");
  stats.validate();
  return ((x - stats.in_mean).array() / stats.in_std.array()).matrix();
}

Vector normalize_output(const Vector& y, const NormStats& stats) {
  if (y.size() != stats.out_mean.size())
    throw DimensionError("normalize_output: channel count mismatch");
  stats.validate();
  return ((y - stats.out_mean).array() / stats.out_std.array()).matrix();
}

Vector denormalize_output(const Vector& z, const NormStats& stats) {
  if (z.size() != stats.out_mean.size())
    throw DimensionError("denormalize_output: channel count mismatch");
  stats.validate();
  return (z.array() * stats.out_std.array()).matrix() + stats.out_mean;
}

Vector forward_phys(const NetParams& params, const Vector& input) {
  return denormalize_output(forward(params, normalize_input(input, params.norm())), params.norm());
}

VjpResult vjp_phys(const NetParams& params, const Vector& input, const Vector& cotangent) {
  const NormStats& s = params.norm();
  const Vector cot_z = (cotangent.array() * s.out_std.array()).matrix();
  VjpResult r = vjp(params, normalize_input(input, s), cot_z);
  r.grad_input = (r.grad_input.array() / s.in_std.array()).matrix();
  return r;
}

Vector jvp_phys(const NetParams& params, const Vector& input, const Vector& tangent_input,
                const Vector& tangent_params) {
  const NormStats& s = params.norm();
  Vector dz_in;
  if (tangent_input.size()) dz_in = (tangent_input.array() / s.in_std.array()).matrix();
  Vector dz_out = jvp(params, normalize_input(input, s), dz_in, tangent_params);
  return (dz_out.array() * s.out_std.array()).matrix();
}

}  // namespace hda::net
