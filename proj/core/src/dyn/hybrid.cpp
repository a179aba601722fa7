/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/dyn/hybrid.hpp"

#include <cmath>

#include "hda/dyn/rk4.hpp"
#include "hda/errors.hpp"

namespace hda::dyn {

void HybridConfig::validate() const {
  if (!(forcing_scale > 0.0)) throw ConfigError("HybridConfig: forcing_scale must be positive");
  if (stencil < 0) throw ConfigError("HybridConfig: stencil must be >= 0");
  if (!(t_cycle > 0.0)) throw ConfigError("HybridConfig: t_cycle must be positive");
  if (net.input_dim() != input_dim())
    throw DimensionError("HybridConfig: network input dim " + std::to_string(net.input_dim()) +
                         " does not match stencil layout dim " + std::to_string(input_dim()));
  if (net.output_dim() != 1)
    throw DimensionError("HybridConfig: column network must have one output per site");
}

net::Matrix column_inputs(const Vector& x, double t, int stencil, double t_cycle) {
  const int n = static_cast<int>(x.size());
  const int width = 2 * stencil + 1;
  net::Matrix inputs(width + 4, n);
  const double st = std::sin(2.0 * M_PI * t / t_cycle);
  const double ct = std::cos(2.0 * M_PI * t / t_cycle);
  for (int i = 0; i < n; ++i) {
    for (int q = 0; q < width; ++q) inputs(q, i) = x[(i - stencil + q + n) % n];
    inputs(width + 0, i) = std::sin(2.0 * M_PI * i / n);
    inputs(width + 1, i) = std::cos(2.0 * M_PI * i / n);
    inputs(width + 2, i) = st;
    inputs(width + 3, i) = ct;
  }
  return inputs;
}

Vector hybrid_forcing(const HybridConfig& cfg, const Vector& p_flat, const Vector& x0, double t0) {
  cfg.validate();
  net::NetParams scratch = cfg.net;
  if (p_flat.size()) scratch.unflatten(p_flat);
  const net::Matrix inputs = column_inputs(x0, t0, cfg.stencil, cfg.t_cycle);
  Vector w(x0.size());
  for (int i = 0; i < x0.size(); ++i) w[i] = net::forward_phys(scratch, inputs.col(i))[0];
  return w;
}

HybridTrajectory::HybridTrajectory(const OneScaleModel& model, const HybridConfig* corr,
                                   Vector p_flat, const Vector& x0, int k_steps, double t0)
    : model_(model), corr_(corr), p_(std::move(p_flat)), t0_(t0) {
  if (k_steps < 0) throw ConfigError("HybridTrajectory: negative step count");
  const double dt = model_.config().dt;
  if (corr_) {
    corr_->validate();
    scratch_ = corr_->net;
    if (p_.size()) scratch_.unflatten(p_);
    w_ = Vector::Zero(x0.size());
    const net::Matrix inputs = column_inputs(x0, t0_, corr_->stencil, corr_->t_cycle);
    for (int i = 0; i < x0.size(); ++i) w_[i] = net::forward_phys(scratch_, inputs.col(i))[0];
  } else {
    if (p_.size()) throw DimensionError("HybridTrajectory: parameters supplied without a correction");
    w_ = Vector::Zero(x0.size());
  }

  states_.reserve(k_steps + 1);
  states_.push_back(x0);
  const bool add_w = corr_ != nullptr;
  for (int k = 0; k < k_steps; ++k) {
    Vector next = rk4_step(model_, states_.back(), dt);
    if (add_w) next += corr_->forcing_scale * w_;
    check_state(next, "hybrid_integrate");
    states_.push_back(std::move(next));
  }
}

std::vector<Vector> HybridTrajectory::tlm(const Vector& dx0, const Vector& dp) const {
  const int n = static_cast<int>(states_[0].size());
  if (dx0.size() != 0 && dx0.size() != n)
    throw DimensionError("hybrid tlm: dx0 length mismatch");
  if (dp.size() != 0 && dp.size() != p_.size())
    throw DimensionError("hybrid tlm: dp length mismatch");

  Vector dw;
  if (corr_) {
    dw = Vector::Zero(n);
    const net::Matrix inputs = column_inputs(states_[0], t0_, corr_->stencil, corr_->t_cycle);
    const int width = 2 * corr_->stencil + 1;
    for (int i = 0; i < n; ++i) {
      net::Vector din;
      if (dx0.size()) {
        din = net::Vector::Zero(width + 4);
        for (int q = 0; q < width; ++q) din[q] = dx0[(i - corr_->stencil + q + n) % n];
      }
      dw[i] = net::jvp_phys(scratch_, inputs.col(i), din, dp)[0];
    }
  }

  std::vector<Vector> tangents;
  tangents.reserve(states_.size());
  tangents.push_back(dx0.size() ? dx0 : Vector::Zero(n));
  const double dt = model_.config().dt;
  for (int k = 0; k + 1 < static_cast<int>(states_.size()); ++k) {
    Vector next = tlm_step(model_, states_[k], tangents.back(), dt);
    if (corr_) next += corr_->forcing_scale * dw;
    tangents.push_back(std::move(next));
  }
  return tangents;
}

std::pair<Vector, Vector> HybridTrajectory::adjoint(const std::vector<Vector>& cotangents) const {
  const int n = static_cast<int>(states_[0].size());
  if (cotangents.size() != states_.size())
    throw DimensionError("hybrid adjoint: need one cotangent per trajectory state");

  const double dt = model_.config().dt;
  const int last = static_cast<int>(states_.size()) - 1;
  Vector xbar = cotangents[last];
  Vector wbar = Vector::Zero(n);
  for (int k = last - 1; k >= 0; --k) {
    if (corr_) wbar += corr_->forcing_scale * xbar;
    xbar = adj_step(model_, states_[k], xbar, dt);
    xbar += cotangents[k];
  }

  Vector pbar;
  if (corr_) {
    pbar = Vector::Zero(p_.size() ? p_.size() : scratch_.n_params());
    const net::Matrix inputs = column_inputs(states_[0], t0_, corr_->stencil, corr_->t_cycle);
    const int width = 2 * corr_->stencil + 1;
    net::Vector cot(1);
    for (int i = 0; i < n; ++i) {
      if (wbar[i] == 0.0) continue;
      cot[0] = wbar[i];
      const net::VjpResult r = net::vjp_phys(scratch_, inputs.col(i), cot);
      pbar += r.grad_params;
      for (int q = 0; q < width; ++q)
        xbar[(i - corr_->stencil + q + n) % n] += r.grad_input[q];
    }
  }
  return {std::move(xbar), std::move(pbar)};
}

std::vector<Vector> hybrid_integrate(const OneScaleModel& model, const HybridConfig& cfg,
                                     const Vector& p_flat, const Vector& x0, int k_steps,
                                     double t0) {
  return HybridTrajectory(model, &cfg, p_flat, x0, k_steps, t0).states();
}

}  // namespace hda::dyn
