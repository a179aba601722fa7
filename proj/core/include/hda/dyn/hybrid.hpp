/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hda/dyn/lorenz96.hpp"
#include "hda/net/network.hpp"

namespace hda::dyn {

/// Increment-pairing scheme the network was trained with. The hybrid model
/// applies the correction identically in both; the tag travels with the
/// configuration for provenance.
enum class CorrectionMode : std::uint8_t { Prediction = 0, PostProcessing = 1 };

/// Network correction attached to the forecast model. The correction w is
/// computed once per window from the window-start state and added after each
/// step scaled by forcing_scale, so the additions accumulate to w over
/// steps_per_window steps.
struct HybridConfig {
  net::NetParams net;  // architecture and normalization; weights overridden by p
  CorrectionMode mode = CorrectionMode::Prediction;
  double forcing_scale = 0.1;  // 1 / steps_per_window
  int stencil = 0;             // half-width of the per-site input stencil
  double t_cycle = 5.0;        // period of the time predictors, model time units

  int input_dim() const { return 2 * stencil + 1 + 4; }
  void validate() const;
};

/// Per-site network inputs for state x at window-start time t:
/// [x_{i-s} .. x_{i+s}, sin(2pi i/N), cos(2pi i/N), sin(2pi t/T), cos(2pi t/T)].
net::Matrix column_inputs(const Vector& x, double t, int stencil, double t_cycle);

/// Correction field w = F(p, x0): the column network applied at every site,
/// in physical units (normalization composed in).
Vector hybrid_forcing(const HybridConfig& cfg, const Vector& p_flat, const Vector& x0, double t0);

/// Window integration of the hybrid model with stored per-step states, plus
/// the exact tangent-linear and adjoint in both the initial state and the
/// network parameters. A null correction gives the plain forecast model
/// (bitwise identical trajectories, zero parameter dimension).
class HybridTrajectory {
 public:
  HybridTrajectory(const OneScaleModel& model, const HybridConfig* corr, Vector p_flat,
                   const Vector& x0, int k_steps, double t0);

  int n_steps() const { return static_cast<int>(states_.size()) - 1; }
  int n_params() const { return static_cast<int>(p_.size()); }
  const std::vector<Vector>& states() const { return states_; }
  const Vector& state(int k) const { return states_[k]; }
  const Vector& forcing() const { return w_; }
  double start_time() const { return t0_; }

  /// Tangent states at steps 0..k for a perturbation (dx0, dp). Either
  /// tangent may be empty (zero).
  std::vector<Vector> tlm(const Vector& dx0, const Vector& dp) const;

  /// Transpose of tlm: cotangents per state index 0..k pulled back to
  /// (x0bar, pbar). pbar is empty when the trajectory has no correction.
  std::pair<Vector, Vector> adjoint(const std::vector<Vector>& cotangents) const;

 private:
  OneScaleModel model_;
  const HybridConfig* corr_;  // null for the plain forecast model
  net::NetParams scratch_;    // correction net with p applied
  Vector p_;
  double t0_;
  std::vector<Vector> states_;
  Vector w_;
};

/// State trajectory of the hybrid model (convenience over HybridTrajectory).
std::vector<Vector> hybrid_integrate(const OneScaleModel& model, const HybridConfig& cfg,
                                     const Vector& p_flat, const Vector& x0, int k_steps,
                                     double t0 = 0.0);

}  // namespace hda::dyn
