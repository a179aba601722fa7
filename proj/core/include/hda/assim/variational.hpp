/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hda/assim/covariances.hpp"
#include "hda/assim/observations.hpp"
#include "hda/dyn/hybrid.hpp"

namespace hda::assim {

/// One assimilation window: backgrounds, observations, covariances, and the
/// (possibly hybrid) model. A null correction gives strong-constraint 4D-Var
/// with the plain forecast model; params_in_control distinguishes the
/// network-parameter variant from the fixed-network run.
struct VarWindow {
  const dyn::OneScaleModel* model = nullptr;
  const dyn::HybridConfig* corr = nullptr;
  bool params_in_control = false;
  Vector xb;  // background state at window start
  Vector pb;  // background network parameters (empty without correction)
  const BackgroundCov* bcov = nullptr;
  double p_std = 1.0;
  double sigma_obs = 1.0;
  const WindowObs* obs = nullptr;
  double t0 = 0.0;

  int n_steps() const { return model->config().steps_per_window; }
  void validate() const;
};

/// Strong-constraint 4D-Var cost (state-only control; correction, if any,
/// uses the background parameters).
double sc4dvar_cost(const VarWindow& w, const Vector& x0);

/// Parameter-augmented cost: adds the P-term and controls (p, x0).
double nn4dvar_cost(const VarWindow& w, const Vector& p, const Vector& x0);

/// Exact gradient of nn4dvar_cost via the hybrid adjoint.
/// Returns (grad_x0, grad_p); grad_p is empty without a correction.
std::pair<Vector, Vector> nn4dvar_grad(const VarWindow& w, const Vector& p, const Vector& x0);

struct MinimizerConfig {
  int n_outer = 3;
  int max_inner = 60;
  double inner_tol = 1e-4;  // relative residual-norm reduction

  void validate() const;
};

struct OuterTrace {
  std::vector<double> quad_cost;  // quadratic cost per CG iteration (0 = no increment)
  int iterations = 0;
  bool inner_converged = false;
  double cost_before = 0.0;  // nonlinear cost at entry of this outer loop
  double cost_after = 0.0;
};

struct MinimizeResult {
  Vector xa;
  Vector pa;
  std::vector<OuterTrace> outer;
  bool cost_decreased = true;  // no outer loop increased the nonlinear cost
};

/// Incremental Gauss-Newton: linearize the (hybrid) model about the current
/// trajectory, minimize the convex quadratic in the preconditioned control
/// (B^{-1/2} dx0, P^{-1/2} dp) by conjugate gradients, update, re-linearize.
MinimizeResult incremental_minimize(const VarWindow& w, const Vector& x_first,
                                    const Vector& p_first, const MinimizerConfig& cfg);

}  // namespace hda::assim
