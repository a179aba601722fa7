/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <Eigen/Dense>

namespace hda::dyn {

using Vector = Eigen::VectorXd;

/// Desk-scale dynamics configuration. The two-scale system plays the real
/// atmosphere; the one-scale system is the imperfect forecast model whose
/// missing coupling term is the model error to be learned.
struct ModelConfig {
  int n_sites = 36;       // N slow variables on a ring
  int n_fast = 10;        // J fast variables per site
  double forcing = 10.0;  // F
  double h = 1.0;         // coupling strength
  double c = 10.0;        // time-scale ratio
  double b = 10.0;        // fast-variable amplitude
  double dt = 0.005;      // integration step, model time units
  int steps_per_window = 10;

  double window_length() const { return dt * steps_per_window; }
  void validate() const;
};

/// Two-scale Lorenz-96 (truth). State layout: N slow values then N*J fast
/// values, the fast ring indexed globally so y_{J,i} continues into site i+1.
class TwoScaleModel {
 public:
  explicit TwoScaleModel(ModelConfig cfg);

  const ModelConfig& config() const { return cfg_; }
  int dim() const { return cfg_.n_sites * (1 + cfg_.n_fast); }

  void tendency(const Vector& state, Vector& out) const;

  /// Slow-site coupling term -(hc/b) sum_j y_{j,i}; the model error the
  /// forecast model is missing.
  Vector coupling(const Vector& state) const;

 private:
  ModelConfig cfg_;
};

/// One-scale Lorenz-96 (forecast model), with exact tendency derivative
/// products for the tangent-linear and adjoint integrations.
class OneScaleModel {
 public:
  explicit OneScaleModel(ModelConfig cfg);

  const ModelConfig& config() const { return cfg_; }
  int dim() const { return cfg_.n_sites; }

  void tendency(const Vector& state, Vector& out) const;
  void tendency_jvp(const Vector& state, const Vector& tangent, Vector& out) const;
  void tendency_vjp(const Vector& state, const Vector& cotangent, Vector& out) const;

 private:
  ModelConfig cfg_;
};

}  // namespace hda::dyn
