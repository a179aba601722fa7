/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <string>

#include "hda/dyn/lorenz96.hpp"
#include "hda/errors.hpp"

namespace hda::dyn {

/// Raises NumericsError when integration has left the physical regime.
inline void check_state(const Vector& x, const char* where) {
  if (!x.allFinite() || x.cwiseAbs().maxCoeff() > 1e8)
    throw NumericsError(std::string(where) + ": state blew up");
}

/// Classical fourth-order Runge-Kutta step for any model exposing
/// tendency(x, out).
template <class Model>
Vector rk4_step(const Model& model, const Vector& x, double dt) {
  if (!(dt > 0.0)) throw ConfigError("rk4_step: dt must be positive");
  Vector k1, k2, k3, k4;
  model.tendency(x, k1);
  model.tendency(x + (0.5 * dt) * k1, k2);
  model.tendency(x + (0.5 * dt) * k2, k3);
  model.tendency(x + dt * k3, k4);
  Vector out = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  check_state(out, "rk4_step");
  return out;
}

template <class Model>
Vector integrate(const Model& model, Vector x, int k_steps, double dt) {
  for (int k = 0; k < k_steps; ++k) x = rk4_step(model, x, dt);
  return x;
}

/// Exact differential of rk4_step at linearization state x. Stage states are
/// recomputed from x; the caller stores only the per-step trajectory.
template <class Model>
Vector tlm_step(const Model& model, const Vector& x, const Vector& tangent, double dt) {
  Vector k1, k2, k3;
  model.tendency(x, k1);
  const Vector x2 = x + (0.5 * dt) * k1;
  model.tendency(x2, k2);
  const Vector x3 = x + (0.5 * dt) * k2;
  model.tendency(x3, k3);
  const Vector x4 = x + dt * k3;

  Vector d1, d2, d3, d4;
  model.tendency_jvp(x, tangent, d1);
  model.tendency_jvp(x2, tangent + (0.5 * dt) * d1, d2);
  model.tendency_jvp(x3, tangent + (0.5 * dt) * d2, d3);
  model.tendency_jvp(x4, tangent + dt * d3, d4);
  return tangent + (dt / 6.0) * (d1 + 2.0 * d2 + 2.0 * d3 + d4);
}

/// Exact transpose of tlm_step.
template <class Model>
Vector adj_step(const Model& model, const Vector& x, const Vector& cotangent, double dt) {
  Vector k1, k2, k3;
  model.tendency(x, k1);
  const Vector x2 = x + (0.5 * dt) * k1;
  model.tendency(x2, k2);
  const Vector x3 = x + (0.5 * dt) * k2;
  model.tendency(x3, k3);
  const Vector x4 = x + dt * k3;

  Vector xbar = cotangent;
  Vector k1bar = (dt / 6.0) * cotangent;
  Vector k2bar = (dt / 3.0) * cotangent;
  Vector k3bar = (dt / 3.0) * cotangent;
  const Vector k4bar = (dt / 6.0) * cotangent;

  Vector s;
  model.tendency_vjp(x4, k4bar, s);
  xbar += s;
  k3bar += dt * s;
  model.tendency_vjp(x3, k3bar, s);
  xbar += s;
  k2bar += (0.5 * dt) * s;
  model.tendency_vjp(x2, k2bar, s);
  xbar += s;
  k1bar += (0.5 * dt) * s;
  model.tendency_vjp(x, k1bar, s);
  xbar += s;
  return xbar;
}

}  // namespace hda::dyn
