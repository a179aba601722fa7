/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/net/adam.hpp"

#include <cmath>

#include "hda/errors.hpp"

namespace hda::net {

void adam_step(AdamState& state, Vector& params, const Vector& grads, double lr,
               double beta1, double beta2, double eps) {
  if (params.size() != grads.size() || params.size() != state.m.size())
    throw DimensionError("adam_step: parameter/gradient/state shapes disagree");
  state.step += 1;
  state.m = beta1 * state.m + (1.0 - beta1) * grads;
  state.v = (beta2 * state.v.array() + (1.0 - beta2) * grads.array().square()).matrix();
  const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(state.step));
  params.array() -=
      lr * (state.m.array() / bc1) / ((state.v.array() / bc2).sqrt() + eps);
}

}  // namespace hda::net
