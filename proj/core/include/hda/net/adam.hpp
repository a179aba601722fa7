/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "hda/net/network.hpp"

namespace hda::net {

/// First/second moment accumulators for Adam, over the flattened parameters.
struct AdamState {
  Vector m;
  Vector v;
  std::int64_t step = 0;

  explicit AdamState(std::int64_t n_params)
      : m(Vector::Zero(n_params)), v(Vector::Zero(n_params)) {}
};

/// One bias-corrected Adam update, in place.
void adam_step(AdamState& state, Vector& params, const Vector& grads, double lr,
               double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

}  // namespace hda::net
