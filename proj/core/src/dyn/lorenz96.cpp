/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/dyn/lorenz96.hpp"

#include <string>

#include "hda/errors.hpp"

namespace hda::dyn {

void ModelConfig::validate() const {
  if (n_sites < 4) throw ConfigError("ModelConfig: need at least 4 slow sites");
  if (n_fast < 0) throw ConfigError("ModelConfig: n_fast must be >= 0");
  if (!(dt > 0.0)) throw ConfigError("ModelConfig: dt must be positive");
  if (steps_per_window < 1) throw ConfigError("ModelConfig: steps_per_window must be >= 1");
}

namespace {

void check_dim(const Vector& v, int expected, const char* what) {
  if (v.size() != expected)
    throw DimensionError(std::string(what) + ": state length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(expected));
}

inline int wrap(int i, int n) { return (i % n + n) % n; }

}  // namespace

TwoScaleModel::TwoScaleModel(ModelConfig cfg) : cfg_(cfg) { cfg_.validate(); }

void TwoScaleModel::tendency(const Vector& state, Vector& out) const {
  check_dim(state, dim(), "two-scale tendency");
  const int n = cfg_.n_sites, nj = cfg_.n_sites * cfg_.n_fast;
  const double hcb = cfg_.h * cfg_.c / cfg_.b;
  out.resize(dim());

  for (int i = 0; i < n; ++i) {
    double fast_sum = 0.0;
    for (int j = 0; j < cfg_.n_fast; ++j) fast_sum += state[n + i * cfg_.n_fast + j];
    out[i] = -state[wrap(i - 1, n)] * (state[wrap(i - 2, n)] - state[wrap(i + 1, n)]) -
             state[i] + cfg_.forcing - hcb * fast_sum;
  }
  const auto y = [&](int k) { return state[n + wrap(k, nj)]; };
  for (int k = 0; k < nj; ++k) {
    const int site = k / cfg_.n_fast;
    out[n + k] = -cfg_.c * cfg_.b * y(k + 1) * (y(k + 2) - y(k - 1)) - cfg_.c * y(k) +
                 hcb * state[site];
  }
}

Vector TwoScaleModel::coupling(const Vector& state) const {
  check_dim(state, dim(), "two-scale coupling");
  const int n = cfg_.n_sites;
  const double hcb = cfg_.h * cfg_.c / cfg_.b;
  Vector out(n);
  for (int i = 0; i < n; ++i) {
    double fast_sum = 0.0;
    for (int j = 0; j < cfg_.n_fast; ++j) fast_sum += state[n + i * cfg_.n_fast + j];
    out[i] = -hcb * fast_sum;
  }
  return out;
}

OneScaleModel::OneScaleModel(ModelConfig cfg) : cfg_(cfg) { cfg_.validate(); }

void OneScaleModel::tendency(const Vector& state, Vector& out) const {
  check_dim(state, dim(), "one-scale tendency");
  const int n = cfg_.n_sites;
  out.resize(n);
  for (int i = 0; i < n; ++i)
    out[i] = -state[wrap(i - 1, n)] * (state[wrap(i - 2, n)] - state[wrap(i + 1, n)]) -
             state[i] + cfg_.forcing;
}

void OneScaleModel::tendency_jvp(const Vector& state, const Vector& tangent, Vector& out) const {
  check_dim(state, dim(), "one-scale tlm");
  check_dim(tangent, dim(), "one-scale tlm tangent");
  const int n = cfg_.n_sites;
  out.resize(n);
  for (int i = 0; i < n; ++i) {
    const int im1 = wrap(i - 1, n), im2 = wrap(i - 2, n), ip1 = wrap(i + 1, n);
    out[i] = -tangent[im1] * (state[im2] - state[ip1]) -
             state[im1] * (tangent[im2] - tangent[ip1]) - tangent[i];
  }
}

void OneScaleModel::tendency_vjp(const Vector& state, const Vector& cotangent, Vector& out) const {
  check_dim(state, dim(), "one-scale adjoint");
  check_dim(cotangent, dim(), "one-scale adjoint cotangent");
  const int n = cfg_.n_sites;
  out = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    const int im1 = wrap(i - 1, n), im2 = wrap(i - 2, n), ip1 = wrap(i + 1, n);
    const double c = cotangent[i];
    out[im1] -= c * (state[im2] - state[ip1]);
    out[im2] -= c * state[im1];
    out[ip1] += c * state[im1];
    out[i] -= c;
  }
}

}  // namespace hda::dyn
