/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "hda/dyn/lorenz96.hpp"

namespace hda::assim {

using dyn::Vector;

enum class BKind : std::uint8_t { Diagonal = 0, GaussianRing = 1 };

/// Error covariance models: B for the state background, R = sigma_obs^2 I
/// per observation batch, P = p_std^2 I for the network parameters.
struct CovSpec {
  BKind b_kind = BKind::GaussianRing;
  double sigma_b = 0.2;       // background error standard deviation
  double length_scale = 1.5;  // Gaussian correlation length, in sites
  double sigma_obs = 0.1;     // assumed observation error (R)
  double p_std = 5e-4;        // parameter background error (P)

  void validate() const;
};

/// Symmetric positive-definite B with cached symmetric square root.
/// The Gaussian ring kernel is exp(-d^2 / 2L^2) with d the cyclic site
/// distance; eigenvalues are checked at construction.
class BackgroundCov {
 public:
  BackgroundCov(const CovSpec& spec, int n);

  int dim() const { return n_; }
  Vector apply(const Vector& x) const;           // B x
  Vector apply_sqrt(const Vector& u) const;      // B^{1/2} u
  Vector apply_inv(const Vector& x) const;       // B^{-1} x
  Vector apply_inv_sqrt(const Vector& x) const;  // B^{-1/2} x
  double quad_inv(const Vector& x) const;        // x^T B^{-1} x

 private:
  int n_;
  Eigen::MatrixXd sqrt_;      // symmetric B^{1/2}
  Eigen::MatrixXd inv_sqrt_;  // symmetric B^{-1/2}
};

}  // namespace hda::assim
