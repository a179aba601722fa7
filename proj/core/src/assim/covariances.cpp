/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/assim/covariances.hpp"

#include <cmath>
#include <string>

#include "hda/errors.hpp"

namespace hda::assim {

void CovSpec::validate() const {
  if (!(sigma_b > 0.0)) throw ConfigError("CovSpec: sigma_b must be positive");
  if (!(sigma_obs > 0.0)) throw ConfigError("CovSpec: sigma_obs must be positive");
  if (!(p_std > 0.0)) throw ConfigError("CovSpec: p_std must be positive");
  if (b_kind == BKind::GaussianRing && !(length_scale > 0.0))
    throw ConfigError("CovSpec: length_scale must be positive");
}

BackgroundCov::BackgroundCov(const CovSpec& spec, int n) : n_(n) {
  spec.validate();
  Eigen::MatrixXd b(n, n);
  if (spec.b_kind == BKind::Diagonal) {
    b = spec.sigma_b * spec.sigma_b * Eigen::MatrixXd::Identity(n, n);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int d = std::min(std::abs(i - j), n - std::abs(i - j));
        b(i, j) = spec.sigma_b * spec.sigma_b *
                  std::exp(-0.5 * d * d / (spec.length_scale * spec.length_scale));
      }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(b);
  const Eigen::VectorXd& vals = eig.eigenvalues();
  const double floor = 1e-12 * vals.maxCoeff();
  for (int i = 0; i < n; ++i)
    if (vals[i] <= floor)
      throw NumericsError("background covariance is numerically singular (eigenvalue " +
                          std::to_string(vals[i]) + ")");
  const Eigen::VectorXd root = vals.array().sqrt();
  sqrt_ = eig.eigenvectors() * root.asDiagonal() * eig.eigenvectors().transpose();
  inv_sqrt_ = eig.eigenvectors() * root.cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
}

Vector BackgroundCov::apply(const Vector& x) const { return sqrt_ * (sqrt_ * x); }

Vector BackgroundCov::apply_sqrt(const Vector& u) const { return sqrt_ * u; }

Vector BackgroundCov::apply_inv(const Vector& x) const { return inv_sqrt_ * (inv_sqrt_ * x); }

Vector BackgroundCov::apply_inv_sqrt(const Vector& x) const { return inv_sqrt_ * x; }

double BackgroundCov::quad_inv(const Vector& x) const {
  const Vector half = inv_sqrt_ * x;
  return half.squaredNorm();
}

}  // namespace hda::assim
