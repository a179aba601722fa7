/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/sphere/gauss_grid.hpp"

#include <cmath>
#include <string>

#include "hda/errors.hpp"

namespace hda::sphere {

namespace {

// Legendre polynomial P_n and derivative at x, by three-term recurrence.
void legendre_pair(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_nodes(int n) {
  if (n < 1) throw DimensionError("gauss_legendre_nodes: n must be >= 1");
  std::vector<double> nodes(n), weights(n);
  if (n == 1) {
    nodes[0] = 0.0;
    weights[0] = 2.0;
    return {nodes, weights};
  }
  for (int i = 0; i < n; ++i) {
    // Tricomi-style initial guess, then Newton to machine precision.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_pair(n, x, p, dp);
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return {nodes, weights};
}

GaussGrid::GaussGrid(int nlat, int nlon) : nlat_(nlat), nlon_(nlon) {
  if (nlat < 1 || nlon < 1)
    throw DimensionError("GaussGrid: nlat and nlon must be positive");
  auto [nodes, weights] = gauss_legendre_nodes(nlat);
  latitudes_ = std::move(nodes);
  weights_ = std::move(weights);
}

double GaussGrid::longitude(int j) const { return 2.0 * M_PI * j / nlon_; }

double GaussGrid::lon_weight() const { return 2.0 * M_PI / nlon_; }

double GaussGrid::total_measure() const { return 4.0 * M_PI; }

}  // namespace hda::sphere
