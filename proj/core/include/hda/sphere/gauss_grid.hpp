/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <utility>
#include <vector>

namespace hda::sphere {

/// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1].
/// Nodes are the roots of the Legendre polynomial of degree n, returned in
/// descending order (north to south when read as sine of latitude).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_nodes(int n);

/// Rectangular Gauss-Legendre grid: nlat quadrature latitudes (stored as
/// sine of latitude) by nlon equally spaced longitudes on [0, 2pi).
///
/// The one-latitude case doubles as the periodic ring used by the desk-scale
/// dynamics: node 0 with weight 2, nlon sites around the equator.
class GaussGrid {
 public:
  GaussGrid(int nlat, int nlon);

  static GaussGrid ring(int nsites) { return GaussGrid(1, nsites); }

  int nlat() const { return nlat_; }
  int nlon() const { return nlon_; }
  const std::vector<double>& latitudes() const { return latitudes_; }
  const std::vector<double>& weights() const { return weights_; }

  double longitude(int j) const;
  /// Uniform longitude weight 2pi/nlon; total grid measure is 4pi.
  double lon_weight() const;
  double total_measure() const;

  bool operator==(const GaussGrid& other) const {
    return nlat_ == other.nlat_ && nlon_ == other.nlon_;
  }

 private:
  int nlat_;
  int nlon_;
  std::vector<double> latitudes_;
  std::vector<double> weights_;
};

}  // namespace hda::sphere
