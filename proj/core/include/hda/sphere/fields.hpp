/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hda/sphere/gauss_grid.hpp"

namespace hda::sphere {

/// Number of (l, m) pairs with 0 <= m <= l <= T: (T+1)(T+2)/2.
int dof_count(int truncation);

/// Multi-variable field on a Gauss-Legendre grid, stored (var, lat, lon).
class GridField {
 public:
  GridField(GaussGrid grid, int nvar);
  GridField(GaussGrid grid, std::vector<std::string> names);

  const GaussGrid& grid() const { return grid_; }
  int nvar() const { return nvar_; }
  const std::vector<std::string>& names() const { return names_; }

  double& at(int var, int i, int j) {
    return values_[(static_cast<std::size_t>(var) * grid_.nlat() + i) * grid_.nlon() + j];
  }
  double at(int var, int i, int j) const {
    return values_[(static_cast<std::size_t>(var) * grid_.nlat() + i) * grid_.nlon() + j];
  }

  std::span<double> var(int v) {
    const std::size_t n = static_cast<std::size_t>(grid_.nlat()) * grid_.nlon();
    return {values_.data() + v * n, n};
  }
  std::span<const double> var(int v) const {
    const std::size_t n = static_cast<std::size_t>(grid_.nlat()) * grid_.nlon();
    return {values_.data() + v * n, n};
  }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  bool all_finite() const;

 private:
  GaussGrid grid_;
  int nvar_;
  std::vector<std::string> names_;
  std::vector<double> values_;
};

enum class SpectralBasis : std::uint8_t { Sphere = 0, Ring = 1 };

/// Triangular-truncation spherical-harmonic coefficients, or ring Fourier
/// coefficients, one complex set per variable.
///
/// Sphere storage convention: the basis is orthonormal with respect to the
/// plain sphere measure (integral of |Y|^2 dOmega = 1, Condon-Shortley phase
/// omitted) and the stored coefficient for m > 0 carries an extra sqrt(2), so
/// the Euclidean norm of the stored real/imaginary components equals the
/// integral of the squared field over the sphere. A variable at truncation T
/// therefore occupies 2*dof_count(T) reals (272 at T15), with the m = 0
/// imaginary parts identically zero for real fields.
class SpectralField {
 public:
  SpectralField(SpectralBasis basis, int truncation, int nvar);
  SpectralField(SpectralBasis basis, int truncation, std::vector<std::string> names);

  SpectralBasis basis() const { return basis_; }
  int truncation() const { return truncation_; }
  int nvar() const { return nvar_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Complex coefficients per variable: dof_count(T) on the sphere, T+1 on
  /// the ring.
  int coeffs_per_var() const;

  /// Flat index of (l, m), sphere basis only.
  static int index(int l, int m) { return l * (l + 1) / 2 + m; }

  std::complex<double>& at(int var, int l, int m) {
    return coeffs_[static_cast<std::size_t>(var) * coeffs_per_var() + index(l, m)];
  }
  std::complex<double> at(int var, int l, int m) const {
    return coeffs_[static_cast<std::size_t>(var) * coeffs_per_var() + index(l, m)];
  }

  /// Ring accessor: wavenumber k in [0, truncation].
  std::complex<double>& ring_at(int var, int k) {
    return coeffs_[static_cast<std::size_t>(var) * coeffs_per_var() + k];
  }
  std::complex<double> ring_at(int var, int k) const {
    return coeffs_[static_cast<std::size_t>(var) * coeffs_per_var() + k];
  }

  std::span<std::complex<double>> var(int v);
  std::span<const std::complex<double>> var(int v) const;

  std::vector<std::complex<double>>& coeffs() { return coeffs_; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  /// Sum of squared stored real components over one variable.
  double squared_norm(int var) const;

 private:
  SpectralBasis basis_;
  int truncation_;
  int nvar_;
  std::vector<std::string> names_;
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace hda::sphere
