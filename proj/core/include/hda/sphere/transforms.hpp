/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <span>
#include <vector>

#include "hda/sphere/fields.hpp"
#include "hda/sphere/gauss_grid.hpp"

namespace hda::sphere {

/// Spherical-harmonic transform pair on a fixed grid and truncation.
///
/// Analysis is a longitudinal discrete Fourier transform followed by
/// Gauss-Legendre quadrature against normalized associated Legendre
/// functions; synthesis evaluates the truncated series. Both are exact for
/// band-limited fields when nlat >= T+1 and nlon >= 2T+1. Tables are
/// immutable after construction, so a transform may be shared across threads.
class SphereTransform {
 public:
  SphereTransform(GaussGrid grid, int truncation);

  const GaussGrid& grid() const { return grid_; }
  int truncation() const { return trunc_; }

  SpectralField analysis(const GridField& field) const;
  GridField synthesis(const SpectralField& spec) const;

  /// Normalized associated Legendre value at latitude node i (test hook).
  double legendre(int i, int l, int m) const {
    return plm_[static_cast<std::size_t>(i) * dof_count(trunc_) + SpectralField::index(l, m)];
  }

 private:
  GaussGrid grid_;
  int trunc_;
  std::vector<double> plm_;     // nlat x dof
  std::vector<double> cos_mj_;  // (T+1) x nlon
  std::vector<double> sin_mj_;  // (T+1) x nlon
};

/// One-shot transforms; construct a SphereTransform for repeated use.
SpectralField sh_analysis(const GridField& field, int truncation);
GridField sh_synthesis(const SpectralField& spec, const GaussGrid& grid);

/// Ring Fourier analysis of a one-latitude field up to wavenumber K.
/// Same storage convention as the sphere: the stored squared norm equals the
/// ring-integrated squared field (ring measure 4pi).
SpectralField ring_analysis(const GridField& field, int max_wavenumber);
GridField ring_synthesis(const SpectralField& spec, const GaussGrid& grid);

/// Keep coefficients with degree (or wavenumber) <= t_low.
SpectralField truncate(const SpectralField& spec, int t_low);

/// Per-degree power P_l = sum over stored components of squared value.
/// sum_l P_l equals the squared stored-coefficient norm by construction.
std::vector<double> power_spectrum(const SpectralField& spec, int var);

/// Quadrature-weighted squared norm: sum_v sum_i sum_j w_i (2pi/nlon) f^2.
/// Empty subset means all variables. Equals the spectral squared norm for
/// band-limited fields.
double weighted_sq_norm(const GridField& field, std::span<const int> var_subset = {});

/// Quadrature-weighted mean over the grid (measure-normalized).
double weighted_mean(const GridField& field, int var);

}  // namespace hda::sphere
