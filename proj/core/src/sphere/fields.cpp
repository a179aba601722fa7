/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/sphere/fields.hpp"

#include <cmath>

#include "hda/errors.hpp"

namespace hda::sphere {

namespace {

std::vector<std::string> default_names(int nvar) {
  std::vector<std::string> names;
  names.reserve(nvar);
  for (int v = 0; v < nvar; ++v) names.push_back("var" + std::to_string(v));
  return names;
}

}  // namespace

int dof_count(int truncation) {
  if (truncation < 0) throw DimensionError("dof_count: truncation must be >= 0");
  return (truncation + 1) * (truncation + 2) / 2;
}

GridField::GridField(GaussGrid grid, int nvar)
    : GridField(std::move(grid), default_names(nvar)) {}

GridField::GridField(GaussGrid grid, std::vector<std::string> names)
    : grid_(std::move(grid)),
      nvar_(static_cast<int>(names.size())),
      names_(std::move(names)),
      values_(static_cast<std::size_t>(nvar_) * grid_.nlat() * grid_.nlon(), 0.0) {
  if (nvar_ < 1) throw DimensionError("GridField: nvar must be positive");
}

bool GridField::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

SpectralField::SpectralField(SpectralBasis basis, int truncation, int nvar)
    : SpectralField(basis, truncation, default_names(nvar)) {}

SpectralField::SpectralField(SpectralBasis basis, int truncation,
                             std::vector<std::string> names)
    : basis_(basis),
      truncation_(truncation),
      nvar_(static_cast<int>(names.size())),
      names_(std::move(names)) {
  if (truncation_ < 0) throw DimensionError("SpectralField: truncation must be >= 0");
  if (nvar_ < 1) throw DimensionError("SpectralField: nvar must be positive");
  coeffs_.assign(static_cast<std::size_t>(nvar_) * coeffs_per_var(), {0.0, 0.0});
}

int SpectralField::coeffs_per_var() const {
  return basis_ == SpectralBasis::Sphere ? dof_count(truncation_) : truncation_ + 1;
}

std::span<std::complex<double>> SpectralField::var(int v) {
  const std::size_t n = coeffs_per_var();
  return {coeffs_.data() + v * n, n};
}

std::span<const std::complex<double>> SpectralField::var(int v) const {
  const std::size_t n = coeffs_per_var();
  return {coeffs_.data() + v * n, n};
}

double SpectralField::squared_norm(int var) const {
  double s = 0.0;
  for (const auto& c : this->var(var)) s += c.real() * c.real() + c.imag() * c.imag();
  return s;
}

}  // namespace hda::sphere
