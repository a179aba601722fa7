/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/sphere/transforms.hpp"

#include <cmath>
#include <string>

#include "hda/errors.hpp"

namespace hda::sphere {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_resolution(const GaussGrid& grid, int truncation) {
  if (grid.nlat() < truncation + 1 || grid.nlon() < 2 * truncation + 1)
    throw DimensionError("grid too coarse for truncation T" + std::to_string(truncation) +
                         ": need nlat >= " + std::to_string(truncation + 1) +
                         " and nlon >= " + std::to_string(2 * truncation + 1) + ", got " +
                         std::to_string(grid.nlat()) + "x" + std::to_string(grid.nlon()));
}

void check_ring(const GaussGrid& grid, int max_wavenumber) {
  if (grid.nlat() != 1)
    throw DimensionError("ring transform requires a one-latitude grid");
  if (grid.nlon() < 2 * max_wavenumber + 1)
    throw DimensionError("ring too coarse for wavenumber " + std::to_string(max_wavenumber) +
                         ": need nlon >= " + std::to_string(2 * max_wavenumber + 1));
}

}  // namespace

SphereTransform::SphereTransform(GaussGrid grid, int truncation)
    : grid_(std::move(grid)), trunc_(truncation) {
  check_resolution(grid_, trunc_);

  // Normalized associated Legendre functions Lambda_l^m with
  // int_{-1}^{1} Lambda^2 dmu = 1/(2pi), by the stable l-recurrence at
  // fixed m. Seeds walk the diagonal Lambda_m^m.
  const int nlat = grid_.nlat();
  const int dof = dof_count(trunc_);
  plm_.assign(static_cast<std::size_t>(nlat) * dof, 0.0);
  for (int i = 0; i < nlat; ++i) {
    const double mu = grid_.latitudes()[i];
    const double s = std::sqrt(1.0 - mu * mu);
    double* row = plm_.data() + static_cast<std::size_t>(i) * dof;
    double diag = std::sqrt(1.0 / (4.0 * M_PI));  // Lambda_0^0
    for (int m = 0; m <= trunc_; ++m) {
      if (m > 0) diag *= std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s;
      row[SpectralField::index(m, m)] = diag;
      if (m + 1 <= trunc_) row[SpectralField::index(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * mu * diag;
      for (int l = m + 2; l <= trunc_; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
        const double b =
            std::sqrt((static_cast<double>(l - 1) * (l - 1) - m * m) / (4.0 * static_cast<double>(l - 1) * (l - 1) - 1.0));
        row[SpectralField::index(l, m)] =
            a * (mu * row[SpectralField::index(l - 1, m)] - b * row[SpectralField::index(l - 2, m)]);
      }
    }
  }

  const int nlon = grid_.nlon();
  cos_mj_.resize(static_cast<std::size_t>(trunc_ + 1) * nlon);
  sin_mj_.resize(static_cast<std::size_t>(trunc_ + 1) * nlon);
  for (int m = 0; m <= trunc_; ++m)
    for (int j = 0; j < nlon; ++j) {
      const double phi = grid_.longitude(j);
      cos_mj_[static_cast<std::size_t>(m) * nlon + j] = std::cos(m * phi);
      sin_mj_[static_cast<std::size_t>(m) * nlon + j] = std::sin(m * phi);
    }
}

SpectralField SphereTransform::analysis(const GridField& field) const {
  if (!(field.grid() == grid_))
    throw DimensionError("sh_analysis: field grid does not match transform grid");
  const int nlat = grid_.nlat(), nlon = grid_.nlon();
  const int dof = dof_count(trunc_);
  SpectralField spec(SpectralBasis::Sphere, trunc_, field.names());

  std::vector<double> fm_re(nlat), fm_im(nlat);
  const double lw = grid_.lon_weight();
  for (int v = 0; v < field.nvar(); ++v) {
    auto out = spec.var(v);
    for (int m = 0; m <= trunc_; ++m) {
      const double* cm = cos_mj_.data() + static_cast<std::size_t>(m) * nlon;
      const double* sm = sin_mj_.data() + static_cast<std::size_t>(m) * nlon;
      for (int i = 0; i < nlat; ++i) {
        double re = 0.0, im = 0.0;
        for (int j = 0; j < nlon; ++j) {
          const double f = field.at(v, i, j);
          re += f * cm[j];
          im -= f * sm[j];
        }
        fm_re[i] = lw * re;
        fm_im[i] = lw * im;
      }
      const double scale = (m == 0) ? 1.0 : kSqrt2;
      for (int l = m; l <= trunc_; ++l) {
        double re = 0.0, im = 0.0;
        for (int i = 0; i < nlat; ++i) {
          const double lp =
              grid_.weights()[i] * plm_[static_cast<std::size_t>(i) * dof + SpectralField::index(l, m)];
          re += lp * fm_re[i];
          im += lp * fm_im[i];
        }
        out[SpectralField::index(l, m)] = {scale * re, scale * im};
      }
    }
  }
  return spec;
}

GridField SphereTransform::synthesis(const SpectralField& spec) const {
  if (spec.basis() != SpectralBasis::Sphere)
    throw DimensionError("sh_synthesis: expected sphere-basis coefficients");
  if (spec.truncation() != trunc_)
    throw DimensionError("sh_synthesis: truncation does not match transform");
  const int nlat = grid_.nlat(), nlon = grid_.nlon();
  const int dof = dof_count(trunc_);
  GridField field(grid_, spec.names());

  for (int v = 0; v < spec.nvar(); ++v) {
    auto in = spec.var(v);
    for (int i = 0; i < nlat; ++i) {
      const double* row = plm_.data() + static_cast<std::size_t>(i) * dof;
      for (int m = 0; m <= trunc_; ++m) {
        // Latitude-collapsed coefficient g_m = sum_l Lambda_l^m c_l^m.
        double g_re = 0.0, g_im = 0.0;
        for (int l = m; l <= trunc_; ++l) {
          const double lp = row[SpectralField::index(l, m)];
          g_re += lp * in[SpectralField::index(l, m)].real();
          g_im += lp * in[SpectralField::index(l, m)].imag();
        }
        const double* cm = cos_mj_.data() + static_cast<std::size_t>(m) * nlon;
        const double* sm = sin_mj_.data() + static_cast<std::size_t>(m) * nlon;
        if (m == 0) {
          for (int j = 0; j < nlon; ++j) field.at(v, i, j) += g_re;
        } else {
          for (int j = 0; j < nlon; ++j)
            field.at(v, i, j) += kSqrt2 * (g_re * cm[j] - g_im * sm[j]);
        }
      }
    }
  }
  return field;
}

SpectralField sh_analysis(const GridField& field, int truncation) {
  return SphereTransform(field.grid(), truncation).analysis(field);
}

GridField sh_synthesis(const SpectralField& spec, const GaussGrid& grid) {
  return SphereTransform(grid, spec.truncation()).synthesis(spec);
}

SpectralField ring_analysis(const GridField& field, int max_wavenumber) {
  check_ring(field.grid(), max_wavenumber);
  const int n = field.grid().nlon();
  SpectralField spec(SpectralBasis::Ring, max_wavenumber, field.names());
  const double norm = std::sqrt(4.0 * M_PI) / n;
  for (int v = 0; v < field.nvar(); ++v) {
    for (int k = 0; k <= max_wavenumber; ++k) {
      double re = 0.0, im = 0.0;
      for (int j = 0; j < n; ++j) {
        const double phi = 2.0 * M_PI * k * j / n;
        const double f = field.at(v, 0, j);
        re += f * std::cos(phi);
        im -= f * std::sin(phi);
      }
      const double scale = (k == 0) ? norm : kSqrt2 * norm;
      spec.ring_at(v, k) = {scale * re, scale * im};
    }
  }
  return spec;
}

GridField ring_synthesis(const SpectralField& spec, const GaussGrid& grid) {
  if (spec.basis() != SpectralBasis::Ring)
    throw DimensionError("ring_synthesis: expected ring-basis coefficients");
  check_ring(grid, spec.truncation());
  const int n = grid.nlon();
  GridField field(grid, spec.names());
  const double inv = 1.0 / std::sqrt(4.0 * M_PI);
  for (int v = 0; v < spec.nvar(); ++v) {
    for (int j = 0; j < n; ++j) {
      double f = spec.ring_at(v, 0).real();
      for (int k = 1; k <= spec.truncation(); ++k) {
        const double phi = 2.0 * M_PI * k * j / n;
        const auto c = spec.ring_at(v, k);
        f += kSqrt2 * (c.real() * std::cos(phi) - c.imag() * std::sin(phi));
      }
      field.at(v, 0, j) = inv * f;
    }
  }
  return field;
}

SpectralField truncate(const SpectralField& spec, int t_low) {
  if (t_low > spec.truncation())
    throw DimensionError("truncate: target truncation " + std::to_string(t_low) +
                         " exceeds source truncation " + std::to_string(spec.truncation()));
  SpectralField out(spec.basis(), t_low, spec.names());
  for (int v = 0; v < spec.nvar(); ++v) {
    if (spec.basis() == SpectralBasis::Sphere) {
      for (int l = 0; l <= t_low; ++l)
        for (int m = 0; m <= l; ++m) out.at(v, l, m) = spec.at(v, l, m);
    } else {
      for (int k = 0; k <= t_low; ++k) out.ring_at(v, k) = spec.ring_at(v, k);
    }
  }
  return out;
}

std::vector<double> power_spectrum(const SpectralField& spec, int var) {
  if (var < 0 || var >= spec.nvar()) throw DimensionError("power_spectrum: variable index out of range");
  std::vector<double> power(spec.truncation() + 1, 0.0);
  if (spec.basis() == SpectralBasis::Sphere) {
    for (int l = 0; l <= spec.truncation(); ++l)
      for (int m = 0; m <= l; ++m) {
        const auto c = spec.at(var, l, m);
        power[l] += c.real() * c.real() + c.imag() * c.imag();
      }
  } else {
    for (int k = 0; k <= spec.truncation(); ++k) {
      const auto c = spec.ring_at(var, k);
      power[k] += c.real() * c.real() + c.imag() * c.imag();
    }
  }
  return power;
}

double weighted_sq_norm(const GridField& field, std::span<const int> var_subset) {
  const auto& grid = field.grid();
  const double lw = grid.lon_weight();
  double total = 0.0;
  auto add_var = [&](int v) {
    for (int i = 0; i < grid.nlat(); ++i) {
      double row = 0.0;
      for (int j = 0; j < grid.nlon(); ++j) {
        const double f = field.at(v, i, j);
        row += f * f;
      }
      total += grid.weights()[i] * lw * row;
    }
  };
  if (var_subset.empty())
    for (int v = 0; v < field.nvar(); ++v) add_var(v);
  else
    for (int v : var_subset) add_var(v);
  return total;
}

double weighted_mean(const GridField& field, int var) {
  const auto& grid = field.grid();
  double total = 0.0;
  for (int i = 0; i < grid.nlat(); ++i) {
    double row = 0.0;
    for (int j = 0; j < grid.nlon(); ++j) row += field.at(var, i, j);
    total += grid.weights()[i] * grid.lon_weight() * row;
  }
  return total / grid.total_measure();
}

}  // namespace hda::sphere
