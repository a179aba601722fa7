/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hda/dataset/increments.hpp"
#include "hda/sphere/transforms.hpp"

namespace hda::diag {

/// Maps a flat field to its per-degree power; ring Fourier by default,
/// spherical harmonics for grid-shaped fields.
using SpectrumBackend = std::function<std::vector<double>(const net::Vector&)>;

SpectrumBackend ring_backend(int n_sites, int max_wavenumber);
SpectrumBackend sphere_backend(sphere::GaussGrid grid, int truncation);

/// Averaged power spectra of inputs, targets, predictions, and prediction
/// errors over the chosen split, plus the relative error spectra
/// (error power / target power per degree, missing at zero target power).
struct SpectraReport {
  std::vector<double> input, target, prediction, error;
  std::vector<std::optional<double>> relative;
};

SpectraReport error_spectra(const net::NetParams& params, const dataset::PairSet& pairs,
                            const dataset::SplitSpec& split, dataset::Split which,
                            const SpectrumBackend& backend);

}  // namespace hda::diag
