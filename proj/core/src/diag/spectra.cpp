/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/diag/spectra.hpp"

#include "hda/errors.hpp"

namespace hda::diag {

SpectrumBackend ring_backend(int n_sites, int max_wavenumber) {
  const sphere::GaussGrid grid = sphere::GaussGrid::ring(n_sites);
  return [grid, max_wavenumber](const net::Vector& values) {
    sphere::GridField field(grid, 1);
    for (int j = 0; j < grid.nlon(); ++j) field.at(0, 0, j) = values[j];
    return sphere::power_spectrum(sphere::ring_analysis(field, max_wavenumber), 0);
  };
}

SpectrumBackend sphere_backend(sphere::GaussGrid grid, int truncation) {
  auto transform = std::make_shared<sphere::SphereTransform>(grid, truncation);
  return [transform, grid](const net::Vector& values) {
    if (values.size() != static_cast<Eigen::Index>(grid.nlat()) * grid.nlon())
      throw DimensionError("sphere spectrum backend: field size does not match grid");
    sphere::GridField field(grid, 1);
    int idx = 0;
    for (int i = 0; i < grid.nlat(); ++i)
      for (int j = 0; j < grid.nlon(); ++j) field.at(0, i, j) = values[idx++];
    return sphere::power_spectrum(transform->analysis(field), 0);
  };
}

SpectraReport error_spectra(const net::NetParams& params, const dataset::PairSet& set,
                            const dataset::SplitSpec& split, dataset::Split which,
                            const SpectrumBackend& backend) {
  SpectraReport report;
  int count = 0;
  auto accumulate = [](std::vector<double>& acc, const std::vector<double>& p) {
    if (acc.empty()) acc.assign(p.size(), 0.0);
    for (std::size_t l = 0; l < p.size(); ++l) acc[l] += p[l];
  };

  for (const auto& pair : set.pairs) {
    const int label_window =
        set.mode == dyn::CorrectionMode::Prediction ? pair.window + 1 : pair.window;
    if (split.window_label(label_window) != which) continue;

    net::Vector input(set.n_sites), target(set.n_sites), pred(set.n_sites);
    for (int i = 0; i < set.n_sites; ++i) {
      input[i] = pair.inputs(set.stencil, i);  // centre channel: the state itself
      target[i] = pair.targets(0, i);
      pred[i] = net::forward_phys(params, pair.inputs.col(i))[0];
    }
    accumulate(report.input, backend(input));
    accumulate(report.target, backend(target));
    accumulate(report.prediction, backend(pred));
    accumulate(report.error, backend(target - pred));
    ++count;
  }
  if (count == 0) throw ConfigError("error_spectra: empty split");

  for (auto* acc : {&report.input, &report.target, &report.prediction, &report.error})
    for (double& v : *acc) v /= count;

  report.relative.resize(report.target.size());
  for (std::size_t l = 0; l < report.target.size(); ++l) {
    if (report.target[l] > 0.0)
      report.relative[l] = report.error[l] / report.target[l];
    else
      report.relative[l] = std::nullopt;
  }
  return report;
}

}  // namespace hda::diag
