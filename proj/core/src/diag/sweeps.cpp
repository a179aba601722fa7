/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/diag/sweeps.hpp"

#include <cmath>
#include <thread>

#include "hda/dyn/hybrid.hpp"
#include "hda/errors.hpp"
#include "hda/sphere/transforms.hpp"

namespace hda::diag {

namespace {

/// Run one job per entry, at most `jobs` concurrently, preserving entry
/// order in the output.
template <class Entry, class Fn>
void run_members(std::vector<Entry>& entries, Fn&& fn, int jobs) {
  if (jobs <= 1) {
    for (auto& entry : entries) fn(entry);
    return;
  }
  std::size_t next = 0;
  while (next < entries.size()) {
    std::vector<std::thread> pool;
    const std::size_t end = std::min(entries.size(), next + static_cast<std::size_t>(jobs));
    for (std::size_t i = next; i < end; ++i) pool.emplace_back([&entries, &fn, i] { fn(entries[i]); });
    for (auto& t : pool) t.join();
    next = end;
  }
}

template <class Entry, class Fn>
void guarded(Entry& entry, Fn&& fn) {
  try {
    fn();
    entry.ok = true;
  } catch (const std::exception& e) {
    entry.ok = false;
    entry.error = e.what();
  }
}

}  // namespace

std::vector<SizeSweepEntry> size_sweep(const dataset::PairSet& pairs,
                                       const dataset::SplitSpec& split,
                                       const net::NetParams& init, const net::TrainConfig& tcfg,
                                       const std::vector<double>& fractions,
                                       dataset::SizeStrategy strategy, int jobs) {
  const int n_train = split.count(dataset::Split::Train);
  std::vector<SizeSweepEntry> entries(fractions.size());
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    entries[i].fraction = fractions[i];
    entries[i].train_days = std::max(1, static_cast<int>(std::lround(fractions[i] * n_train)));
  }

  run_members(entries, [&](SizeSweepEntry& entry) {
    guarded(entry, [&] {
      const auto days = dataset::select_train_days(n_train, entry.train_days, strategy);
      const dataset::SplitSpec sub = dataset::restrict_training(split, days);
      net::NetParams start = init;
      start.norm() = dataset::fit_norm_stats(pairs, sub);
      const auto train = dataset::to_samples(pairs, sub, dataset::Split::Train, start.norm());
      const auto valid = dataset::to_samples(pairs, sub, dataset::Split::Valid, start.norm());
      const net::TrainResult result = net::train_offline(start, train, valid, tcfg);
      entry.test_rel_wmse =
          dataset::relative_wmse(result.params, pairs, sub, dataset::Split::Test);
    });
  }, jobs);
  return entries;
}

dataset::PairSet truncate_pair_fields(const dataset::PairSet& pairs, int max_wavenumber) {
  const sphere::GaussGrid ring = sphere::GaussGrid::ring(pairs.n_sites);
  auto lowpass = [&](const net::Vector& values) {
    sphere::GridField field(ring, 1);
    for (int j = 0; j < pairs.n_sites; ++j) field.at(0, 0, j) = values[j];
    const sphere::GridField smooth =
        sphere::ring_synthesis(sphere::ring_analysis(field, max_wavenumber), ring);
    net::Vector out(pairs.n_sites);
    for (int j = 0; j < pairs.n_sites; ++j) out[j] = smooth.at(0, 0, j);
    return out;
  };

  dataset::PairSet out = pairs;
  for (auto& pair : out.pairs) {
    net::Vector state(pairs.n_sites), target(pairs.n_sites);
    for (int i = 0; i < pairs.n_sites; ++i) {
      state[i] = pair.inputs(pairs.stencil, i);
      target[i] = pair.targets(0, i);
    }
    const net::Vector state_lp = lowpass(state);
    const net::Vector target_lp = lowpass(target);
    pair.inputs = dyn::column_inputs(state_lp, pair.t_input, pairs.stencil, pairs.t_cycle);
    pair.targets = target_lp.transpose();
  }
  return out;
}

std::vector<ResolutionSweepEntry> resolution_sweep(const dataset::PairSet& pairs,
                                                   const dataset::SplitSpec& split,
                                                   const net::NetParams& init,
                                                   const net::TrainConfig& tcfg,
                                                   const std::vector<int>& truncations,
                                                   int eval_max_wavenumber, int jobs) {
  std::vector<ResolutionSweepEntry> entries(truncations.size());
  for (std::size_t i = 0; i < truncations.size(); ++i) entries[i].truncation = truncations[i];

  const SpectrumBackend backend = ring_backend(pairs.n_sites, eval_max_wavenumber);
  run_members(entries, [&](ResolutionSweepEntry& entry) {
    guarded(entry, [&] {
      const dataset::PairSet train_pairs =
          entry.truncation > 0 ? truncate_pair_fields(pairs, entry.truncation) : pairs;
      net::NetParams start = init;
      start.norm() = dataset::fit_norm_stats(train_pairs, split);
      const auto train =
          dataset::to_samples(train_pairs, split, dataset::Split::Train, start.norm());
      const auto valid =
          dataset::to_samples(train_pairs, split, dataset::Split::Valid, start.norm());
      const net::TrainResult result = net::train_offline(start, train, valid, tcfg);
      // Evaluation is always on the untouched full-resolution pairs.
      entry.test_rel_wmse =
          dataset::relative_wmse(result.params, pairs, split, dataset::Split::Test);
      entry.spectra = error_spectra(result.params, pairs, split, dataset::Split::Test, backend);
    });
  }, jobs);
  return entries;
}

}  // namespace hda::diag
