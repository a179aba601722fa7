/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/io/dataset_io.hpp"

#include <span>

#include "hda/binio.hpp"
#include "hda/io/field_io.hpp"

namespace hda::io {

void save_dataset(const DatasetFile& dataset, const std::string& path) {
  const auto& set = dataset.pairs;
  BinWriter w;
  write_header(w, FileKind::Dataset);
  w.u8(static_cast<std::uint8_t>(set.mode));
  w.u32(static_cast<std::uint32_t>(set.n_sites));
  w.u32(static_cast<std::uint32_t>(set.stencil));
  w.f64(set.t_cycle);
  w.u64(set.source_hash);
  w.str(dataset.config_text);
  w.u32(static_cast<std::uint32_t>(dataset.seeds.size()));
  for (const auto& [name, value] : dataset.seeds) {
    w.str(name);
    w.u64(value);
  }
  w.u32(static_cast<std::uint32_t>(dataset.split.windows_per_day));
  w.u32(static_cast<std::uint32_t>(dataset.split.day_labels.size()));
  for (auto label : dataset.split.day_labels) w.u8(static_cast<std::uint8_t>(label));
  w.f64s(std::span<const double>(set.site_weights.data(),
                                 static_cast<std::size_t>(set.site_weights.size())));
  w.u32(static_cast<std::uint32_t>(set.pairs.size()));
  for (const auto& pair : set.pairs) {
    w.u32(static_cast<std::uint32_t>(pair.window));
    w.f64(pair.t_input);
    w.f64s(std::span<const double>(pair.inputs.data(),
                                   static_cast<std::size_t>(pair.inputs.size())));
    w.f64s(std::span<const double>(pair.targets.data(),
                                   static_cast<std::size_t>(pair.targets.size())));
  }
  w.to_file(path);
}

DatasetFile load_dataset(const std::string& path) {
  BinReader r = BinReader::from_file(path);
  if (read_header(r) != FileKind::Dataset) r.fail("not a dataset file");
  DatasetFile dataset;
  auto& set = dataset.pairs;
  set.mode = static_cast<dyn::CorrectionMode>(r.u8());
  set.n_sites = static_cast<int>(r.u32());
  set.stencil = static_cast<int>(r.u32());
  set.t_cycle = r.f64();
  set.source_hash = r.u64();
  dataset.config_text = r.str();
  const std::uint32_t n_seeds = r.u32();
  if (n_seeds > 1024) r.fail("implausible seed count");
  for (std::uint32_t k = 0; k < n_seeds; ++k) {
    std::string name = r.str();
    const std::uint64_t value = r.u64();
    dataset.seeds.emplace_back(std::move(name), value);
  }
  dataset.split.windows_per_day = static_cast<int>(r.u32());
  const std::uint32_t n_days = r.u32();
  if (n_days > r.remaining()) r.fail("implausible day count");
  dataset.split.day_labels.resize(n_days);
  for (auto& label : dataset.split.day_labels) {
    const std::uint8_t b = r.u8();
    if (b > 3) r.fail("bad split label");
    label = static_cast<dataset::Split>(b);
  }
  set.site_weights.resize(set.n_sites);
  r.f64s(std::span<double>(set.site_weights.data(), static_cast<std::size_t>(set.n_sites)));
  const std::uint32_t n_pairs = r.u32();
  const int in_dim = set.in_dim(), out_dim = set.out_dim();
  for (std::uint32_t k = 0; k < n_pairs; ++k) {
    dataset::IncrementPair pair;
    pair.window = static_cast<int>(r.u32());
    pair.t_input = r.f64();
    pair.inputs.resize(in_dim, set.n_sites);
    pair.targets.resize(out_dim, set.n_sites);
    r.f64s(std::span<double>(pair.inputs.data(), static_cast<std::size_t>(pair.inputs.size())));
    r.f64s(std::span<double>(pair.targets.data(), static_cast<std::size_t>(pair.targets.size())));
    set.pairs.push_back(std::move(pair));
  }
  if (!r.at_end()) r.fail("trailing bytes");
  return dataset;
}

}  // namespace hda::io
