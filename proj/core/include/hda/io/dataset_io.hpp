/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <string>

#include "hda/dataset/increments.hpp"

namespace hda::io {

/// Pair file: mode tag, split labels, and provenance (source archive hash
/// plus the seeds recorded in the archive).
struct DatasetFile {
  dataset::PairSet pairs;
  dataset::SplitSpec split;
  std::vector<std::pair<std::string, std::uint64_t>> seeds;
  std::string config_text;
};

void save_dataset(const DatasetFile& dataset, const std::string& path);
DatasetFile load_dataset(const std::string& path);

}  // namespace hda::io
