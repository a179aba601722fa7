/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <string>

#include "hda/assim/cycling.hpp"

namespace hda::io {

void save_nature(const assim::NatureRun& run, const std::string& path);
assim::NatureRun load_nature(const std::string& path);

void save_archive(const assim::CycleArchive& archive, const std::string& path);
assim::CycleArchive load_archive(const std::string& path);

}  // namespace hda::io
