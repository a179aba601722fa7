/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <string>

#include "hda/binio.hpp"
#include "hda/sphere/fields.hpp"

namespace hda::io {

/// "HDA1" container kinds. All files share magic, version, and kind byte.
enum class FileKind : std::uint8_t {
  GridField = 0,
  SpectralField = 1,
  NatureRun = 2,
  CycleArchive = 3,
  Dataset = 4,
};

void write_header(BinWriter& w, FileKind kind);
FileKind read_header(BinReader& r);
FileKind peek_kind(const std::string& path);

/// Field payloads are contiguous 8-byte floats in (var, lat, lon) order for
/// grid fields and (var, coeff) order (re/im interleaved) for spectral
/// fields.
void save_field(const sphere::GridField& field, const std::string& path);
sphere::GridField load_grid_field(const std::string& path);

void save_field(const sphere::SpectralField& spec, const std::string& path);
sphere::SpectralField load_spectral_field(const std::string& path);

/// In-stream variants used by the archive containers.
void write_grid_field(BinWriter& w, const sphere::GridField& field);
sphere::GridField read_grid_field(BinReader& r);

/// FNV-1a over a file's bytes, for provenance records.
std::uint64_t file_hash(const std::string& path);

}  // namespace hda::io
