/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/io/field_io.hpp"

#include "hda/errors.hpp"

namespace hda::io {

namespace {
constexpr char kMagic[4] = {'H', 'D', 'A', '1'};
constexpr std::uint8_t kVersion = 1;
}  // namespace

void write_header(BinWriter& w, FileKind kind) {
  w.raw(kMagic, 4);
  w.u8(kVersion);
  w.u8(static_cast<std::uint8_t>(kind));
}

FileKind read_header(BinReader& r) {
  char magic[4];
  for (char& c : magic) c = static_cast<char>(r.u8());
  if (std::string_view(magic, 4) != std::string_view(kMagic, 4))
    r.fail("bad magic, not an HDA1 file");
  if (r.u8() != kVersion) r.fail("unsupported HDA1 version");
  const std::uint8_t kind = r.u8();
  if (kind > static_cast<std::uint8_t>(FileKind::Dataset)) r.fail("unknown HDA1 kind");
  return static_cast<FileKind>(kind);
}

FileKind peek_kind(const std::string& path) {
  BinReader r = BinReader::from_file(path);
  return read_header(r);
}

namespace {

void write_names(BinWriter& w, const std::vector<std::string>& names) {
  w.u32(static_cast<std::uint32_t>(names.size()));
  for (const auto& n : names) w.str(n);
}

std::vector<std::string> read_names(BinReader& r) {
  const std::uint32_t n = r.u32();
  if (n == 0 || n > 100000) r.fail("implausible variable count");
  std::vector<std::string> names(n);
  for (auto& s : names) s = r.str();
  return names;
}

}  // namespace

void write_grid_field(BinWriter& w, const sphere::GridField& field) {
  write_names(w, field.names());
  w.u32(static_cast<std::uint32_t>(field.grid().nlat()));
  w.u32(static_cast<std::uint32_t>(field.grid().nlon()));
  w.f64s(field.values());
}

sphere::GridField read_grid_field(BinReader& r) {
  auto names = read_names(r);
  const int nlat = static_cast<int>(r.u32());
  const int nlon = static_cast<int>(r.u32());
  if (nlat < 1 || nlon < 1) r.fail("bad grid dimensions");
  sphere::GridField field(sphere::GaussGrid(nlat, nlon), std::move(names));
  r.f64s(field.values());
  return field;
}

void save_field(const sphere::GridField& field, const std::string& path) {
  BinWriter w;
  write_header(w, FileKind::GridField);
  write_grid_field(w, field);
  w.to_file(path);
}

sphere::GridField load_grid_field(const std::string& path) {
  BinReader r = BinReader::from_file(path);
  if (read_header(r) != FileKind::GridField) r.fail("not a grid-field file");
  auto field = read_grid_field(r);
  if (!r.at_end()) r.fail("trailing bytes");
  return field;
}

void save_field(const sphere::SpectralField& spec, const std::string& path) {
  BinWriter w;
  write_header(w, FileKind::SpectralField);
  write_names(w, spec.names());
  w.u8(static_cast<std::uint8_t>(spec.basis()));
  w.u32(static_cast<std::uint32_t>(spec.truncation()));
  for (int v = 0; v < spec.nvar(); ++v)
    for (const auto& c : spec.var(v)) {
      w.f64(c.real());
      w.f64(c.imag());
    }
  w.to_file(path);
}

sphere::SpectralField load_spectral_field(const std::string& path) {
  BinReader r = BinReader::from_file(path);
  if (read_header(r) != FileKind::SpectralField) r.fail("not a spectral-field file");
  auto names = read_names(r);
  const std::uint8_t basis = r.u8();
  if (basis > 1) r.fail("unknown spectral basis");
  const int truncation = static_cast<int>(r.u32());
  sphere::SpectralField spec(static_cast<sphere::SpectralBasis>(basis), truncation,
                             std::move(names));
  for (int v = 0; v < spec.nvar(); ++v)
    for (auto& c : spec.var(v)) {
      const double re = r.f64();
      const double im = r.f64();
      c = {re, im};
    }
  if (!r.at_end()) r.fail("trailing bytes");
  return spec;
}

std::uint64_t file_hash(const std::string& path) {
  const BinReader r = BinReader::from_file(path);
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t b : r.bytes()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hda::io
