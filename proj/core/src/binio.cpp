/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/binio.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "hda/errors.hpp"

namespace hda::io {

static_assert(std::endian::native == std::endian::little,
              "serialization assumes a little-endian host");

void BinWriter::u32(std::uint32_t v) { raw(&v, sizeof v); }
void BinWriter::u64(std::uint64_t v) { raw(&v, sizeof v); }
void BinWriter::f64(double v) { raw(&v, sizeof v); }

void BinWriter::f64s(std::span<const double> v) {
  raw(v.data(), v.size() * sizeof(double));
}

void BinWriter::str(const std::string& s) {
  u32(static_cast<std::uint32_t>(s.size()));
  raw(s.data(), s.size());
}

void BinWriter::raw(const void* data, std::size_t n) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  bytes_.insert(bytes_.end(), p, p + n);
}

void BinWriter::to_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes_.data()),
            static_cast<std::streamsize>(bytes_.size()));
  if (!out) throw IoError("write failed: " + path);
}

BinReader BinReader::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw IoError("cannot open: " + path);
  const auto size = in.tellg();
  in.seekg(0);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
  in.read(reinterpret_cast<char*>(bytes.data()), size);
  if (!in) throw IoError("read failed: " + path);
  return BinReader(std::move(bytes), path);
}

void BinReader::need(std::size_t n) {
  if (pos_ + n > bytes_.size()) fail("unexpected end of data");
}

std::uint8_t BinReader::u8() {
  need(1);
  return bytes_[pos_++];
}

std::uint32_t BinReader::u32() {
  need(4);
  std::uint32_t v;
  std::memcpy(&v, bytes_.data() + pos_, 4);
  pos_ += 4;
  return v;
}

std::uint64_t BinReader::u64() {
  need(8);
  std::uint64_t v;
  std::memcpy(&v, bytes_.data() + pos_, 8);
  pos_ += 8;
  return v;
}

double BinReader::f64() {
  need(8);
  double v;
  std::memcpy(&v, bytes_.data() + pos_, 8);
  pos_ += 8;
  return v;
}

void BinReader::f64s(std::span<double> out) {
  need(out.size() * sizeof(double));
  std::memcpy(out.data(), bytes_.data() + pos_, out.size() * sizeof(double));
  pos_ += out.size() * sizeof(double);
}

std::string BinReader::str() {
  const std::uint32_t n = u32();
  need(n);
  std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
  pos_ += n;
  return s;
}

void BinReader::fail(const std::string& what) const {
  throw IoError(name_ + ": " + what + " (offset " + std::to_string(pos_) + ")");
}

}  // namespace hda::io
