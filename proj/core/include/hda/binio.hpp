/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hda::io {

/// Append-only little-endian byte sink used by all "HDA1"/"FNN1" writers.
class BinWriter {
 public:
  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f64(double v);
  void f64s(std::span<const double> v);
  /// Length-prefixed UTF-8 string (u32 length).
  void str(const std::string& s);
  void raw(const void* data, std::size_t n);

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  void to_file(const std::string& path) const;

 private:
  std::vector<std::uint8_t> bytes_;
};

/// Little-endian byte source; every decode failure reports the byte offset.
class BinReader {
 public:
  explicit BinReader(std::vector<std::uint8_t> bytes, std::string name = "<buffer>")
      : bytes_(std::move(bytes)), name_(std::move(name)) {}

  static BinReader from_file(const std::string& path);

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  double f64();
  void f64s(std::span<double> out);
  std::string str();

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  bool at_end() const { return pos_ == bytes_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  /// Raises IoError mentioning file name and current offset.
  [[noreturn]] void fail(const std::string& what) const;

 private:
  void need(std::size_t n);

  std::vector<std::uint8_t> bytes_;
  std::string name_;
  std::size_t pos_ = 0;
};

}  // namespace hda::io
