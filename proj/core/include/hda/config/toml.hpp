/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace hda::cfg {

/// Scalar or homogeneous array value from a TOML document.
class TomlValue {
 public:
  using Array = std::vector<TomlValue>;
  using Storage = std::variant<std::int64_t, double, bool, std::string, Array>;

  TomlValue() : value_(std::int64_t{0}) {}
  explicit TomlValue(Storage v) : value_(std::move(v)) {}

  bool is_int() const { return std::holds_alternative<std::int64_t>(value_); }
  bool is_double() const { return std::holds_alternative<double>(value_); }
  bool is_bool() const { return std::holds_alternative<bool>(value_); }
  bool is_string() const { return std::holds_alternative<std::string>(value_); }
  bool is_array() const { return std::holds_alternative<Array>(value_); }

  std::int64_t as_int(const std::string& key) const;
  double as_double(const std::string& key) const;  // integers promote
  bool as_bool(const std::string& key) const;
  const std::string& as_string(const std::string& key) const;
  const Array& as_array(const std::string& key) const;

 private:
  Storage value_;
};

/// Flat dotted-key view of a TOML document, tracking key consumption so a
/// loader can reject typos. Supported subset: [table] headers, dotted keys,
/// strings, integers, floats, booleans, single-line arrays, # comments.
class TomlTable {
 public:
  static TomlTable parse(const std::string& text, const std::string& name = "<string>");
  static TomlTable parse_file(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<std::int64_t> get_ints(const std::string& key,
                                     std::vector<std::int64_t> fallback) const;
  std::vector<double> get_doubles(const std::string& key, std::vector<double> fallback) const;
  std::vector<std::string> get_strings(const std::string& key,
                                       std::vector<std::string> fallback) const;

  /// Keys present in the document that no getter has touched.
  std::vector<std::string> unconsumed() const;
  /// Raises ConfigError naming every unconsumed key.
  void reject_unknown() const;

 private:
  const TomlValue* find(const std::string& key) const;

  std::string name_;
  std::map<std::string, TomlValue> values_;
  mutable std::set<std::string> consumed_;
};

}  // namespace hda::cfg
