/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/config/toml.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hda/errors.hpp"

namespace hda::cfg {

std::int64_t TomlValue::as_int(const std::string& key) const {
  if (!is_int()) throw ConfigError("config key '" + key + "' must be an integer");
  return std::get<std::int64_t>(value_);
}

double TomlValue::as_double(const std::string& key) const {
  if (is_int()) return static_cast<double>(std::get<std::int64_t>(value_));
  if (!is_double()) throw ConfigError("config key '" + key + "' must be a number");
  return std::get<double>(value_);
}

bool TomlValue::as_bool(const std::string& key) const {
  if (!is_bool()) throw ConfigError("config key '" + key + "' must be a boolean");
  return std::get<bool>(value_);
}

const std::string& TomlValue::as_string(const std::string& key) const {
  if (!is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return std::get<std::string>(value_);
}

const TomlValue::Array& TomlValue::as_array(const std::string& key) const {
  if (!is_array()) throw ConfigError("config key '" + key + "' must be an array");
  return std::get<Array>(value_);
}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, int line, const std::string& where)
      : text_(text), line_(line), where_(where) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size() || text_[pos_] == '#';
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(where_ + ":" + std::to_string(line_) + ": " + what);
  }

  std::string_view rest() const { return text_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  std::string where_;
};

std::string parse_bare_key(Cursor& cur) {
  cur.skip_ws();
  std::string key;
  while (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_' ||
         cur.peek() == '-' || cur.peek() == '.')
    key.push_back(cur.take());
  if (key.empty()) cur.fail("expected a key");
  return key;
}

std::string parse_string(Cursor& cur) {
  std::string out;
  cur.take();  // opening quote
  while (true) {
    const char c = cur.peek();
    if (c == '\0') cur.fail("unterminated string");
    cur.take();
    if (c == '"') break;
    if (c == '\\') {
      const char e = cur.take();
      switch (e) {
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        default: cur.fail(std::string("unsupported escape \\") + e);
      }
    } else {
      out.push_back(c);
    }
  }
  return out;
}

TomlValue parse_value(Cursor& cur);

TomlValue parse_number_or_keyword(Cursor& cur) {
  cur.skip_ws();
  const std::string_view rest = cur.rest();
  if (rest.starts_with("true")) {
    cur.advance(4);
    return TomlValue(true);
  }
  if (rest.starts_with("false")) {
    cur.advance(5);
    return TomlValue(false);
  }
  std::size_t n = 0;
  bool is_float = false;
  while (n < rest.size()) {
    const char c = rest[n];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
      ++n;
    } else if (c == '.' || c == 'e' || c == 'E') {
      is_float = true;
      ++n;
    } else if (c == '_') {
      cur.fail("underscore digit separators are not supported");
    } else {
      break;
    }
  }
  if (n == 0) cur.fail("expected a value");
  const std::string token(rest.substr(0, n));
  cur.advance(n);
  if (is_float) {
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
      cur.fail("malformed float '" + token + "'");
    return TomlValue(v);
  }
  std::int64_t v = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size())
    cur.fail("malformed integer '" + token + "'");
  return TomlValue(v);
}

TomlValue parse_value(Cursor& cur) {
  cur.skip_ws();
  if (cur.peek() == '"') return TomlValue(parse_string(cur));
  if (cur.peek() == '[') {
    cur.take();
    TomlValue::Array items;
    if (!cur.accept(']')) {
      while (true) {
        items.push_back(parse_value(cur));
        if (cur.accept(']')) break;
        if (!cur.accept(',')) cur.fail("expected ',' or ']' in array");
        if (cur.accept(']')) break;  // trailing comma
      }
    }
    return TomlValue(std::move(items));
  }
  return parse_number_or_keyword(cur);
}

}  // namespace

TomlTable TomlTable::parse(const std::string& text, const std::string& name) {
  TomlTable table;
  table.name_ = name;
  std::istringstream stream(text);
  std::string line;
  std::string prefix;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    Cursor cur(line, line_no, name);
    if (cur.done()) continue;
    if (cur.accept('[')) {
      prefix = parse_bare_key(cur);
      if (!cur.accept(']')) cur.fail("expected ']' after table name");
      if (!cur.done()) cur.fail("unexpected text after table header");
      continue;
    }
    const std::string key = parse_bare_key(cur);
    if (!cur.accept('=')) cur.fail("expected '=' after key '" + key + "'");
    TomlValue value = parse_value(cur);
    if (!cur.done()) cur.fail("unexpected trailing text");
    const std::string full = prefix.empty() ? key : prefix + "." + key;
    if (!table.values_.emplace(full, std::move(value)).second)
      cur.fail("duplicate key '" + full + "'");
  }
  return table;
}

TomlTable TomlTable::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

const TomlValue* TomlTable::find(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return nullptr;
  consumed_.insert(key);
  return &it->second;
}

std::int64_t TomlTable::get_int(const std::string& key, std::int64_t fallback) const {
  const TomlValue* v = find(key);
  return v ? v->as_int(key) : fallback;
}

double TomlTable::get_double(const std::string& key, double fallback) const {
  const TomlValue* v = find(key);
  return v ? v->as_double(key) : fallback;
}

bool TomlTable::get_bool(const std::string& key, bool fallback) const {
  const TomlValue* v = find(key);
  return v ? v->as_bool(key) : fallback;
}

std::string TomlTable::get_string(const std::string& key, const std::string& fallback) const {
  const TomlValue* v = find(key);
  return v ? v->as_string(key) : fallback;
}

std::vector<std::int64_t> TomlTable::get_ints(const std::string& key,
                                              std::vector<std::int64_t> fallback) const {
  const TomlValue* v = find(key);
  if (!v) return fallback;
  std::vector<std::int64_t> out;
  for (const auto& item : v->as_array(key)) out.push_back(item.as_int(key));
  return out;
}

std::vector<double> TomlTable::get_doubles(const std::string& key,
                                           std::vector<double> fallback) const {
  const TomlValue* v = find(key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const auto& item : v->as_array(key)) out.push_back(item.as_double(key));
  return out;
}

std::vector<std::string> TomlTable::get_strings(const std::string& key,
                                                std::vector<std::string> fallback) const {
  const TomlValue* v = find(key);
  if (!v) return fallback;
  std::vector<std::string> out;
  for (const auto& item : v->as_array(key)) out.push_back(item.as_string(key));
  return out;
}

std::vector<std::string> TomlTable::unconsumed() const {
  std::vector<std::string> keys;
  for (const auto& [key, value] : values_)
    if (!consumed_.count(key)) keys.push_back(key);
  return keys;
}

void TomlTable::reject_unknown() const {
  const auto keys = unconsumed();
  if (keys.empty()) return;
  std::string msg = name_ + ": unknown config key(s):";
  for (const auto& k : keys) msg += " " + k;
  throw ConfigError(msg);
}

}  // namespace hda::cfg
