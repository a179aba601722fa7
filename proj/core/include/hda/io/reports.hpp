/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hda/diag/scorecard.hpp"
#include "hda/diag/spectra.hpp"

namespace hda::io {

/// Deterministic CSV emission: fixed header, "%.12g" numbers, empty cells
/// for missing values.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  static std::string num(double v);
  static std::string num(std::optional<double> v);

  void row(const std::vector<std::string>& cells);
  const std::string& text() const { return text_; }
  void to_file(const std::string& path) const;

 private:
  std::size_t n_cols_;
  std::string text_;
};

using Json = nlohmann::ordered_json;

void save_json(const Json& j, const std::string& path);

/// Scorecard schema: experiment, reference, variable, lead, rmse_change_pct,
/// significant, pvalue.
void save_scorecard_csv(const diag::Scorecard& card, const std::string& path);
Json scorecard_json(const diag::Scorecard& card);

void save_spectra_csv(const diag::SpectraReport& report, const std::string& path);

}  // namespace hda::io
