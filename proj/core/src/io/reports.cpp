/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/io/reports.hpp"

#include <cstdio>
#include <fstream>

#include "hda/errors.hpp"

namespace hda::io {

CsvWriter::CsvWriter(std::vector<std::string> header) : n_cols_(header.size()) {
  row(header);
}

std::string CsvWriter::num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string CsvWriter::num(std::optional<double> v) { return v ? num(*v) : std::string(); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != n_cols_)
    throw DimensionError("CsvWriter: row width does not match header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

void CsvWriter::to_file(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text_;
  if (!out) throw IoError("write failed: " + path);
}

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

void save_scorecard_csv(const diag::Scorecard& card, const std::string& path) {
  CsvWriter csv({"experiment", "reference", "variable", "lead", "rmse_change_pct", "significant",
                 "pvalue"});
  for (const auto& cell : card.cells)
    csv.row({card.experiment, card.reference, cell.variable, std::to_string(cell.lead),
             CsvWriter::num(cell.rmse_change_pct), cell.significant ? "true" : "false",
             CsvWriter::num(cell.pvalue)});
  csv.to_file(path);
}

Json scorecard_json(const diag::Scorecard& card) {
  Json cells = Json::array();
  for (const auto& cell : card.cells) {
    Json c;
    c["variable"] = cell.variable;
    c["lead"] = cell.lead;
    c["rmse_change_pct"] = cell.rmse_change_pct;
    c["significant"] = cell.significant;
    if (cell.pvalue)
      c["pvalue"] = *cell.pvalue;
    else
      c["pvalue"] = nullptr;
    cells.push_back(std::move(c));
  }
  Json j;
  j["experiment"] = card.experiment;
  j["reference"] = card.reference;
  j["cells"] = std::move(cells);
  return j;
}

void save_spectra_csv(const diag::SpectraReport& report, const std::string& path) {
  CsvWriter csv({"degree", "input", "target", "prediction", "error", "relative"});
  for (std::size_t l = 0; l < report.target.size(); ++l)
    csv.row({std::to_string(l), CsvWriter::num(report.input[l]), CsvWriter::num(report.target[l]),
             CsvWriter::num(report.prediction[l]), CsvWriter::num(report.error[l]),
             CsvWriter::num(report.relative[l])});
  csv.to_file(path);
}

}  // namespace hda::io
