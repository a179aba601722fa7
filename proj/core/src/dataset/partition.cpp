/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "hda/dataset/partition.hpp"

#include <algorithm>

#include "hda/errors.hpp"

namespace hda::dataset {

std::string to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Valid: return "valid";
    case Split::Test: return "test";
    case Split::Discard: return "discard";
  }
  throw ConfigError("unknown split");
}

int SplitSpec::count(Split s) const {
  return static_cast<int>(std::count(day_labels.begin(), day_labels.end(), s));
}

int SplitSpec::n_batches() const {
  // A batch is a maximal run of consecutive validation days.
  int batches = 0;
  bool in_valid = false;
  for (Split s : day_labels) {
    if (s == Split::Valid && !in_valid) ++batches;
    in_valid = s == Split::Valid;
  }
  return batches;
}

Split SplitSpec::window_label(int window) const {
  const int day = window / windows_per_day;
  if (day < 0 || day >= n_days()) throw DimensionError("window outside partition");
  return day_labels[day];
}

std::vector<int> SplitSpec::days_of(Split s) const {
  std::vector<int> days;
  for (int d = 0; d < n_days(); ++d)
    if (day_labels[d] == s) days.push_back(d);
  return days;
}

SplitSpec partition(int n_days, int train_days, int windows_per_day) {
  if (windows_per_day < 1) throw ConfigError("partition: windows_per_day must be >= 1");
  if (train_days < 0 || n_days <= train_days)
    throw ConfigError("partition: need n_days > train_days >= 0, got " + std::to_string(n_days) +
                      " / " + std::to_string(train_days));

  SplitSpec spec;
  spec.windows_per_day = windows_per_day;
  spec.day_labels.assign(n_days, Split::Discard);
  for (int d = 0; d < train_days; ++d) spec.day_labels[d] = Split::Train;

  // 4 discarded, 8 validation, 4 discarded, 8 test, repeated to the end.
  static constexpr struct {
    Split label;
    int length;
  } kPattern[] = {{Split::Discard, 4}, {Split::Valid, 8}, {Split::Discard, 4}, {Split::Test, 8}};

  int day = train_days;
  while (day < n_days) {
    for (const auto& seg : kPattern) {
      for (int k = 0; k < seg.length && day < n_days; ++k) spec.day_labels[day++] = seg.label;
      if (day >= n_days) break;
    }
  }
  return spec;
}

std::string to_string(SizeStrategy s) {
  switch (s) {
    case SizeStrategy::OldAndNew: return "old-and-new";
    case SizeStrategy::Old: return "old";
    case SizeStrategy::New: return "new";
  }
  throw ConfigError("unknown size strategy");
}

SizeStrategy size_strategy_from_string(const std::string& s) {
  if (s == "old-and-new") return SizeStrategy::OldAndNew;
  if (s == "old") return SizeStrategy::Old;
  if (s == "new") return SizeStrategy::New;
  throw ConfigError("unknown size strategy '" + s + "'");
}

std::vector<int> select_train_days(int n_train_days, int m, SizeStrategy strategy) {
  if (m < 1 || m > n_train_days)
    throw ConfigError("select_train_days: need 1 <= m <= " + std::to_string(n_train_days));
  std::vector<int> days;
  days.reserve(m);
  switch (strategy) {
    case SizeStrategy::Old:
      for (int k = 0; k < m; ++k) days.push_back(k);
      break;
    case SizeStrategy::New:
      for (int k = n_train_days - m; k < n_train_days; ++k) days.push_back(k);
      break;
    case SizeStrategy::OldAndNew:
      // floor(k n / m) is strictly increasing for m <= n.
      for (int k = 0; k < m; ++k)
        days.push_back(static_cast<int>(static_cast<std::int64_t>(k) * n_train_days / m));
      break;
  }
  return days;
}

SplitSpec restrict_training(const SplitSpec& spec, const std::vector<int>& train_days) {
  SplitSpec out = spec;
  std::vector<int> full = spec.days_of(Split::Train);
  for (int d : full) out.day_labels[d] = Split::Discard;
  for (int idx : train_days) {
    if (idx < 0 || idx >= static_cast<int>(full.size()))
      throw ConfigError("restrict_training: training-day index out of range");
    out.day_labels[full[idx]] = Split::Train;
  }
  return out;
}

}  // namespace hda::dataset
