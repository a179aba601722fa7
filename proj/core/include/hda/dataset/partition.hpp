/*
 * (C) Copyright 2026 hda authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hda::dataset {

enum class Split : std::uint8_t { Train = 0, Valid = 1, Test = 2, Discard = 3 };

std::string to_string(Split s);

/// Chronological day partition: the first train_days form the training set,
/// the remainder is labelled by repeating the pattern 4 discarded / 8
/// validation / 4 discarded / 8 test until exhausted; a trailing partial
/// segment is filled in pattern order and truncated.
struct SplitSpec {
  int windows_per_day = 2;
  std::vector<Split> day_labels;

  int n_days() const { return static_cast<int>(day_labels.size()); }
  int count(Split s) const;
  /// Number of complete valid+test batches (8-day validation blocks).
  int n_batches() const;
  Split window_label(int window) const;
  std::vector<int> days_of(Split s) const;
};

SplitSpec partition(int n_days, int train_days, int windows_per_day = 2);

/// Training-subset selection strategies for the dataset-size sensitivity
/// runs: spread evenly over the archive, earliest block, or latest block.
enum class SizeStrategy : std::uint8_t { OldAndNew = 0, Old = 1, New = 2 };

std::string to_string(SizeStrategy s);
SizeStrategy size_strategy_from_string(const std::string& s);

/// Pick m of the n training days according to the strategy; indices are
/// returned in chronological order.
std::vector<int> select_train_days(int n_train_days, int m, SizeStrategy strategy);

/// Copy of spec with the training set reduced to the selected days (the
/// others become Discard); validation/test labels are untouched.
SplitSpec restrict_training(const SplitSpec& spec, const std::vector<int>& train_days);

}  // namespace hda::dataset
