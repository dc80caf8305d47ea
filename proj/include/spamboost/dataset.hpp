// Copyright 2026 The Spamboost Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace spamboost {

using Label = std::uint8_t;  // 1 = spam, 0 = non-spam
inline constexpr Label kSpam = 1;
inline constexpr Label kHam = 0;

// Read-only row-major view over a dense feature matrix.
struct FeatureMatrix {
  std::span<const double> values;
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::span<const double> row(std::size_t i) const {
    return values.subspan(i * cols, cols);
  }
  double at(std::size_t i, std::size_t f) const { return values[i * cols + f]; }
};

// Dense labelled dataset. row_ids are positional in the source file and are
// carried through every split and resampling step.
struct Dataset {
  std::size_t feature_count = 0;
  std::vector<double> features;  // rows() * feature_count, row-major
  std::vector<Label> labels;
  std::vector<std::size_t> row_ids;

  std::size_t rows() const { return labels.size(); }
  bool empty() const { return labels.empty(); }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(features).subspan(i * feature_count, feature_count);
  }
  double at(std::size_t i, std::size_t f) const { return features[i * feature_count + f]; }
  FeatureMatrix matrix() const { return {features, rows(), feature_count}; }
  std::size_t count(Label label) const;

  // Throws Error if any invariant is broken (binary labels, finite values,
  // consistent sizes, unique row ids).
  void validate() const;
};

// Headerless CSV, comma separated, label in the last field.
Dataset load_dataset(const std::filesystem::path& path,
                     std::optional<std::size_t> expected_features = std::nullopt);
Dataset parse_dataset(std::istream& in,
                      std::optional<std::size_t> expected_features = std::nullopt);
void write_dataset_csv(const Dataset& ds, std::ostream& out);

// Rows at the given positions, in the given order.
Dataset take_rows(const Dataset& ds, std::span<const std::size_t> positions);
// Rows whose row_id is listed; throws if an id is absent.
Dataset select_row_ids(const Dataset& ds, std::span<const std::size_t> ids);

struct SplitSpec {
  double test_fraction = 0.3;
  std::uint64_t seed = 1;

  void validate() const;
};

struct TrainTestSplit {
  Dataset train;
  Dataset test;
};

// Per-class test quota: round-half-to-even(fraction * class_count).
std::size_t class_quota(double fraction, std::size_t class_count);

// Each class is shuffled with the seed and its first quota rows go to test.
// Both parts keep the source row order.
TrainTestSplit stratified_split(const Dataset& ds, const SplitSpec& spec);

struct Fold {
  std::vector<std::size_t> train_ids;  // row_ids
  std::vector<std::size_t> valid_ids;
};

// Stratified k folds; every row_id lands in exactly one valid_ids.
std::vector<Fold> kfold_indices(const Dataset& ds, std::size_t k, std::uint64_t seed);

}  // namespace spamboost
