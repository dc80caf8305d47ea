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
#include <optional>
#include <span>
#include <vector>

#include "spamboost/dataset.hpp"
#include "spamboost/objective.hpp"

namespace spamboost {

using RowIndex = std::uint32_t;

// Column-major copy of a feature matrix; the split scans walk one feature at
// a time.
class ColumnMatrix {
 public:
  ColumnMatrix() = default;
  explicit ColumnMatrix(const FeatureMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> column(std::size_t f) const {
    return std::span<const double>(values_).subspan(f * rows_, rows_);
  }

 private:
  std::vector<double> values_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
};

struct SplitParams {
  double lambda = 1.0;
  double gamma = 0.0;
  double min_child_weight = 1.0;
};

// Rows with x[feature] < threshold go left.
struct SplitCandidate {
  std::size_t feature = 0;
  double threshold = 0.0;
  double gain = 0.0;
  GradStats left;
  GradStats right;
};

// Deterministic preference: larger gain, then lower feature index, then lower
// threshold.
bool better_split(const SplitCandidate& a, const SplitCandidate& b);

// Threshold between two adjacent distinct values lo < hi, guaranteed to send
// lo left and hi right.
double midpoint_threshold(double lo, double hi);

// Sort rows by (value, row) for one feature.
std::vector<RowIndex> sort_rows_by_feature(std::span<const double> column,
                                           std::span<const RowIndex> rows);

// Scans one feature whose rows are already sorted by (value, row). Returns the
// best admissible candidate with gain > 0, if any.
std::optional<SplitCandidate> scan_sorted_feature(std::span<const double> column,
                                                  std::span<const RowIndex> sorted_rows,
                                                  std::span<const GradPair> grads,
                                                  const GradStats& parent, std::size_t feature,
                                                  const SplitParams& params);

// Exact greedy search over the given features. Features are scanned in
// parallel with OpenMP; the reduction applies better_split in feature order so
// the result does not depend on the thread count.
std::optional<SplitCandidate> find_best_split(const ColumnMatrix& x,
                                              std::span<const RowIndex> rows,
                                              std::span<const std::size_t> features,
                                              std::span<const GradPair> grads,
                                              const SplitParams& params);

// Same search over features whose row lists are pre-sorted (one span per entry
// of features). Used by the tree grower.
std::optional<SplitCandidate> find_best_presorted_split(
    const ColumnMatrix& x, std::span<const std::size_t> features,
    std::span<const std::span<const RowIndex>> sorted_rows, std::span<const GradPair> grads,
    const GradStats& parent, const SplitParams& params);

namespace reference {

// Serial, self-contained implementation of find_best_split used to check the
// parallel kernel.
std::optional<SplitCandidate> find_best_split(const ColumnMatrix& x,
                                              std::span<const RowIndex> rows,
                                              std::span<const std::size_t> features,
                                              std::span<const GradPair> grads,
                                              const SplitParams& params);

}  // namespace reference
}  // namespace spamboost
