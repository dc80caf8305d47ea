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

#include <algorithm>
#include <numeric>

#include "spamboost/split.hpp"

namespace spamboost {

ColumnMatrix::ColumnMatrix(const FeatureMatrix& m)
    : values_(m.rows * m.cols), rows_(m.rows), cols_(m.cols) {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t f = 0; f < cols_; ++f) values_[f * rows_ + i] = m.at(i, f);
  }
}

bool better_split(const SplitCandidate& a, const SplitCandidate& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.feature != b.feature) return a.feature < b.feature;
  return a.threshold < b.threshold;
}

double midpoint_threshold(double lo, double hi) {
  const double t = std::midpoint(lo, hi);
  // Adjacent doubles: the midpoint may round down onto lo.
  return lo < t ? t : hi;
}

std::vector<RowIndex> sort_rows_by_feature(std::span<const double> column,
                                           std::span<const RowIndex> rows) {
  std::vector<RowIndex> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end(), [&](RowIndex a, RowIndex b) {
    return column[a] < column[b] || (column[a] == column[b] && a < b);
  });
  return sorted;
}

std::optional<SplitCandidate> scan_sorted_feature(std::span<const double> column,
                                                  std::span<const RowIndex> sorted_rows,
                                                  std::span<const GradPair> grads,
                                                  const GradStats& parent, std::size_t feature,
                                                  const SplitParams& params) {
  std::optional<SplitCandidate> best;
  GradStats left;
  const double lambda = params.lambda;
  for (std::size_t i = 0; i + 1 < sorted_rows.size(); ++i) {
    left.add(grads[sorted_rows[i]]);
    const double value = column[sorted_rows[i]];
    const double next = column[sorted_rows[i + 1]];
    if (!(value < next)) continue;
    const GradStats right{parent.sum_grad - left.sum_grad, parent.sum_hess - left.sum_hess};
    if (left.sum_hess < params.min_child_weight || right.sum_hess < params.min_child_weight) {
      continue;
    }
    if (!(left.sum_hess + lambda > 0.0) || !(right.sum_hess + lambda > 0.0)) continue;
    const double gain = detail::split_gain_unchecked(left.sum_grad, left.sum_hess,
                                                     right.sum_grad, right.sum_hess, lambda,
                                                     params.gamma);
    // Strict comparison keeps the lowest threshold among equal gains.
    if (!best || gain > best->gain) {
      best = SplitCandidate{feature, midpoint_threshold(value, next), gain, left, right};
    }
  }
  if (best && best->gain > 0.0) return best;
  return std::nullopt;
}

}  // namespace spamboost
