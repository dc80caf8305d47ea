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

#include <omp.h>

#include "spamboost/split.hpp"

namespace spamboost {
namespace {

// Below this many (row, feature) visits the fork/join costs more than it saves.
constexpr std::size_t kMinParallelWork = 1 << 14;

std::optional<SplitCandidate> reduce_in_feature_order(
    std::span<const std::optional<SplitCandidate>> per_feature) {
  std::optional<SplitCandidate> best;
  for (const auto& c : per_feature) {
    if (c && (!best || better_split(*c, *best))) best = c;
  }
  return best;
}

}  // namespace

std::optional<SplitCandidate> find_best_split(const ColumnMatrix& x,
                                              std::span<const RowIndex> rows,
                                              std::span<const std::size_t> features,
                                              std::span<const GradPair> grads,
                                              const SplitParams& params) {
  GradStats parent;
  for (const RowIndex r : rows) parent.add(grads[r]);

  std::vector<std::optional<SplitCandidate>> per_feature(features.size());
  const auto n_features = static_cast<std::int64_t>(features.size());
  const bool parallel = rows.size() * features.size() >= kMinParallelWork;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t i = 0; i < n_features; ++i) {
    const auto column = x.column(features[i]);
    const auto sorted = sort_rows_by_feature(column, rows);
    per_feature[i] = scan_sorted_feature(column, sorted, grads, parent, features[i], params);
  }
  return reduce_in_feature_order(per_feature);
}

std::optional<SplitCandidate> find_best_presorted_split(
    const ColumnMatrix& x, std::span<const std::size_t> features,
    std::span<const std::span<const RowIndex>> sorted_rows, std::span<const GradPair> grads,
    const GradStats& parent, const SplitParams& params) {
  std::vector<std::optional<SplitCandidate>> per_feature(features.size());
  const auto n_features = static_cast<std::int64_t>(features.size());
  const std::size_t n_rows = sorted_rows.empty() ? 0 : sorted_rows.front().size();
  const bool parallel = n_rows * features.size() >= kMinParallelWork;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t i = 0; i < n_features; ++i) {
    per_feature[i] = scan_sorted_feature(x.column(features[i]), sorted_rows[i], grads, parent,
                                         features[i], params);
  }
  return reduce_in_feature_order(per_feature);
}

}  // namespace spamboost
