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
#include <utility>
#include <vector>

#include "spamboost/split.hpp"

namespace spamboost::reference {

std::optional<SplitCandidate> find_best_split(const ColumnMatrix& x,
                                              std::span<const RowIndex> rows,
                                              std::span<const std::size_t> features,
                                              std::span<const GradPair> grads,
                                              const SplitParams& params) {
  double total_g = 0.0;
  double total_h = 0.0;
  for (const RowIndex r : rows) {
    total_g += grads[r].g;
    total_h += grads[r].h;
  }

  std::optional<SplitCandidate> best;
  std::vector<std::pair<double, RowIndex>> entries;
  for (const std::size_t f : features) {
    const auto column = x.column(f);
    entries.clear();
    for (const RowIndex r : rows) entries.emplace_back(column[r], r);
    std::sort(entries.begin(), entries.end());

    double gl = 0.0;
    double hl = 0.0;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      gl += grads[entries[i].second].g;
      hl += grads[entries[i].second].h;
      if (entries[i].first == entries[i + 1].first) continue;
      const double gr = total_g - gl;
      const double hr = total_h - hl;
      if (hl < params.min_child_weight || hr < params.min_child_weight) continue;
      if (hl + params.lambda <= 0.0 || hr + params.lambda <= 0.0) continue;
      const SplitCandidate c{f, midpoint_threshold(entries[i].first, entries[i + 1].first),
                             split_gain({gl, hl}, {gr, hr}, params.lambda, params.gamma),
                             {gl, hl},
                             {gr, hr}};
      if (c.gain > 0.0 && (!best || better_split(c, *best))) best = c;
    }
  }
  return best;
}

}  // namespace spamboost::reference
