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

#include <cmath>
#include <limits>

#include "spamboost/resampling.hpp"

namespace spamboost::reference {

// Repeated selection of the closest remaining candidate.
std::vector<std::vector<std::size_t>> nearest_neighbors(const Dataset& ds,
                                                        std::span<const std::size_t> queries,
                                                        std::span<const std::size_t> candidates,
                                                        std::size_t k) {
  std::vector<std::vector<std::size_t>> result;
  for (const std::size_t q : queries) {
    std::vector<std::size_t> chosen;
    std::vector<bool> used(candidates.size(), false);
    while (chosen.size() < k) {
      std::size_t best = candidates.size();
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        const std::size_t c = candidates[j];
        if (used[j] || c == q) continue;
        double d = 0.0;
        for (std::size_t f = 0; f < ds.feature_count; ++f) {
          d += (ds.at(q, f) - ds.at(c, f)) * (ds.at(q, f) - ds.at(c, f));
        }
        if (best == candidates.size() || d < best_d ||
            (d == best_d && ds.row_ids[c] < ds.row_ids[candidates[best]])) {
          best = j;
          best_d = d;
        }
      }
      if (best == candidates.size()) break;
      used[best] = true;
      chosen.push_back(candidates[best]);
    }
    result.push_back(std::move(chosen));
  }
  return result;
}

}  // namespace spamboost::reference
