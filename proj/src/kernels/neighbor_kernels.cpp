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

#include "spamboost/resampling.hpp"

namespace spamboost {
namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t f = 0; f < a.size(); ++f) {
    const double t = a[f] - b[f];
    d += t * t;
  }
  return d;
}

std::vector<std::size_t> k_nearest(const Dataset& ds, std::size_t query,
                                   std::span<const std::size_t> candidates, std::size_t k,
                                   std::vector<std::pair<double, std::size_t>>& scratch) {
  scratch.clear();
  const auto q = ds.row(query);
  for (const std::size_t c : candidates) {
    if (c != query) scratch.emplace_back(squared_distance(q, ds.row(c)), c);
  }
  const auto closer = [&](const auto& a, const auto& b) {
    return a.first < b.first || (a.first == b.first && ds.row_ids[a.second] < ds.row_ids[b.second]);
  };
  const std::size_t take = std::min(k, scratch.size());
  std::partial_sort(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(take),
                    scratch.end(), closer);
  std::vector<std::size_t> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(scratch[i].second);
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> nearest_neighbors(const Dataset& ds,
                                                        std::span<const std::size_t> queries,
                                                        std::span<const std::size_t> candidates,
                                                        std::size_t k) {
  std::vector<std::vector<std::size_t>> result(queries.size());
  const auto n = static_cast<std::int64_t>(queries.size());
#pragma omp parallel if (queries.size() * candidates.size() >= (1 << 16))
  {
    std::vector<std::pair<double, std::size_t>> scratch;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      result[i] = k_nearest(ds, queries[i], candidates, k, scratch);
    }
  }
  return result;
}

}  // namespace spamboost
