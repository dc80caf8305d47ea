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

#include "spamboost/resampling.hpp"

#include <algorithm>
#include <string>

#include "spamboost/error.hpp"
#include "spamboost/random.hpp"

namespace spamboost {
namespace {

std::vector<std::size_t> positions_of(const Dataset& ds, Label label) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    if (ds.labels[i] == label) out.push_back(i);
  }
  return out;
}

void require_two_classes(const Dataset& ds, const char* op) {
  if (ds.count(kSpam) == 0 || ds.count(kHam) == 0) {
    throw Error(std::string(op) + ": both classes must be present");
  }
}

std::size_t next_row_id(const Dataset& ds) {
  return ds.row_ids.empty() ? 0 : *std::max_element(ds.row_ids.begin(), ds.row_ids.end()) + 1;
}

}  // namespace

ResampleMethod parse_resample_method(std::string_view name) {
  if (name == "none") return ResampleMethod::kNone;
  if (name == "over") return ResampleMethod::kRandomOver;
  if (name == "under") return ResampleMethod::kRandomUnder;
  if (name == "smote") return ResampleMethod::kSmote;
  if (name == "tomek") return ResampleMethod::kTomek;
  if (name == "smote-tomek") return ResampleMethod::kSmoteTomek;
  throw Error("unknown resampling method '" + std::string(name) + "'");
}

std::string_view resample_method_name(ResampleMethod method) {
  switch (method) {
    case ResampleMethod::kNone: return "none";
    case ResampleMethod::kRandomOver: return "over";
    case ResampleMethod::kRandomUnder: return "under";
    case ResampleMethod::kSmote: return "smote";
    case ResampleMethod::kTomek: return "tomek";
    case ResampleMethod::kSmoteTomek: return "smote-tomek";
  }
  return "none";
}

Label minority_label(const Dataset& ds) {
  return ds.count(kHam) < ds.count(kSpam) ? kHam : kSpam;
}

Dataset random_oversample(const Dataset& ds, std::uint64_t seed) {
  require_two_classes(ds, "random_oversample");
  const Label minority = minority_label(ds);
  const auto members = positions_of(ds, minority);
  const std::size_t deficit = ds.rows() - 2 * members.size();

  Dataset out = ds;
  Rng rng(seed);
  std::size_t id = next_row_id(ds);
  for (std::size_t i = 0; i < deficit; ++i) {
    const std::size_t src = members[rng.below(members.size())];
    const auto row = ds.row(src);
    out.features.insert(out.features.end(), row.begin(), row.end());
    out.labels.push_back(minority);
    out.row_ids.push_back(id++);
  }
  return out;
}

Dataset random_undersample(const Dataset& ds, std::uint64_t seed) {
  require_two_classes(ds, "random_undersample");
  const Label minority = minority_label(ds);
  const auto majority = positions_of(ds, minority == kSpam ? kHam : kSpam);
  const std::size_t keep = ds.count(minority);

  Rng rng(seed);
  std::vector<std::uint8_t> kept(ds.rows(), 1);
  for (const std::size_t p : majority) kept[p] = 0;
  for (const std::size_t j : rng.sample_sorted(majority.size(), keep)) kept[majority[j]] = 1;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    if (kept[i]) positions.push_back(i);
  }
  return take_rows(ds, positions);
}

Dataset smote(const Dataset& ds, std::size_t k_neighbors, std::uint64_t seed) {
  require_two_classes(ds, "smote");
  const Label minority = minority_label(ds);
  const auto members = positions_of(ds, minority);
  if (k_neighbors < 1 || k_neighbors >= members.size()) {
    throw Error("smote: k_neighbors must satisfy 1 <= k < minority size (k=" +
                std::to_string(k_neighbors) + ", minority=" + std::to_string(members.size()) + ")");
  }
  const std::size_t deficit = ds.rows() - 2 * members.size();
  Dataset out = ds;
  if (deficit == 0) return out;

  const auto neighbours = nearest_neighbors(ds, members, members, k_neighbors);
  Rng rng(seed);
  std::size_t id = next_row_id(ds);
  std::vector<double> synthetic(ds.feature_count);
  for (std::size_t s = 0; s < deficit; ++s) {
    const std::size_t base = rng.below(members.size());
    const auto& nn = neighbours[base];
    const std::size_t other = nn[rng.below(nn.size())];
    const double u = rng.uniform();
    const auto a = ds.row(members[base]);
    const auto b = ds.row(other);
    for (std::size_t f = 0; f < ds.feature_count; ++f) {
      // Clamp so rounding never leaves the segment's bounding box.
      const double v = a[f] + u * (b[f] - a[f]);
      synthetic[f] = std::clamp(v, std::min(a[f], b[f]), std::max(a[f], b[f]));
    }
    out.features.insert(out.features.end(), synthetic.begin(), synthetic.end());
    out.labels.push_back(minority);
    out.row_ids.push_back(id++);
  }
  return out;
}

Dataset tomek_links(const Dataset& ds, std::optional<Label> minority) {
  require_two_classes(ds, "tomek_links");
  const Label keep_label = minority.value_or(minority_label(ds));
  if (ds.rows() < 2) return ds;

  std::vector<std::size_t> all(ds.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto nn = nearest_neighbors(ds, all, all, 1);

  std::vector<std::uint8_t> removed(ds.rows(), 0);
  for (std::size_t a = 0; a < ds.rows(); ++a) {
    const std::size_t b = nn[a].front();
    if (nn[b].front() != a || ds.labels[a] == ds.labels[b]) continue;
    const std::size_t drop = ds.labels[a] == keep_label ? b : a;
    removed[drop] = 1;
  }
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    if (!removed[i]) positions.push_back(i);
  }
  return take_rows(ds, positions);
}

Dataset smote_tomek(const Dataset& ds, std::size_t k_neighbors, std::uint64_t seed) {
  require_two_classes(ds, "smote_tomek");
  const Label minority = minority_label(ds);
  return tomek_links(smote(ds, k_neighbors, seed), minority);
}

Dataset resample(const Dataset& ds, const ResampleSpec& spec) {
  switch (spec.method) {
    case ResampleMethod::kNone: return ds;
    case ResampleMethod::kRandomOver: return random_oversample(ds, spec.seed);
    case ResampleMethod::kRandomUnder: return random_undersample(ds, spec.seed);
    case ResampleMethod::kSmote: return smote(ds, spec.k_neighbors, spec.seed);
    case ResampleMethod::kTomek: return tomek_links(ds);
    case ResampleMethod::kSmoteTomek: return smote_tomek(ds, spec.k_neighbors, spec.seed);
  }
  return ds;
}

}  // namespace spamboost
