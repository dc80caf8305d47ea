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
#include <string>
#include <string_view>
#include <vector>

#include "spamboost/dataset.hpp"

namespace spamboost {

enum class ResampleMethod { kNone, kRandomOver, kRandomUnder, kSmote, kTomek, kSmoteTomek };

struct ResampleSpec {
  ResampleMethod method = ResampleMethod::kNone;
  std::size_t k_neighbors = 5;
  std::uint64_t seed = 1;
};

// CLI spellings: none, over, under, smote, tomek, smote-tomek.
ResampleMethod parse_resample_method(std::string_view name);
std::string_view resample_method_name(ResampleMethod method);

// Minority is the smaller class; on a tie, spam.
Label minority_label(const Dataset& ds);

// Appends copies of minority rows (uniform, with replacement) until the class
// counts match. New rows get fresh row ids after the current maximum.
Dataset random_oversample(const Dataset& ds, std::uint64_t seed);

// Keeps a uniform sample (without replacement) of majority rows equal in size
// to the minority class; surviving rows keep their order.
Dataset random_undersample(const Dataset& ds, std::uint64_t seed);

// Appends synthetic minority rows x_i + u (x_nn - x_i), x_nn drawn from the
// k Euclidean nearest minority neighbours of a random minority row x_i.
Dataset smote(const Dataset& ds, std::size_t k_neighbors, std::uint64_t seed);

// Removes the non-minority member of every opposite-class mutual-nearest-
// neighbour pair. minority defaults to minority_label(ds).
Dataset tomek_links(const Dataset& ds, std::optional<Label> minority = std::nullopt);

// tomek_links(smote(ds)), keeping the minority class of the input.
Dataset smote_tomek(const Dataset& ds, std::size_t k_neighbors, std::uint64_t seed);

Dataset resample(const Dataset& ds, const ResampleSpec& spec);

// k nearest candidates (by squared Euclidean distance, ties to lower row id)
// for each query, excluding the query position itself. Queries are processed
// in parallel.
std::vector<std::vector<std::size_t>> nearest_neighbors(const Dataset& ds,
                                                        std::span<const std::size_t> queries,
                                                        std::span<const std::size_t> candidates,
                                                        std::size_t k);

namespace reference {
std::vector<std::vector<std::size_t>> nearest_neighbors(const Dataset& ds,
                                                        std::span<const std::size_t> queries,
                                                        std::span<const std::size_t> candidates,
                                                        std::size_t k);
}  // namespace reference

}  // namespace spamboost
