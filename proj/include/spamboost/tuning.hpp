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
#include <string>
#include <vector>

#include <json.hpp>

#include "spamboost/dataset.hpp"
#include "spamboost/hyperparams.hpp"

namespace spamboost {

struct GridAxis {
  std::string name;  // a hyperparam_names() entry
  std::vector<double> values;
};

// Candidate values per hyperparameter. Axes are kept in canonical
// hyperparameter order; enumeration varies the last axis fastest.
class ParamGrid {
 public:
  void add_axis(std::string name, std::vector<double> values);
  const std::vector<GridAxis>& axes() const { return axes_; }
  std::size_t size() const;
  // Every combination applied on top of base, validated.
  std::vector<Hyperparams> enumerate(const Hyperparams& base) const;

  // JSON object: {"eta": [0.1, 0.4], "max_depth": [6, 24], ...}.
  static ParamGrid from_json(const nlohmann::json& doc);
  static ParamGrid load(const std::filesystem::path& path);

 private:
  std::vector<GridAxis> axes_;
};

struct ValidationConfig {
  enum class Strategy { kHoldout, kKFold };
  Strategy strategy = Strategy::kHoldout;
  double holdout_fraction = 0.2;
  std::size_t folds = 5;
  std::uint64_t seed = 1;

  void validate() const;
};

struct TraceRecord {
  Hyperparams params;
  double validation_error = 0.0;  // mean over folds
  double rounds_used = 0.0;       // mean trees kept over folds
  double wall_seconds = 0.0;
};

struct SearchResult {
  Hyperparams best;
  std::size_t best_index = 0;
  std::vector<TraceRecord> trace;  // grid enumeration order
};

// Trains every combination with early stopping monitored on the validation
// rows and returns the lowest mean validation error (earliest on ties).
// Only rows of train are read.
SearchResult grid_search(const Dataset& train, const ParamGrid& grid,
                         const ValidationConfig& validation, std::uint64_t seed,
                         const Hyperparams& base = {});

void write_trace_csv(const SearchResult& result, std::ostream& out);

}  // namespace spamboost
