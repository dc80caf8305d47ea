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

#include <optional>
#include <span>
#include <string_view>

#include <json.hpp>

namespace spamboost {

// Training knobs. Defaults are the tuned spam-detector configuration:
// eta 0.4, gamma 0.2, depth 24, column sample 0.75, 200 rounds with
// early stopping after 10; row subsample and min child weight are 1.
struct Hyperparams {
  double eta = 0.4;
  double gamma = 0.2;
  double lambda = 1.0;
  int max_depth = 24;
  double colsample = 0.75;
  double subsample = 1.0;
  double min_child_weight = 1.0;
  int num_rounds = 200;
  std::optional<int> early_stopping_rounds = 10;
  double base_score = 0.5;

  void validate() const;
  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

// Field names as used in config files, model files and grid specifications,
// in canonical order.
std::span<const std::string_view> hyperparam_names();

// Assigns by name. early_stopping_rounds = 0 disables early stopping.
// Throws Error for unknown names or non-integral values of integer fields.
void set_hyperparam(Hyperparams& params, std::string_view name, double value);
double get_hyperparam(const Hyperparams& params, std::string_view name);

nlohmann::ordered_json hyperparams_to_json(const Hyperparams& params);
// Keys absent from doc keep their value from base. Unknown keys throw.
Hyperparams hyperparams_from_json(const nlohmann::json& doc, Hyperparams base = {});

}  // namespace spamboost
