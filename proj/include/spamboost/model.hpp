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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "spamboost/dataset.hpp"
#include "spamboost/hyperparams.hpp"
#include "spamboost/tree.hpp"

namespace spamboost {

inline constexpr int kModelFormatVersion = 1;

struct RoundLog {
  int round = 0;  // 1-based
  double train_error = 0.0;
  double train_loss = 0.0;
  std::optional<double> valid_error;
};

// Additive tree ensemble: raw(x) = base_raw + sum_k tree_k(x).
struct Model {
  Hyperparams params;
  double base_raw = 0.0;
  std::size_t feature_count = 0;
  std::vector<Tree> trees;
  std::vector<RoundLog> training_log;  // every round that was run
  int best_round = 0;                  // == trees.size()
};

// Boosting with early stopping on the training error (threshold 0.5).
Model train(const Dataset& train_ds, const Hyperparams& params, std::uint64_t seed);

// As train(), but early stopping monitors the error on valid_ds.
Model train_with_validation(const Dataset& train_ds, const Dataset& valid_ds,
                            const Hyperparams& params, std::uint64_t seed);

// Rows are predicted in parallel (OpenMP); each row sums trees in order.
std::vector<double> predict_raw(const Model& model, const FeatureMatrix& x);
std::vector<double> predict_proba(const Model& model, const FeatureMatrix& x);
// label = 1 iff probability >= threshold.
std::vector<Label> predict_label(const Model& model, const FeatureMatrix& x,
                                 double threshold = 0.5);

// Fraction of rows whose thresholded prediction differs from the label.
double classification_error(std::span<const Label> labels, std::span<const double> raw_scores);

namespace reference {
std::vector<double> predict_raw(const Model& model, const FeatureMatrix& x);
}  // namespace reference

nlohmann::ordered_json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& doc);
// The text form is stable: identical models serialise to identical bytes.
std::string serialize_model(const Model& model);
Model deserialize_model(const std::string& text);
void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

}  // namespace spamboost
