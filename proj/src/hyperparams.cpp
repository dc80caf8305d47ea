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

#include "spamboost/hyperparams.hpp"

#include <array>
#include <cmath>
#include <string>

#include "spamboost/error.hpp"

namespace spamboost {
namespace {

constexpr std::array<std::string_view, 10> kNames = {
    "eta",      "gamma",      "lambda",         "max_depth",  "colsample",
    "subsample", "min_child_weight", "num_rounds", "early_stopping_rounds", "base_score"};

int as_int(std::string_view name, double value) {
  if (!std::isfinite(value) || value != std::floor(value) || std::abs(value) > 1e9) {
    throw Error("hyperparameter '" + std::string(name) + "' must be an integer");
  }
  return static_cast<int>(value);
}

}  // namespace

void Hyperparams::validate() const {
  auto fail = [](const std::string& msg) { throw Error("hyperparams: " + msg); };
  if (!(eta > 0.0 && eta <= 1.0)) fail("eta must lie in (0, 1]");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) fail("gamma must be >= 0");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) fail("lambda must be >= 0");
  if (max_depth < 1) fail("max_depth must be >= 1");
  if (!(colsample > 0.0 && colsample <= 1.0)) fail("colsample must lie in (0, 1]");
  if (!(subsample > 0.0 && subsample <= 1.0)) fail("subsample must lie in (0, 1]");
  if (!(min_child_weight >= 0.0) || !std::isfinite(min_child_weight)) {
    fail("min_child_weight must be >= 0");
  }
  if (num_rounds < 1) fail("num_rounds must be >= 1");
  if (early_stopping_rounds && *early_stopping_rounds < 1) {
    fail("early_stopping_rounds must be >= 1");
  }
  if (!(base_score > 0.0 && base_score < 1.0)) fail("base_score must lie in (0, 1)");
}

std::span<const std::string_view> hyperparam_names() { return kNames; }

void set_hyperparam(Hyperparams& p, std::string_view name, double value) {
  if (name == "eta") p.eta = value;
  else if (name == "gamma") p.gamma = value;
  else if (name == "lambda") p.lambda = value;
  else if (name == "max_depth") p.max_depth = as_int(name, value);
  else if (name == "colsample") p.colsample = value;
  else if (name == "subsample") p.subsample = value;
  else if (name == "min_child_weight") p.min_child_weight = value;
  else if (name == "num_rounds") p.num_rounds = as_int(name, value);
  else if (name == "early_stopping_rounds") {
    const int rounds = as_int(name, value);
    p.early_stopping_rounds = rounds == 0 ? std::nullopt : std::optional<int>(rounds);
  } else if (name == "base_score") p.base_score = value;
  else throw Error("unknown hyperparameter '" + std::string(name) + "'");
}

double get_hyperparam(const Hyperparams& p, std::string_view name) {
  if (name == "eta") return p.eta;
  if (name == "gamma") return p.gamma;
  if (name == "lambda") return p.lambda;
  if (name == "max_depth") return p.max_depth;
  if (name == "colsample") return p.colsample;
  if (name == "subsample") return p.subsample;
  if (name == "min_child_weight") return p.min_child_weight;
  if (name == "num_rounds") return p.num_rounds;
  if (name == "early_stopping_rounds") return p.early_stopping_rounds.value_or(0);
  if (name == "base_score") return p.base_score;
  throw Error("unknown hyperparameter '" + std::string(name) + "'");
}

nlohmann::ordered_json hyperparams_to_json(const Hyperparams& p) {
  nlohmann::ordered_json doc;
  doc["eta"] = p.eta;
  doc["gamma"] = p.gamma;
  doc["lambda"] = p.lambda;
  doc["max_depth"] = p.max_depth;
  doc["colsample"] = p.colsample;
  doc["subsample"] = p.subsample;
  doc["min_child_weight"] = p.min_child_weight;
  doc["num_rounds"] = p.num_rounds;
  doc["early_stopping_rounds"] =
      p.early_stopping_rounds ? nlohmann::ordered_json(*p.early_stopping_rounds) : nullptr;
  doc["base_score"] = p.base_score;
  return doc;
}

Hyperparams hyperparams_from_json(const nlohmann::json& doc, Hyperparams base) {
  if (!doc.is_object()) throw Error("hyperparams: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "early_stopping_rounds" && value.is_null()) {
      base.early_stopping_rounds.reset();
      continue;
    }
    if (!value.is_number()) {
      throw Error("hyperparams: value of '" + key + "' must be a number");
    }
    set_hyperparam(base, key, value.get<double>());
  }
  base.validate();
  return base;
}

}  // namespace spamboost
