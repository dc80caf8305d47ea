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

#include <string>

#include "spamboost/error.hpp"
#include "spamboost/model.hpp"
#include "spamboost/objective.hpp"

namespace spamboost {
namespace {

void check_matrix(const Model& model, const FeatureMatrix& x) {
  if (x.cols != model.feature_count) {
    throw Error("predict: matrix has " + std::to_string(x.cols) + " features, model expects " +
                std::to_string(model.feature_count));
  }
}

}  // namespace

std::vector<double> predict_raw(const Model& model, const FeatureMatrix& x) {
  check_matrix(model, x);
  std::vector<double> raw(x.rows, model.base_raw);
  const auto n = static_cast<std::int64_t>(x.rows);
#pragma omp parallel for schedule(static) if (n >= 1024)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto row = x.row(i);
    double acc = model.base_raw;
    for (const Tree& tree : model.trees) acc += tree.predict(row);
    raw[i] = acc;
  }
  return raw;
}

std::vector<double> predict_proba(const Model& model, const FeatureMatrix& x) {
  std::vector<double> out = predict_raw(model, x);
  for (double& v : out) v = sigmoid(v);
  return out;
}

std::vector<Label> predict_label(const Model& model, const FeatureMatrix& x, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error("predict_label: threshold must lie in [0, 1]");
  }
  const std::vector<double> proba = predict_proba(model, x);
  std::vector<Label> labels(proba.size());
  for (std::size_t i = 0; i < proba.size(); ++i) labels[i] = proba[i] >= threshold ? kSpam : kHam;
  return labels;
}

}  // namespace spamboost
