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

#include "spamboost/objective.hpp"

#include <cmath>
#include <string>

#include "spamboost/error.hpp"

namespace spamboost {

double sigmoid(double raw) {
  if (raw >= 0.0) return 1.0 / (1.0 + std::exp(-raw));
  const double e = std::exp(raw);
  return e / (1.0 + e);
}

double logit(double probability) {
  if (!(probability > 0.0 && probability < 1.0)) {
    throw Error("logit: probability must lie strictly between 0 and 1");
  }
  return std::log(probability / (1.0 - probability));
}

std::vector<GradPair> compute_gradients(std::span<const Label> labels,
                                        std::span<const double> raw_scores) {
  if (labels.size() != raw_scores.size()) {
    throw Error("compute_gradients: " + std::to_string(labels.size()) + " labels vs " +
                std::to_string(raw_scores.size()) + " scores");
  }
  std::vector<GradPair> grads(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double p = sigmoid(raw_scores[i]);
    const double q = sigmoid(-raw_scores[i]);  // 1 - p without cancellation
    grads[i].g = labels[i] == kSpam ? -q : p;
    grads[i].h = p * q;
  }
  return grads;
}

double logistic_loss(std::span<const Label> labels, std::span<const double> raw_scores) {
  if (labels.size() != raw_scores.size() || labels.empty()) {
    throw Error("logistic_loss: labels and scores must be non-empty and equally long");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    // -log sigmoid(s) = log1p(exp(-s)), evaluated stably.
    const double s = labels[i] == kSpam ? raw_scores[i] : -raw_scores[i];
    total += s >= 0.0 ? std::log1p(std::exp(-s)) : -s + std::log1p(std::exp(s));
  }
  return total / static_cast<double>(labels.size());
}

double leaf_weight(double sum_grad, double sum_hess, double lambda) {
  if (!(sum_hess + lambda > 0.0)) throw Error("leaf_weight: H + lambda must be positive");
  return -sum_grad / (sum_hess + lambda);
}

double structure_score(std::span<const GradStats> leaves, double lambda, double gamma) {
  if (leaves.empty()) throw Error("structure_score: no leaves");
  double score = 0.0;
  for (const GradStats& leaf : leaves) {
    const double denom = leaf.sum_hess + lambda;
    if (!(denom > 0.0)) throw Error("structure_score: H + lambda must be positive");
    score -= 0.5 * leaf.sum_grad * leaf.sum_grad / denom;
  }
  return score + gamma * static_cast<double>(leaves.size());
}

double split_gain(const GradStats& left, const GradStats& right, double lambda, double gamma) {
  if (!(left.sum_hess + lambda > 0.0) || !(right.sum_hess + lambda > 0.0)) {
    throw Error("split_gain: H + lambda must be positive on both sides");
  }
  return detail::split_gain_unchecked(left.sum_grad, left.sum_hess, right.sum_grad,
                                      right.sum_hess, lambda, gamma);
}

}  // namespace spamboost
