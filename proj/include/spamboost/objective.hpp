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

#include <span>
#include <vector>

#include "spamboost/dataset.hpp"

namespace spamboost {

// First and second derivative of the loss with respect to the raw score.
struct GradPair {
  double g = 0.0;
  double h = 0.0;
};

// Summed gradient statistics of a node: G = sum g_i, H = sum h_i.
struct GradStats {
  double sum_grad = 0.0;
  double sum_hess = 0.0;

  void add(const GradPair& p) {
    sum_grad += p.g;
    sum_hess += p.h;
  }
};

double sigmoid(double raw);
double logit(double probability);

// Binary logistic loss: g = p - y, h = p (1 - p) with p = sigmoid(raw).
std::vector<GradPair> compute_gradients(std::span<const Label> labels,
                                        std::span<const double> raw_scores);

// Mean negative log-likelihood of the labels under sigmoid(raw).
double logistic_loss(std::span<const Label> labels, std::span<const double> raw_scores);

// Optimal weight of a leaf: -G / (H + lambda).
double leaf_weight(double sum_grad, double sum_hess, double lambda);

// Objective of a fixed tree structure:
//   -1/2 * sum_j G_j^2 / (H_j + lambda) + gamma * T
double structure_score(std::span<const GradStats> leaves, double lambda, double gamma);

// Loss reduction from splitting a leaf into left and right:
//   1/2 [G_L^2/(H_L+l) + G_R^2/(H_R+l) - (G_L+G_R)^2/(H_L+H_R+l)] - gamma
double split_gain(const GradStats& left, const GradStats& right, double lambda, double gamma);

namespace detail {

// split_gain without argument checks; callers guarantee positive denominators.
inline double split_gain_unchecked(double gl, double hl, double gr, double hr, double lambda,
                                   double gamma) {
  const double g = gl + gr;
  return 0.5 * (gl * gl / (hl + lambda) + gr * gr / (hr + lambda) - g * g / (hl + hr + lambda)) -
         gamma;
}

}  // namespace detail
}  // namespace spamboost
