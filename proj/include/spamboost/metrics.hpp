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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spamboost/dataset.hpp"

namespace spamboost {

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + tn + fp + fn; }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

// A metric whose denominator is zero is reported as std::nullopt.
struct MetricsReport {
  ConfusionMatrix confusion;
  std::optional<double> accuracy;
  std::optional<double> specificity;
  std::optional<double> sensitivity;  // recall
  std::optional<double> precision;
  std::optional<double> f1;
  std::optional<double> balanced_accuracy;
  std::optional<double> roc_auc;
  std::optional<double> pr_auc;
};

struct CurvePoint {
  double x = 0.0;  // FPR for ROC, recall for PR
  double y = 0.0;  // TPR for ROC, precision for PR
  double threshold = 0.0;  // scores >= threshold are called positive
};

struct Curve {
  std::vector<CurvePoint> points;
  double auc = 0.0;
};

ConfusionMatrix confusion(std::span<const Label> actual, std::span<const Label> predicted);

// accuracy, specificity, sensitivity, precision, F1 and balanced accuracy.
MetricsReport scalar_metrics(const ConfusionMatrix& cm);

// One point per distinct score (descending), preceded by (0, 0) at +inf.
// The area is integrated with the trapezoid rule.
Curve roc_curve(std::span<const Label> actual, std::span<const double> scores);

// Rank-sum form of the ROC area: P(score_pos > score_neg) + 1/2 P(tie).
double roc_auc_mann_whitney(std::span<const Label> actual, std::span<const double> scores);

// One (recall, precision) point per distinct score (descending). The area is
// average precision: sum_k (recall_k - recall_{k-1}) * precision_k.
Curve pr_curve(std::span<const Label> actual, std::span<const double> scores);

// Full report: confusion at the probability threshold plus both curve areas.
MetricsReport evaluate_scores(std::span<const Label> actual, std::span<const double> scores,
                              double threshold = 0.5);

// Percentage rounded half-up to two decimals, or "undefined".
std::string format_percent(std::optional<double> fraction);

}  // namespace spamboost
