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

#include "spamboost/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "spamboost/error.hpp"

namespace spamboost {
namespace {

std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

void check_scored(std::span<const Label> actual, std::span<const double> scores) {
  if (actual.size() != scores.size()) throw Error("metrics: labels and scores differ in length");
  for (const Label y : actual) {
    if (y != kHam && y != kSpam) throw Error("metrics: labels must be 0 or 1");
  }
  for (const double s : scores) {
    if (std::isnan(s)) throw Error("metrics: NaN score");
  }
}

// Positions sorted by descending score; ties keep input order.
std::vector<std::size_t> order_by_score_desc(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

// Cumulative (threshold, tp, fp) after each group of equal scores.
struct Step {
  double threshold;
  std::size_t tp;
  std::size_t fp;
};

std::vector<Step> threshold_steps(std::span<const Label> actual, std::span<const double> scores) {
  const auto order = order_by_score_desc(scores);
  std::vector<Step> steps;
  std::size_t tp = 0;
  std::size_t fp = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    (actual[order[i]] == kSpam ? tp : fp) += 1;
    const bool group_ends = i + 1 == order.size() || scores[order[i + 1]] != scores[order[i]];
    if (group_ends) steps.push_back({scores[order[i]], tp, fp});
  }
  return steps;
}

}  // namespace

ConfusionMatrix confusion(std::span<const Label> actual, std::span<const Label> predicted) {
  if (actual.size() != predicted.size()) throw Error("confusion: length mismatch");
  if (actual.empty()) throw Error("confusion: no observations");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const Label a = actual[i];
    const Label p = predicted[i];
    if ((a != kHam && a != kSpam) || (p != kHam && p != kSpam)) {
      throw Error("confusion: labels must be 0 or 1");
    }
    if (a == kSpam) {
      (p == kSpam ? cm.tp : cm.fn) += 1;
    } else {
      (p == kSpam ? cm.fp : cm.tn) += 1;
    }
  }
  return cm;
}

MetricsReport scalar_metrics(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw Error("scalar_metrics: empty confusion matrix");
  MetricsReport r;
  r.confusion = cm;
  r.accuracy = ratio(cm.tp + cm.tn, cm.total());
  r.specificity = ratio(cm.tn, cm.tn + cm.fp);
  r.sensitivity = ratio(cm.tp, cm.tp + cm.fn);
  r.precision = ratio(cm.tp, cm.tp + cm.fp);
  if (r.precision && r.sensitivity && *r.precision + *r.sensitivity > 0.0) {
    r.f1 = 2.0 * *r.precision * *r.sensitivity / (*r.precision + *r.sensitivity);
  }
  if (r.sensitivity && r.specificity) r.balanced_accuracy = (*r.sensitivity + *r.specificity) / 2.0;
  return r;
}

Curve roc_curve(std::span<const Label> actual, std::span<const double> scores) {
  check_scored(actual, scores);
  const std::size_t pos = static_cast<std::size_t>(std::count(actual.begin(), actual.end(), kSpam));
  const std::size_t neg = actual.size() - pos;
  if (pos == 0 || neg == 0) throw Error("roc_curve: both classes are required");

  Curve curve;
  curve.points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
  // Twice the area in units of (tp x fp) counts; exact in double for any
  // realistic dataset size.
  double twice_area = 0.0;
  std::size_t prev_tp = 0;
  std::size_t prev_fp = 0;
  for (const Step& s : threshold_steps(actual, scores)) {
    twice_area += static_cast<double>(s.fp - prev_fp) * static_cast<double>(s.tp + prev_tp);
    curve.points.push_back({static_cast<double>(s.fp) / static_cast<double>(neg),
                            static_cast<double>(s.tp) / static_cast<double>(pos), s.threshold});
    prev_tp = s.tp;
    prev_fp = s.fp;
  }
  curve.auc = twice_area / (2.0 * static_cast<double>(pos) * static_cast<double>(neg));
  return curve;
}

double roc_auc_mann_whitney(std::span<const Label> actual, std::span<const double> scores) {
  check_scored(actual, scores);
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  // Sum of doubled mid-ranks of positives keeps everything integral.
  double twice_rank_sum = 0.0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double twice_mid_rank = static_cast<double>(i + 1 + j);  // ranks i+1..j
    for (std::size_t k = i; k < j; ++k) {
      if (actual[order[k]] == kSpam) {
        twice_rank_sum += twice_mid_rank;
        ++pos;
      }
    }
    i = j;
  }
  const std::size_t neg = actual.size() - pos;
  if (pos == 0 || neg == 0) throw Error("roc_auc_mann_whitney: both classes are required");
  const double p = static_cast<double>(pos);
  const double u2 = twice_rank_sum - p * (p + 1.0);
  return u2 / (2.0 * p * static_cast<double>(neg));
}

Curve pr_curve(std::span<const Label> actual, std::span<const double> scores) {
  check_scored(actual, scores);
  const std::size_t pos = static_cast<std::size_t>(std::count(actual.begin(), actual.end(), kSpam));
  if (pos == 0) throw Error("pr_curve: no positive labels");

  Curve curve;
  double prev_recall = 0.0;
  for (const Step& s : threshold_steps(actual, scores)) {
    const double recall = static_cast<double>(s.tp) / static_cast<double>(pos);
    const double precision = static_cast<double>(s.tp) / static_cast<double>(s.tp + s.fp);
    curve.auc += (recall - prev_recall) * precision;
    curve.points.push_back({recall, precision, s.threshold});
    prev_recall = recall;
  }
  return curve;
}

MetricsReport evaluate_scores(std::span<const Label> actual, std::span<const double> scores,
                              double threshold) {
  check_scored(actual, scores);
  std::vector<Label> predicted(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    predicted[i] = scores[i] >= threshold ? kSpam : kHam;
  }
  MetricsReport r = scalar_metrics(confusion(actual, predicted));
  const std::size_t pos = static_cast<std::size_t>(std::count(actual.begin(), actual.end(), kSpam));
  if (pos > 0 && pos < actual.size()) r.roc_auc = roc_curve(actual, scores).auc;
  if (pos > 0) r.pr_auc = pr_curve(actual, scores).auc;
  return r;
}

std::string format_percent(std::optional<double> fraction) {
  if (!fraction) return "undefined";
  const double hundredths = std::floor(*fraction * 10000.0 + 0.5);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", hundredths / 100.0);
  return buf;
}

}  // namespace spamboost
