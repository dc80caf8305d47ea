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

#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "spamboost/error.hpp"
#include "spamboost/model.hpp"
#include "spamboost/random.hpp"

namespace spamboost {
namespace {

void add_tree_output(const Tree& tree, const FeatureMatrix& x, std::vector<double>& raw) {
  const auto n = static_cast<std::int64_t>(x.rows);
#pragma omp parallel for schedule(static) if (n >= 4096)
  for (std::int64_t i = 0; i < n; ++i) raw[i] += tree.predict(x.row(i));
}

Model fit(const Dataset& train_ds, const Dataset* valid_ds, const Hyperparams& params,
          std::uint64_t seed) {
  params.validate();
  if (train_ds.empty()) throw Error("train: empty training set");
  train_ds.validate();
  if (train_ds.feature_count == 0) throw Error("train: dataset has no features");
  if (train_ds.rows() > std::numeric_limits<RowIndex>::max()) {
    throw Error("train: too many rows");
  }
  if (valid_ds) {
    if (valid_ds->empty()) throw Error("train: empty validation set");
    if (valid_ds->feature_count != train_ds.feature_count) {
      throw Error("train: validation set has a different feature count");
    }
  }

  Model model;
  model.params = params;
  model.base_raw = logit(params.base_score);
  model.feature_count = train_ds.feature_count;

  const std::size_t n = train_ds.rows();
  const std::size_t p = train_ds.feature_count;
  const ColumnMatrix columns(train_ds.matrix());
  const SortedColumns presorted = SortedColumns::build(columns);
  const FeatureMatrix train_x = train_ds.matrix();

  std::vector<double> raw(n, model.base_raw);
  std::vector<double> valid_raw(valid_ds ? valid_ds->rows() : 0, model.base_raw);
  std::vector<RowIndex> all_rows(n);
  std::iota(all_rows.begin(), all_rows.end(), RowIndex{0});

  double best_error = std::numeric_limits<double>::infinity();
  int best_round = 0;
  for (int round = 1; round <= params.num_rounds; ++round) {
    Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(round));
    const std::vector<std::size_t> features = rng.sample_sorted(p, fraction_count(params.colsample, p));
    std::vector<RowIndex> rows;
    if (params.subsample < 1.0) {
      for (const std::size_t r : rng.sample_sorted(n, fraction_count(params.subsample, n))) {
        rows.push_back(static_cast<RowIndex>(r));
      }
    } else {
      rows = all_rows;
    }

    const std::vector<GradPair> grads = compute_gradients(train_ds.labels, raw);
    Tree tree = build_tree(columns, presorted, rows, grads, params, features);

    add_tree_output(tree, train_x, raw);
    RoundLog log;
    log.round = round;
    log.train_error = classification_error(train_ds.labels, raw);
    log.train_loss = logistic_loss(train_ds.labels, raw);
    if (valid_ds) {
      add_tree_output(tree, valid_ds->matrix(), valid_raw);
      log.valid_error = classification_error(valid_ds->labels, valid_raw);
    }
    model.training_log.push_back(log);
    model.trees.push_back(std::move(tree));

    const double monitored = valid_ds ? *log.valid_error : log.train_error;
    if (monitored < best_error) {
      best_error = monitored;
      best_round = round;
    } else if (params.early_stopping_rounds &&
               round - best_round >= *params.early_stopping_rounds) {
      break;
    }
  }
  if (params.early_stopping_rounds) {
    model.trees.resize(static_cast<std::size_t>(best_round));
  }
  model.best_round = static_cast<int>(model.trees.size());
  return model;
}

}  // namespace

Model train(const Dataset& train_ds, const Hyperparams& params, std::uint64_t seed) {
  return fit(train_ds, nullptr, params, seed);
}

Model train_with_validation(const Dataset& train_ds, const Dataset& valid_ds,
                            const Hyperparams& params, std::uint64_t seed) {
  return fit(train_ds, &valid_ds, params, seed);
}

double classification_error(std::span<const Label> labels, std::span<const double> raw_scores) {
  if (labels.size() != raw_scores.size() || labels.empty()) {
    throw Error("classification_error: labels and scores must be non-empty and equally long");
  }
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Label predicted = sigmoid(raw_scores[i]) >= 0.5 ? kSpam : kHam;
    wrong += predicted != labels[i];
  }
  return static_cast<double>(wrong) / static_cast<double>(labels.size());
}

}  // namespace spamboost
