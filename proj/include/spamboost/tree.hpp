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
#include <span>
#include <vector>

#include "spamboost/hyperparams.hpp"
#include "spamboost/objective.hpp"
#include "spamboost/split.hpp"

namespace spamboost {

// A node of a regression tree. Splits route x[feature] < threshold to left.
// Every node keeps its gradient statistics and its shrunk optimal weight so
// that pruning can turn any split back into a leaf.
struct TreeNode {
  std::int32_t feature = -1;  // -1 on leaves
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  double gain = 0.0;    // split gain at the pruning gamma; 0 on leaves
  double weight = 0.0;  // eta * -G / (H + lambda); the output on leaves
  GradStats stats;

  bool is_leaf() const { return left < 0; }
};

// Nodes stored in pre-order; nodes[0] is the root.
struct Tree {
  std::vector<TreeNode> nodes{TreeNode{}};

  std::size_t leaf_count() const;
  int depth() const;  // edges on the longest root-to-leaf path
  double predict(std::span<const double> row) const;
  // Throws Error on dangling children, cycles or out-of-range features.
  void validate(std::size_t feature_count) const;
};

// Per-feature row orders sorted by (value, row), computed once per training run.
struct SortedColumns {
  std::vector<std::vector<RowIndex>> order;

  static SortedColumns build(const ColumnMatrix& x);
};

// Grows a tree depth-first on rows (ascending positions in x) using only the
// listed features. Splits are accepted at any positive gain (gamma = 0) up to
// max_depth, subject to min_child_weight; then prune() applies params.gamma.
Tree build_tree(const ColumnMatrix& x, std::span<const RowIndex> rows,
                std::span<const GradPair> grads, const Hyperparams& params,
                std::span<const std::size_t> features);
Tree build_tree(const ColumnMatrix& x, const SortedColumns& presorted,
                std::span<const RowIndex> rows, std::span<const GradPair> grads,
                const Hyperparams& params, std::span<const std::size_t> features);

// Bottom-up: a split whose children are both leaves and whose gain at gamma is
// <= 0 collapses into a leaf carrying its own weight. Collapses cascade upward
// within the same post-order pass. The result is compacted to pre-order.
Tree prune(const Tree& tree, double gamma, double lambda);

}  // namespace spamboost
