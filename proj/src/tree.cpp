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

#include "spamboost/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spamboost/error.hpp"

namespace spamboost {
namespace {

class Grower {
 public:
  Grower(const ColumnMatrix& x, std::span<const GradPair> grads, const Hyperparams& params,
         std::span<const std::size_t> features, std::vector<std::vector<RowIndex>> sorted,
         std::vector<RowIndex> rows)
      : x_(x),
        grads_(grads),
        params_(params),
        features_(features),
        sorted_(std::move(sorted)),
        rows_(std::move(rows)),
        goes_left_(x.rows(), 0) {}

  Tree run() {
    tree_.nodes.clear();
    grow(0, rows_.size(), 0);
    return tree_;
  }

 private:
  std::int32_t grow(std::size_t begin, std::size_t end, int depth) {
    GradStats stats;
    for (std::size_t i = begin; i < end; ++i) stats.add(grads_[rows_[i]]);

    const auto id = static_cast<std::int32_t>(tree_.nodes.size());
    TreeNode node;
    node.stats = stats;
    node.weight = params_.eta * leaf_weight(stats.sum_grad, stats.sum_hess, params_.lambda);
    tree_.nodes.push_back(node);
    if (depth >= params_.max_depth || end - begin < 2) return id;

    std::vector<std::span<const RowIndex>> ranges;
    ranges.reserve(sorted_.size());
    for (const auto& order : sorted_) {
      ranges.push_back(std::span<const RowIndex>(order).subspan(begin, end - begin));
    }
    const SplitParams split_params{params_.lambda, 0.0, params_.min_child_weight};
    const auto best =
        find_best_presorted_split(x_, features_, ranges, grads_, stats, split_params);
    if (!best) return id;

    const auto column = x_.column(best->feature);
    for (std::size_t i = begin; i < end; ++i) {
      goes_left_[rows_[i]] = column[rows_[i]] < best->threshold ? 1 : 0;
    }
    const auto left_of = [this](RowIndex r) { return goes_left_[r] != 0; };
    const auto mid = static_cast<std::size_t>(
        std::stable_partition(rows_.begin() + begin, rows_.begin() + end, left_of) -
        rows_.begin());
    const auto n_sorted = static_cast<std::int64_t>(sorted_.size());
#pragma omp parallel for schedule(static) if ((end - begin) * sorted_.size() >= (1 << 15))
    for (std::int64_t k = 0; k < n_sorted; ++k) {
      auto& order = sorted_[k];
      std::stable_partition(order.begin() + begin, order.begin() + end, left_of);
    }

    tree_.nodes[id].feature = static_cast<std::int32_t>(best->feature);
    tree_.nodes[id].threshold = best->threshold;
    tree_.nodes[id].gain = best->gain;
    const std::int32_t left = grow(begin, mid, depth + 1);
    const std::int32_t right = grow(mid, end, depth + 1);
    tree_.nodes[id].left = left;
    tree_.nodes[id].right = right;
    return id;
  }

  const ColumnMatrix& x_;
  std::span<const GradPair> grads_;
  const Hyperparams& params_;
  std::span<const std::size_t> features_;
  std::vector<std::vector<RowIndex>> sorted_;
  std::vector<RowIndex> rows_;
  std::vector<std::uint8_t> goes_left_;
  Tree tree_;
};

int depth_from(const Tree& tree, std::int32_t id) {
  const TreeNode& n = tree.nodes[id];
  if (n.is_leaf()) return 0;
  return 1 + std::max(depth_from(tree, n.left), depth_from(tree, n.right));
}

void check_build_inputs(const ColumnMatrix& x, std::span<const RowIndex> rows,
                        std::span<const GradPair> grads, const Hyperparams& params,
                        std::span<const std::size_t> features) {
  params.validate();
  if (rows.empty()) throw Error("build_tree: no rows");
  if (grads.size() != x.rows()) throw Error("build_tree: gradient count differs from row count");
  if (features.empty()) throw Error("build_tree: no features");
  for (const std::size_t f : features) {
    if (f >= x.cols()) throw Error("build_tree: feature index out of range");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= x.rows() || (i > 0 && rows[i] <= rows[i - 1])) {
      throw Error("build_tree: rows must be ascending positions within the matrix");
    }
  }
}

}  // namespace

std::size_t Tree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

int Tree::depth() const { return depth_from(*this, 0); }

double Tree::predict(std::span<const double> row) const {
  std::int32_t id = 0;
  while (!nodes[id].is_leaf()) {
    const TreeNode& n = nodes[id];
    id = row[n.feature] < n.threshold ? n.left : n.right;
  }
  return nodes[id].weight;
}

void Tree::validate(std::size_t feature_count) const {
  if (nodes.empty()) throw Error("tree: no nodes");
  const auto n = static_cast<std::int32_t>(nodes.size());
  std::vector<int> parents(nodes.size(), 0);
  for (std::int32_t i = 0; i < n; ++i) {
    const TreeNode& node = nodes[i];
    if (node.is_leaf()) {
      if (node.right >= 0 || node.feature >= 0) throw Error("tree: malformed leaf");
      continue;
    }
    // Pre-order storage puts children strictly after their parent.
    if (node.left <= i || node.right <= i || node.left >= n || node.right >= n ||
        node.left == node.right) {
      throw Error("tree: split node " + std::to_string(i) + " has invalid children");
    }
    if (node.feature < 0 || static_cast<std::size_t>(node.feature) >= feature_count) {
      throw Error("tree: split feature out of range");
    }
    ++parents[node.left];
    ++parents[node.right];
  }
  if (parents[0] != 0) throw Error("tree: root has a parent");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (parents[i] != 1) throw Error("tree: node " + std::to_string(i) + " is not reachable once");
  }
}

SortedColumns SortedColumns::build(const ColumnMatrix& x) {
  SortedColumns s;
  s.order.resize(x.cols());
  std::vector<RowIndex> all(x.rows());
  std::iota(all.begin(), all.end(), RowIndex{0});
  const auto n_cols = static_cast<std::int64_t>(x.cols());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t f = 0; f < n_cols; ++f) {
    s.order[f] = sort_rows_by_feature(x.column(f), all);
  }
  return s;
}

Tree build_tree(const ColumnMatrix& x, std::span<const RowIndex> rows,
                std::span<const GradPair> grads, const Hyperparams& params,
                std::span<const std::size_t> features) {
  check_build_inputs(x, rows, grads, params, features);
  std::vector<std::vector<RowIndex>> sorted;
  sorted.reserve(features.size());
  for (const std::size_t f : features) sorted.push_back(sort_rows_by_feature(x.column(f), rows));
  Grower grower(x, grads, params, features, std::move(sorted),
                std::vector<RowIndex>(rows.begin(), rows.end()));
  return prune(grower.run(), params.gamma, params.lambda);
}

Tree build_tree(const ColumnMatrix& x, const SortedColumns& presorted,
                std::span<const RowIndex> rows, std::span<const GradPair> grads,
                const Hyperparams& params, std::span<const std::size_t> features) {
  check_build_inputs(x, rows, grads, params, features);
  if (presorted.order.size() != x.cols()) throw Error("build_tree: presort does not match matrix");
  std::vector<std::vector<RowIndex>> sorted;
  sorted.reserve(features.size());
  if (rows.size() == x.rows()) {
    for (const std::size_t f : features) sorted.push_back(presorted.order[f]);
  } else {
    std::vector<std::uint8_t> member(x.rows(), 0);
    for (const RowIndex r : rows) member[r] = 1;
    for (const std::size_t f : features) {
      auto& out = sorted.emplace_back();
      out.reserve(rows.size());
      for (const RowIndex r : presorted.order[f]) {
        if (member[r]) out.push_back(r);
      }
    }
  }
  Grower grower(x, grads, params, features, std::move(sorted),
                std::vector<RowIndex>(rows.begin(), rows.end()));
  return prune(grower.run(), params.gamma, params.lambda);
}

Tree prune(const Tree& tree, double gamma, double lambda) {
  std::vector<TreeNode> nodes = tree.nodes;
  const auto collapse = [&](auto&& self, std::int32_t id) -> void {
    TreeNode& node = nodes[id];
    if (node.is_leaf()) return;
    self(self, node.left);
    self(self, node.right);
    const TreeNode& l = nodes[node.left];
    const TreeNode& r = nodes[node.right];
    const double gain = split_gain(l.stats, r.stats, lambda, gamma);
    if (l.is_leaf() && r.is_leaf() && gain <= 0.0) {
      node.feature = -1;
      node.threshold = 0.0;
      node.left = node.right = -1;
      node.gain = 0.0;
    } else {
      node.gain = gain;
    }
  };
  collapse(collapse, 0);

  Tree out;
  out.nodes.clear();
  const auto emit = [&](auto&& self, std::int32_t id) -> std::int32_t {
    const auto at = static_cast<std::int32_t>(out.nodes.size());
    out.nodes.push_back(nodes[id]);
    if (!nodes[id].is_leaf()) {
      const std::int32_t left = self(self, nodes[id].left);
      const std::int32_t right = self(self, nodes[id].right);
      out.nodes[at].left = left;
      out.nodes[at].right = right;
    }
    return at;
  };
  emit(emit, 0);
  return out;
}

}  // namespace spamboost
