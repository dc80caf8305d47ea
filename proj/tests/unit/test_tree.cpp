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

#include <doctest.h>

#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "spamboost/error.hpp"
#include "spamboost/hyperparams.hpp"
#include "spamboost/objective.hpp"
#include "spamboost/split.hpp"
#include "spamboost/tree.hpp"
#include "support/synthetic.hpp"

using namespace spamboost;
using doctest::Approx;

namespace {

std::vector<RowIndex> all_rows(std::size_t n) {
  std::vector<RowIndex> rows(n);
  std::iota(rows.begin(), rows.end(), RowIndex{0});
  return rows;
}

std::vector<std::size_t> all_features(std::size_t n) {
  std::vector<std::size_t> f(n);
  std::iota(f.begin(), f.end(), std::size_t{0});
  return f;
}

TreeNode leaf(GradStats s, double eta = 1.0, double lambda = 1.0) {
  TreeNode n;
  n.stats = s;
  n.weight = eta * leaf_weight(s.sum_grad, s.sum_hess, lambda);
  return n;
}

TreeNode split(std::int32_t feature, double threshold, std::int32_t l, std::int32_t r,
               GradStats s) {
  TreeNode n = leaf(s);
  n.feature = feature;
  n.threshold = threshold;
  n.left = l;
  n.right = r;
  return n;
}

// Straightforward recursive grower on top of the serial split reference,
// followed by the same bottom-up pruning rule applied by hand.
struct OracleNode {
  bool is_leaf = true;
  std::size_t feature = 0;
  double threshold = 0.0;
  GradStats stats;
  double weight = 0.0;
  std::unique_ptr<OracleNode> left, right;
};

std::unique_ptr<OracleNode> oracle_grow(const ColumnMatrix& x, std::vector<RowIndex> rows,
                                        std::span<const GradPair> grads,
                                        std::span<const std::size_t> features,
                                        const Hyperparams& p, int depth) {
  auto node = std::make_unique<OracleNode>();
  for (const RowIndex r : rows) node->stats.add(grads[r]);
  node->weight = p.eta * -node->stats.sum_grad / (node->stats.sum_hess + p.lambda);
  if (depth >= p.max_depth || rows.size() < 2) return node;
  const auto best =
      reference::find_best_split(x, rows, features, grads, {p.lambda, 0.0, p.min_child_weight});
  if (!best) return node;
  std::vector<RowIndex> l, r;
  for (const RowIndex row : rows) (x.column(best->feature)[row] < best->threshold ? l : r).push_back(row);
  node->is_leaf = false;
  node->feature = best->feature;
  node->threshold = best->threshold;
  node->left = oracle_grow(x, l, grads, features, p, depth + 1);
  node->right = oracle_grow(x, r, grads, features, p, depth + 1);
  const GradStats& a = node->left->stats;
  const GradStats& b = node->right->stats;
  const double g = a.sum_grad + b.sum_grad, h = a.sum_hess + b.sum_hess;
  const double gain = 0.5 * (a.sum_grad * a.sum_grad / (a.sum_hess + p.lambda) +
                             b.sum_grad * b.sum_grad / (b.sum_hess + p.lambda) -
                             g * g / (h + p.lambda)) -
                      p.gamma;
  if (node->left->is_leaf && node->right->is_leaf && gain <= 0.0) {
    node->is_leaf = true;
    node->left.reset();
    node->right.reset();
  }
  return node;
}

double oracle_predict(const OracleNode& n, std::span<const double> row) {
  if (n.is_leaf) return n.weight;
  return oracle_predict(row[n.feature] < n.threshold ? *n.left : *n.right, row);
}

Hyperparams tree_params(double eta, double gamma, int depth, double mcw) {
  Hyperparams p;
  p.eta = eta;
  p.gamma = gamma;
  p.max_depth = depth;
  p.min_child_weight = mcw;
  return p;
}

}  // namespace

TEST_CASE("one row gives a single leaf") {
  const Dataset ds = testing::make_dataset({{3.0, 4.0}}, {1});
  const ColumnMatrix x(ds.matrix());
  const std::vector<GradPair> grads{{-0.5, 0.25}};
  const Tree t = build_tree(x, all_rows(1), grads, tree_params(0.4, 0.2, 24, 1.0), all_features(2));
  REQUIRE(t.nodes.size() == 1);
  CHECK(t.nodes[0].is_leaf());
  CHECK(t.nodes[0].weight == Approx(-0.4 * -0.5 / 1.25).epsilon(1e-15));
  CHECK(t.depth() == 0);
  CHECK(t.leaf_count() == 1);
}

TEST_CASE("four rows, depth one: leaves -2/3 and +2/3") {
  const Dataset ds = testing::make_dataset({{1}, {2}, {3}, {4}}, {0, 0, 1, 1});
  const ColumnMatrix x(ds.matrix());
  const std::vector<double> raw(4, 0.0);
  const auto grads = compute_gradients(ds.labels, raw);
  const Tree t = build_tree(x, all_rows(4), grads, tree_params(1.0, 0.0, 1, 0.0), all_features(1));
  REQUIRE(t.nodes.size() == 3);
  CHECK(t.nodes[0].feature == 0);
  CHECK(t.nodes[0].threshold == 2.5);
  CHECK(t.nodes[0].gain == Approx(2.0 / 3.0));
  CHECK(t.nodes[t.nodes[0].left].weight == Approx(-2.0 / 3.0).epsilon(1e-15));
  CHECK(t.nodes[t.nodes[0].right].weight == Approx(2.0 / 3.0).epsilon(1e-15));
  const std::vector<double> row{1.0};
  CHECK(t.predict(row) == Approx(-2.0 / 3.0));
  CHECK_NOTHROW(t.validate(1));
}

TEST_CASE("prune: a lone split below gamma collapses") {
  // Gain at gamma 0 is 0.1, so at gamma 0.2 it is -0.1.
  const double gl = std::sqrt(0.2 * 2.0), gr = -gl;  // 0.5 * (gl^2/2 + gr^2/2) = 0.2
  Tree t;
  t.nodes = {split(0, 1.0, 1, 2, {0.0, 2.0}), leaf({gl, 1.0}), leaf({gr, 1.0})};
  const double g0 = split_gain(t.nodes[1].stats, t.nodes[2].stats, 1.0, 0.0);
  const Tree kept = prune(t, g0 - 0.1, 1.0);
  CHECK(kept.nodes.size() == 3);
  CHECK(kept.nodes[0].gain == Approx(0.1));
  const Tree pruned = prune(t, g0 + 0.1, 1.0);
  REQUIRE(pruned.nodes.size() == 1);
  CHECK(pruned.nodes[0].is_leaf());
  CHECK(pruned.nodes[0].weight == t.nodes[0].weight);
}

TEST_CASE("prune: positive gains at gamma 0 leave the tree unchanged") {
  Tree t;
  t.nodes = {split(0, 2.0, 1, 4, {0.0, 4.0}), split(1, 0.5, 2, 3, {-2.0, 2.0}),
             leaf({-2.0, 1.0}), leaf({0.0, 1.0}), leaf({2.0, 2.0})};
  const Tree out = prune(t, 0.0, 1.0);
  REQUIRE(out.nodes.size() == t.nodes.size());
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    CHECK(out.nodes[i].left == t.nodes[i].left);
    CHECK(out.nodes[i].feature == t.nodes[i].feature);
  }
  CHECK(out.nodes[0].gain > 0.0);
  CHECK(out.nodes[1].gain > 0.0);
}

TEST_CASE("prune: collapsing a child exposes the parent") {
  // Inner split: children (0.3, 1) and (-0.1, 1) under lambda 1.
  const GradStats a{0.3, 1.0}, b{-0.1, 1.0}, c{0.2, 1.0};
  const GradStats inner{a.sum_grad + b.sum_grad, a.sum_hess + b.sum_hess};
  const GradStats root{inner.sum_grad + c.sum_grad, inner.sum_hess + c.sum_hess};
  const double gamma = 0.5;
  const double inner_gain = 0.5 * (0.09 / 2 + 0.01 / 2 - 0.04 / 3) - gamma;
  const double root_gain = 0.5 * (0.04 / 3 + 0.04 / 2 - 0.16 / 4) - gamma;
  REQUIRE(inner_gain <= 0.0);
  REQUIRE(root_gain <= 0.0);
  CHECK(split_gain(a, b, 1.0, gamma) == Approx(inner_gain));
  CHECK(split_gain(inner, c, 1.0, gamma) == Approx(root_gain));

  Tree t;
  t.nodes = {split(0, 5.0, 1, 4, root), split(1, 1.0, 2, 3, inner), leaf(a), leaf(b), leaf(c)};
  const Tree out = prune(t, gamma, 1.0);
  REQUIRE(out.nodes.size() == 1);
  CHECK(out.nodes[0].stats.sum_grad == Approx(root.sum_grad));

  // A surviving child split keeps its parent whatever the parent's gain.
  const Tree partial = prune(t, 0.005, 1.0);
  CHECK(partial.nodes.size() >= 3);
  CHECK_NOTHROW(partial.validate(2));
}

TEST_CASE("prune output is compact pre-order") {
  // Right child stored first to exercise the compaction.
  Tree t;
  t.nodes = {split(0, 2.0, 3, 1, {0.0, 4.0}), split(1, 0.5, 4, 2, {2.0, 2.0}), leaf({3.0, 1.0}),
             leaf({-2.0, 2.0}), leaf({-1.0, 1.0})};
  const Tree out = prune(t, 0.0, 1.0);
  CHECK_NOTHROW(out.validate(2));
  CHECK(out.nodes[0].left == 1);
  const std::vector<double> row{1.0, 0.0};
  CHECK(out.predict(row) == t.predict(row));
}

TEST_CASE("validate rejects malformed trees") {
  Tree t;
  t.nodes = {split(0, 1.0, 1, 1, {0, 2}), leaf({0, 1})};
  CHECK_THROWS_AS(t.validate(1), Error);
  t.nodes = {split(3, 1.0, 1, 2, {0, 2}), leaf({0, 1}), leaf({0, 1})};
  CHECK_THROWS_AS(t.validate(2), Error);
  t.nodes = {split(0, 1.0, 2, 5, {0, 2}), leaf({0, 1}), leaf({0, 1})};
  CHECK_THROWS_AS(t.validate(2), Error);
  t.nodes.clear();
  CHECK_THROWS_AS(t.validate(2), Error);
}

TEST_CASE("build_tree rejects bad inputs") {
  const Dataset ds = testing::make_dataset({{1}, {2}}, {0, 1});
  const ColumnMatrix x(ds.matrix());
  const std::vector<GradPair> grads{{0.5, 0.25}, {-0.5, 0.25}};
  const Hyperparams p;
  CHECK_THROWS_AS(build_tree(x, std::vector<RowIndex>{}, grads, p, all_features(1)), Error);
  CHECK_THROWS_AS(build_tree(x, std::vector<RowIndex>{1, 0}, grads, p, all_features(1)), Error);
  CHECK_THROWS_AS(build_tree(x, all_rows(2), grads, p, std::vector<std::size_t>{1}), Error);
  CHECK_THROWS_AS(build_tree(x, all_rows(2), std::vector<GradPair>{{0, 1}}, p, all_features(1)),
                  Error);
}

TEST_CASE("random trees: depth bound, weights, statistics and pruning invariants") {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + gen() % 150;
    const std::size_t nf = 1 + gen() % 4;
    const Dataset ds = testing::random_dataset(gen, n, nf, static_cast<int>(gen() % 6));
    const ColumnMatrix x(ds.matrix());
    std::vector<double> raw(n);
    std::uniform_real_distribution<double> rd(-1.0, 1.0);
    for (auto& r : raw) r = rd(gen);
    const auto grads = compute_gradients(ds.labels, raw);
    const Hyperparams p = tree_params(0.05 + 0.1 * static_cast<double>(gen() % 10),
                                      0.1 * static_cast<double>(gen() % 4),
                                      1 + static_cast<int>(gen() % 6), 0.05 * static_cast<double>(gen() % 4));
    std::vector<RowIndex> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (gen() % 4 != 0) rows.push_back(static_cast<RowIndex>(i));
    }
    if (rows.empty()) rows.push_back(0);
    const auto features = all_features(nf);
    const Tree t = build_tree(x, rows, grads, p, features);
    CHECK_NOTHROW(t.validate(nf));
    CHECK(t.depth() <= p.max_depth);
    for (const TreeNode& node : t.nodes) {
      CHECK(node.weight ==
            Approx(p.eta * leaf_weight(node.stats.sum_grad, node.stats.sum_hess, p.lambda)));
      if (node.is_leaf()) continue;
      const TreeNode& l = t.nodes[node.left];
      const TreeNode& r = t.nodes[node.right];
      CHECK(l.stats.sum_grad + r.stats.sum_grad == Approx(node.stats.sum_grad).scale(1.0));
      CHECK(l.stats.sum_hess >= p.min_child_weight - 1e-12);
      CHECK(r.stats.sum_hess >= p.min_child_weight - 1e-12);
      if (l.is_leaf() && r.is_leaf()) CHECK(node.gain > 0.0);
    }
    // Pruning is idempotent.
    const Tree again = prune(t, p.gamma, p.lambda);
    CHECK(again.nodes.size() == t.nodes.size());

    // The presorted path builds the same tree.
    const SortedColumns sorted = SortedColumns::build(x);
    const Tree t2 = build_tree(x, sorted, rows, grads, p, features);
    REQUIRE(t2.nodes.size() == t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      CHECK(t2.nodes[i].feature == t.nodes[i].feature);
      CHECK(t2.nodes[i].threshold == t.nodes[i].threshold);
      CHECK(t2.nodes[i].weight == t.nodes[i].weight);
    }

    // Predictions agree with a recursive oracle built on the serial splitter.
    const auto oracle = oracle_grow(x, rows, grads, features, p, 0);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(t.predict(ds.row(i)) == Approx(oracle_predict(*oracle, ds.row(i))).epsilon(1e-12));
    }
  }
}
