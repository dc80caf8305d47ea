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

#include "spamboost/error.hpp"
#include "spamboost/model.hpp"

namespace spamboost::reference {

std::vector<double> predict_raw(const Model& model, const FeatureMatrix& x) {
  if (x.cols != model.feature_count) throw Error("predict: feature count mismatch");
  std::vector<double> raw;
  raw.reserve(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) {
    double acc = model.base_raw;
    for (const Tree& tree : model.trees) {
      std::int32_t id = 0;
      while (!tree.nodes[id].is_leaf()) {
        const TreeNode& node = tree.nodes[id];
        id = x.at(i, node.feature) < node.threshold ? node.left : node.right;
      }
      acc += tree.nodes[id].weight;
    }
    raw.push_back(acc);
  }
  return raw;
}

}  // namespace spamboost::reference
