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

#include <fstream>
#include <sstream>
#include <string>

#include "spamboost/error.hpp"
#include "spamboost/model.hpp"

namespace spamboost {
namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

constexpr const char* kFormatName = "spamboost-model";

ojson node_to_json(const Tree& tree, std::int32_t id) {
  const TreeNode& n = tree.nodes[id];
  ojson doc;
  if (!n.is_leaf()) {
    doc["feature"] = n.feature;
    doc["threshold"] = n.threshold;
    doc["gain"] = n.gain;
  }
  doc["weight"] = n.weight;
  doc["sum_grad"] = n.stats.sum_grad;
  doc["sum_hess"] = n.stats.sum_hess;
  if (!n.is_leaf()) {
    doc["left"] = node_to_json(tree, n.left);
    doc["right"] = node_to_json(tree, n.right);
  }
  return doc;
}

std::int32_t node_from_json(const json& doc, Tree& tree, int depth) {
  if (depth > 4096) throw Error("model: tree nesting too deep");
  if (!doc.is_object()) throw Error("model: tree node must be an object");
  const auto id = static_cast<std::int32_t>(tree.nodes.size());
  TreeNode node;
  node.weight = doc.at("weight").get<double>();
  node.stats.sum_grad = doc.at("sum_grad").get<double>();
  node.stats.sum_hess = doc.at("sum_hess").get<double>();
  const bool has_left = doc.contains("left");
  const bool has_right = doc.contains("right");
  if (has_left != has_right) throw Error("model: split node needs both children");
  if (has_left) {
    node.feature = doc.at("feature").get<std::int32_t>();
    node.threshold = doc.at("threshold").get<double>();
    node.gain = doc.at("gain").get<double>();
  }
  tree.nodes.push_back(node);
  if (has_left) {
    const std::int32_t left = node_from_json(doc.at("left"), tree, depth + 1);
    const std::int32_t right = node_from_json(doc.at("right"), tree, depth + 1);
    tree.nodes[id].left = left;
    tree.nodes[id].right = right;
  }
  return id;
}

}  // namespace

ojson model_to_json(const Model& model) {
  ojson doc;
  doc["format"] = kFormatName;
  doc["format_version"] = kModelFormatVersion;
  doc["hyperparams"] = hyperparams_to_json(model.params);
  doc["base_raw"] = model.base_raw;
  doc["feature_count"] = model.feature_count;
  doc["best_round"] = model.best_round;
  ojson log = ojson::array();
  for (const RoundLog& r : model.training_log) {
    ojson entry;
    entry["round"] = r.round;
    entry["train_error"] = r.train_error;
    entry["train_loss"] = r.train_loss;
    entry["valid_error"] = r.valid_error ? ojson(*r.valid_error) : ojson(nullptr);
    log.push_back(std::move(entry));
  }
  doc["training_log"] = std::move(log);
  ojson trees = ojson::array();
  for (const Tree& t : model.trees) trees.push_back(node_to_json(t, 0));
  doc["trees"] = std::move(trees);
  return doc;
}

Model model_from_json(const json& doc) {
  try {
    if (!doc.is_object() || doc.value("format", "") != kFormatName) {
      throw Error("model: not a spamboost model document");
    }
    const int version = doc.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw Error("model: unsupported format_version " + std::to_string(version) +
                  " (expected " + std::to_string(kModelFormatVersion) + ")");
    }
    Model model;
    model.params = hyperparams_from_json(doc.at("hyperparams"));
    model.base_raw = doc.at("base_raw").get<double>();
    model.feature_count = doc.at("feature_count").get<std::size_t>();
    model.best_round = doc.at("best_round").get<int>();
    for (const json& entry : doc.at("training_log")) {
      RoundLog r;
      r.round = entry.at("round").get<int>();
      r.train_error = entry.at("train_error").get<double>();
      r.train_loss = entry.at("train_loss").get<double>();
      if (!entry.at("valid_error").is_null()) r.valid_error = entry.at("valid_error").get<double>();
      model.training_log.push_back(r);
    }
    for (const json& t : doc.at("trees")) {
      Tree tree;
      tree.nodes.clear();
      node_from_json(t, tree, 0);
      tree.validate(model.feature_count);
      model.trees.push_back(std::move(tree));
    }
    if (model.best_round != static_cast<int>(model.trees.size())) {
      throw Error("model: best_round does not match the number of trees");
    }
    return model;
  } catch (const json::exception& e) {
    throw Error(std::string("model: schema violation: ") + e.what());
  }
}

std::string serialize_model(const Model& model) { return model_to_json(model).dump(1) + "\n"; }

Model deserialize_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("model: parse error: ") + e.what());
  }
  return model_from_json(doc);
}

void save_model(const Model& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write model file '" + path.string() + "'");
  out << serialize_model(model);
  if (!out) throw Error("failed writing model file '" + path.string() + "'");
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return deserialize_model(text.str());
}

}  // namespace spamboost
