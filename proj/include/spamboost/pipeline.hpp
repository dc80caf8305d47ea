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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spamboost/dataset.hpp"
#include "spamboost/hyperparams.hpp"
#include "spamboost/metrics.hpp"
#include "spamboost/model.hpp"
#include "spamboost/resampling.hpp"
#include "spamboost/tuning.hpp"

namespace spamboost {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kManifestFormatVersion = 1;

struct ClassCounts {
  std::size_t spam = 0;
  std::size_t ham = 0;

  std::size_t total() const { return spam + ham; }
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

ClassCounts class_counts(const Dataset& ds);

// Everything needed to rerun a training job exactly.
struct Manifest {
  std::string dataset_path;
  std::string dataset_sha256;
  std::size_t dataset_rows = 0;
  std::size_t feature_count = 0;
  SplitSpec split;
  ClassCounts train_counts;
  ClassCounts test_counts;
  std::uint64_t train_seed = 1;
  Hyperparams params;
  ResampleSpec resample;
  std::size_t train_rows_used = 0;  // after resampling
  std::string tool_version = kToolVersion;
};

nlohmann::ordered_json manifest_to_json(const Manifest& m);
Manifest manifest_from_json(const nlohmann::json& doc);
// SHA-256 over the manifest document without its own hash field.
std::string manifest_hash(const Manifest& m);
void save_manifest(const Manifest& m, const std::filesystem::path& path);
// Verifies the stored hash against the content.
Manifest load_manifest(const std::filesystem::path& path);

std::string sha256_hex(std::string_view bytes);
std::string file_sha256(const std::filesystem::path& path);

// --- train -----------------------------------------------------------------

struct TrainOptions {
  std::filesystem::path data;
  std::filesystem::path out;
  SplitSpec split;
  Hyperparams params;
  ResampleSpec resample;
};

struct TrainOutcome {
  Manifest manifest;
  Model model;
  TrainTestSplit split;  // before resampling
};

// Writes model.json, manifest.json, training_log.csv and split.csv to out.
TrainOutcome run_train(const TrainOptions& options);
// Reruns the job a manifest describes; the dataset must hash the same.
TrainOutcome run_replay(const std::filesystem::path& manifest_path,
                        const std::filesystem::path& out);

// Regenerates the partitions a manifest describes.
TrainTestSplit split_from_manifest(const Manifest& m);

// --- evaluate --------------------------------------------------------------

enum class Partition { kTest, kTrain };

struct EvaluateOptions {
  std::filesystem::path model;
  std::optional<std::filesystem::path> manifest;
  std::optional<std::filesystem::path> data;  // used when no manifest
  Partition partition = Partition::kTest;
  std::filesystem::path out;
  double threshold = 0.5;
};

struct Evaluation {
  std::string source;  // "test", "train" or "data"
  MetricsReport report;
  Curve roc;
  Curve pr;
};

Evaluation evaluate_model(const Model& model, const Dataset& ds, const std::string& source,
                          double threshold = 0.5);
nlohmann::ordered_json evaluation_to_json(const Evaluation& e);
std::string metrics_table(const Evaluation& e);
// Rows are predicted labels, columns actual labels, 0 before 1.
std::string confusion_table(const ConfusionMatrix& cm);
void write_curve_csv(const Curve& curve, const std::string& x_name, const std::string& y_name,
                     const std::filesystem::path& path);

// Writes metrics.json, metrics.txt, roc.csv and pr.csv to out.
Evaluation run_evaluate(const EvaluateOptions& options);

// --- grid search -----------------------------------------------------------

struct GridSearchOptions {
  std::filesystem::path data;
  std::filesystem::path grid;
  std::filesystem::path out;
  SplitSpec split;
  Hyperparams base;
  ValidationConfig validation;
};

// Searches on the training partition only; writes best_params.json and
// trace.csv.
SearchResult run_grid_search(const GridSearchOptions& options);

// --- reproduce -------------------------------------------------------------

struct BaselineRow {
  const char* classifier;
  std::optional<double> accuracy;
  std::optional<double> sensitivity;
  std::optional<double> specificity;
  std::optional<double> precision;
  std::optional<double> f1;
  std::optional<double> roc_auc;
};

// Published figures for earlier classifiers on the same data, in percent.
std::span<const BaselineRow> reported_baselines();

struct SeedResult {
  std::uint64_t seed = 0;
  Evaluation test;
  Evaluation train;
  std::size_t trees = 0;
};

struct ResamplingStudyRow {
  ResampleMethod method = ResampleMethod::kNone;
  std::vector<double> accuracies;  // per seed
  double mean_accuracy = 0.0;
  double delta_pp = 0.0;  // versus no resampling, percentage points
};

struct ReproduceOptions {
  std::filesystem::path data;
  std::filesystem::path out;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  double test_fraction = 0.3;
  Hyperparams params;
  bool resampling_study = true;
  std::size_t k_neighbors = 5;
};

struct ReproduceResult {
  std::vector<SeedResult> seeds;
  std::vector<ResamplingStudyRow> resampling;  // empty when the study is skipped
  double max_resampling_delta_pp = 0.0;
};

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 for a single value
};

MeanSd mean_sd(std::span<const double> values);

// Per seed: seed-N/ with model, manifest, metrics and curves. Top level:
// report.json and report.txt.
ReproduceResult run_reproduce(const ReproduceOptions& options);

// --- resample --------------------------------------------------------------

struct ResampleOptions {
  std::filesystem::path data;
  std::filesystem::path out;  // CSV file
  ResampleSpec spec;
};

Dataset run_resample(const ResampleOptions& options);

}  // namespace spamboost
