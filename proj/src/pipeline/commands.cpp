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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spamboost/error.hpp"
#include "spamboost/pipeline.hpp"
#include "text_io.hpp"

namespace spamboost {
namespace {

using pipeline_detail::ensure_directory;
using pipeline_detail::format_double;
using pipeline_detail::write_text;

std::string training_log_csv(const Model& model) {
  std::ostringstream out;
  out << "round,train_error,train_loss,valid_error,kept\n";
  for (const RoundLog& log : model.training_log) {
    out << log.round << ',' << format_double(log.train_error) << ','
        << format_double(log.train_loss) << ','
        << (log.valid_error ? format_double(*log.valid_error) : "") << ','
        << (log.round <= model.best_round ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string split_csv(const TrainTestSplit& split) {
  std::vector<std::pair<std::size_t, const char*>> rows;
  for (const std::size_t id : split.train.row_ids) rows.emplace_back(id, "train");
  for (const std::size_t id : split.test.row_ids) rows.emplace_back(id, "test");
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  out << "row_id,partition\n";
  for (const auto& [id, part] : rows) out << id << ',' << part << '\n';
  return out.str();
}

void check_dataset_hash(const Manifest& m) {
  const std::string actual = file_sha256(m.dataset_path);
  if (actual != m.dataset_sha256) {
    throw Error("dataset '" + m.dataset_path + "' has sha256 " + actual +
                " but the manifest records " + m.dataset_sha256);
  }
}

void write_evaluation(const Evaluation& e, const std::filesystem::path& out) {
  ensure_directory(out);
  write_text(out / "metrics.json", evaluation_to_json(e).dump(2) + "\n");
  write_text(out / "metrics.txt", metrics_table(e));
  write_curve_csv(e.roc, "fpr", "tpr", out / "roc.csv");
  write_curve_csv(e.pr, "recall", "precision", out / "pr.csv");
}

}  // namespace

TrainOutcome run_train(const TrainOptions& options) {
  options.params.validate();
  options.split.validate();
  if (options.data.empty()) throw Error("train: a dataset path is required");
  if (options.out.empty()) throw Error("train: an output directory is required");

  const Dataset ds = load_dataset(options.data);
  TrainOutcome outcome;
  outcome.split = stratified_split(ds, options.split);
  const Dataset fit_set = resample(outcome.split.train, options.resample);
  outcome.model = train(fit_set, options.params, options.split.seed);

  Manifest& m = outcome.manifest;
  m.dataset_path = options.data.lexically_normal().string();
  m.dataset_sha256 = file_sha256(options.data);
  m.dataset_rows = ds.rows();
  m.feature_count = ds.feature_count;
  m.split = options.split;
  m.train_counts = class_counts(outcome.split.train);
  m.test_counts = class_counts(outcome.split.test);
  m.train_seed = options.split.seed;
  m.params = options.params;
  m.resample = options.resample;
  m.train_rows_used = fit_set.rows();

  ensure_directory(options.out);
  save_model(outcome.model, options.out / "model.json");
  save_manifest(m, options.out / "manifest.json");
  write_text(options.out / "training_log.csv", training_log_csv(outcome.model));
  write_text(options.out / "split.csv", split_csv(outcome.split));
  return outcome;
}

TrainOutcome run_replay(const std::filesystem::path& manifest_path,
                        const std::filesystem::path& out) {
  const Manifest m = load_manifest(manifest_path);
  check_dataset_hash(m);
  TrainOptions options;
  options.data = m.dataset_path;
  options.out = out;
  options.split = m.split;
  options.params = m.params;
  options.resample = m.resample;
  if (m.train_seed != m.split.seed) throw Error("replay: training seed differs from split seed");
  TrainOutcome outcome = run_train(options);
  if (manifest_hash(outcome.manifest) != manifest_hash(m)) {
    throw Error("replay: rerun does not reproduce manifest '" + manifest_path.string() + "'");
  }
  return outcome;
}

TrainTestSplit split_from_manifest(const Manifest& m) {
  check_dataset_hash(m);
  const Dataset ds = load_dataset(m.dataset_path);
  TrainTestSplit split = stratified_split(ds, m.split);
  if (class_counts(split.train) != m.train_counts || class_counts(split.test) != m.test_counts) {
    throw Error("manifest: regenerated split does not match the recorded class counts");
  }
  return split;
}

Evaluation run_evaluate(const EvaluateOptions& options) {
  if (options.out.empty()) throw Error("evaluate: an output directory is required");
  const Model model = load_model(options.model);
  Evaluation e;
  if (options.manifest) {
    const TrainTestSplit split = split_from_manifest(load_manifest(*options.manifest));
    const bool test = options.partition == Partition::kTest;
    e = evaluate_model(model, test ? split.test : split.train, test ? "test" : "train",
                       options.threshold);
  } else if (options.data) {
    e = evaluate_model(model, load_dataset(*options.data), "data", options.threshold);
  } else {
    throw Error("evaluate: either a manifest or a dataset is required");
  }
  write_evaluation(e, options.out);
  return e;
}

SearchResult run_grid_search(const GridSearchOptions& options) {
  options.base.validate();
  if (options.out.empty()) throw Error("grid-search: an output directory is required");
  const ParamGrid grid = ParamGrid::load(options.grid);
  const Dataset ds = load_dataset(options.data);
  const TrainTestSplit split = stratified_split(ds, options.split);
  const SearchResult result =
      grid_search(split.train, grid, options.validation, options.split.seed, options.base);

  ensure_directory(options.out);
  write_text(options.out / "best_params.json", hyperparams_to_json(result.best).dump(2) + "\n");
  std::ostringstream trace;
  write_trace_csv(result, trace);
  write_text(options.out / "trace.csv", trace.str());
  return result;
}

Dataset run_resample(const ResampleOptions& options) {
  if (options.out.empty()) throw Error("resample: an output file is required");
  const Dataset out = resample(load_dataset(options.data), options.spec);
  if (options.out.has_parent_path()) ensure_directory(options.out.parent_path());
  std::ofstream file(options.out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write '" + options.out.string() + "'");
  write_dataset_csv(out, file);
  if (!file) throw Error("failed writing '" + options.out.string() + "'");
  return out;
}

namespace pipeline_detail {

void write_evaluation_files(const Evaluation& e, const std::filesystem::path& out) {
  write_evaluation(e, out);
}

}  // namespace pipeline_detail

}  // namespace spamboost
