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

// Command-line front end: train, evaluate, grid-search, reproduce, resample.

#include <omp.h>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spamboost/error.hpp"
#include "spamboost/pipeline.hpp"

namespace {

using namespace spamboost;

struct HyperparamFlags {
  std::string params_file;
  std::optional<double> eta, gamma, lambda, colsample, subsample, min_child_weight;
  std::optional<int> max_depth, rounds, early_stopping;

  void attach(CLI::App& cmd) {
    cmd.add_option("--params", params_file, "JSON file with hyperparameters");
    cmd.add_option("--eta", eta, "Shrinkage");
    cmd.add_option("--gamma", gamma, "Minimum split gain");
    cmd.add_option("--lambda", lambda, "L2 penalty on leaf weights");
    cmd.add_option("--max-depth", max_depth, "Maximum tree depth");
    cmd.add_option("--colsample", colsample, "Fraction of features drawn per tree");
    cmd.add_option("--subsample", subsample, "Fraction of rows drawn per tree");
    cmd.add_option("--min-child-weight", min_child_weight, "Minimum hessian sum per child");
    cmd.add_option("--rounds", rounds, "Boosting rounds");
    cmd.add_option("--early-stopping", early_stopping, "Patience in rounds; 0 disables");
  }

  Hyperparams resolve() const {
    Hyperparams p;
    if (!params_file.empty()) {
      std::ifstream in(params_file);
      if (!in) throw Error("cannot open params file '" + params_file + "'");
      nlohmann::json doc;
      try {
        in >> doc;
      } catch (const nlohmann::json::exception& e) {
        throw Error("params file '" + params_file + "': " + e.what());
      }
      p = hyperparams_from_json(doc);
    }
    if (eta) p.eta = *eta;
    if (gamma) p.gamma = *gamma;
    if (lambda) p.lambda = *lambda;
    if (colsample) p.colsample = *colsample;
    if (subsample) p.subsample = *subsample;
    if (min_child_weight) p.min_child_weight = *min_child_weight;
    if (max_depth) p.max_depth = *max_depth;
    if (rounds) p.num_rounds = *rounds;
    if (early_stopping) {
      if (*early_stopping < 0) throw Error("--early-stopping must be >= 0");
      p.early_stopping_rounds = *early_stopping == 0 ? std::nullopt : std::optional<int>(*early_stopping);
    }
    p.validate();
    return p;
  }
};

std::string require(const std::string& value, const char* flag, const char* command) {
  if (value.empty()) throw Error(std::string(command) + ": " + flag + " is required");
  return value;
}

void print_summary(const Evaluation& e) {
  std::printf("%s: accuracy %s%%, sensitivity %s%%, specificity %s%%, roc-auc %s%%\n",
              e.source.c_str(), format_percent(e.report.accuracy).c_str(),
              format_percent(e.report.sensitivity).c_str(),
              format_percent(e.report.specificity).c_str(),
              format_percent(e.report.roc_auc).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient boosted trees for spam classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", spamboost::kToolVersion);

  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  // train
  auto* train_cmd = app.add_subcommand("train", "Split, train and write model plus manifest");
  std::string train_data, train_out = "run", replay;
  std::uint64_t train_seed = 1;
  double train_fraction = 0.3;
  std::string train_resample = "none";
  std::size_t train_k = 5;
  HyperparamFlags train_hp;
  train_cmd->add_option("--data", train_data, "Spambase-format CSV");
  train_cmd->add_option("--out", train_out, "Output directory");
  train_cmd->add_option("--seed", train_seed, "Split, sampling and resampling seed");
  train_cmd->add_option("--test-fraction", train_fraction, "Held-out test fraction");
  train_cmd->add_option("--resample", train_resample,
                        "none, over, under, smote, tomek or smote-tomek");
  train_cmd->add_option("--k-neighbors", train_k, "SMOTE neighbours");
  train_cmd->add_option("--replay", replay, "Rerun the job recorded in a manifest");
  train_cmd->add_option("--threads", threads, "OpenMP threads");
  train_hp.attach(*train_cmd);

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "Score a model and write metrics and curves");
  std::string eval_model, eval_manifest, eval_data, eval_out = "eval", eval_partition = "test";
  double eval_threshold = 0.5;
  eval_cmd->add_option("--model", eval_model, "Model file")->required();
  eval_cmd->add_option("--manifest", eval_manifest, "Manifest from train; regenerates the split");
  eval_cmd->add_option("--partition", eval_partition, "test or train (with --manifest)")
      ->check(CLI::IsMember({"test", "train"}));
  eval_cmd->add_option("--data", eval_data, "Evaluate on a whole CSV instead");
  eval_cmd->add_option("--out", eval_out, "Output directory");
  eval_cmd->add_option("--threshold", eval_threshold, "Probability threshold for spam");
  eval_cmd->add_option("--threads", threads, "OpenMP threads");

  // grid-search
  auto* grid_cmd = app.add_subcommand("grid-search", "Search a hyperparameter grid");
  std::string grid_data, grid_file, grid_out = "grid";
  std::uint64_t grid_seed = 1;
  double grid_fraction = 0.3, grid_holdout = 0.2;
  std::size_t grid_folds = 0;
  HyperparamFlags grid_hp;
  grid_cmd->add_option("--data", grid_data, "Spambase-format CSV");
  grid_cmd->add_option("--grid", grid_file, "Grid config (JSON)");
  grid_cmd->add_option("--out", grid_out, "Output directory");
  grid_cmd->add_option("--seed", grid_seed, "Split and training seed");
  grid_cmd->add_option("--test-fraction", grid_fraction, "Held-out test fraction");
  grid_cmd->add_option("--holdout-fraction", grid_holdout, "Validation share of training data");
  grid_cmd->add_option("--folds", grid_folds, "Use k-fold validation instead of a holdout");
  grid_cmd->add_option("--threads", threads, "OpenMP threads");
  grid_hp.attach(*grid_cmd);

  // reproduce
  auto* repro_cmd = app.add_subcommand("reproduce", "Multi-seed run with the full report");
  std::string repro_data, repro_out = "reproduce";
  std::vector<std::uint64_t> repro_seeds{1, 2, 3, 4, 5};
  double repro_fraction = 0.3;
  bool skip_study = false;
  std::size_t repro_k = 5;
  HyperparamFlags repro_hp;
  repro_cmd->add_option("--data", repro_data, "Spambase-format CSV");
  repro_cmd->add_option("--out", repro_out, "Output directory");
  repro_cmd->add_option("--seeds", repro_seeds, "Comma-separated seeds")->delimiter(',');
  repro_cmd->add_option("--test-fraction", repro_fraction, "Held-out test fraction");
  repro_cmd->add_flag("--no-resampling-study", skip_study, "Skip the resampling study");
  repro_cmd->add_option("--k-neighbors", repro_k, "SMOTE neighbours in the study");
  repro_cmd->add_option("--threads", threads, "OpenMP threads");
  repro_hp.attach(*repro_cmd);

  // resample
  auto* rs_cmd = app.add_subcommand("resample", "Rebalance a CSV and write the result");
  std::string rs_data, rs_out, rs_method = "smote";
  std::uint64_t rs_seed = 1;
  std::size_t rs_k = 5;
  rs_cmd->add_option("--data", rs_data, "Spambase-format CSV");
  rs_cmd->add_option("--out", rs_out, "Output CSV");
  rs_cmd->add_option("--resample", rs_method, "over, under, smote, tomek or smote-tomek");
  rs_cmd->add_option("--seed", rs_seed, "Seed");
  rs_cmd->add_option("--k-neighbors", rs_k, "SMOTE neighbours");
  rs_cmd->add_option("--threads", threads, "OpenMP threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "spamboost: usage error: %s\n", e.what());
    return 2;
  }

  try {
    if (threads > 0) omp_set_num_threads(threads);

    if (*train_cmd) {
      TrainOutcome run;
      if (!replay.empty()) {
        run = run_replay(replay, train_out);
      } else {
        TrainOptions o;
        o.data = require(train_data, "--data", "train");
        o.out = train_out;
        o.split = {train_fraction, train_seed};
        o.params = train_hp.resolve();
        o.resample = {parse_resample_method(train_resample), train_k, train_seed};
        run = run_train(o);
      }
      std::printf("trained %zu trees on %zu rows (%zu held out); manifest %s\n",
                  run.model.trees.size(), run.manifest.train_rows_used,
                  run.manifest.test_counts.total(), manifest_hash(run.manifest).c_str());
    } else if (*eval_cmd) {
      EvaluateOptions o;
      o.model = eval_model;
      if (!eval_manifest.empty()) o.manifest = eval_manifest;
      if (!eval_data.empty()) o.data = eval_data;
      if (o.manifest && o.data) throw Error("evaluate: give --manifest or --data, not both");
      o.partition = eval_partition == "train" ? Partition::kTrain : Partition::kTest;
      o.out = eval_out;
      o.threshold = eval_threshold;
      print_summary(run_evaluate(o));
    } else if (*grid_cmd) {
      GridSearchOptions o;
      o.data = require(grid_data, "--data", "grid-search");
      o.grid = require(grid_file, "--grid", "grid-search");
      o.out = grid_out;
      o.split = {grid_fraction, grid_seed};
      o.base = grid_hp.resolve();
      if (grid_folds > 0) {
        o.validation.strategy = ValidationConfig::Strategy::kKFold;
        o.validation.folds = grid_folds;
      }
      o.validation.holdout_fraction = grid_holdout;
      o.validation.seed = grid_seed;
      const SearchResult r = run_grid_search(o);
      std::printf("best of %zu combinations: #%zu, validation error %.6f\n", r.trace.size(),
                  r.best_index, r.trace[r.best_index].validation_error);
    } else if (*repro_cmd) {
      ReproduceOptions o;
      o.data = require(repro_data, "--data", "reproduce");
      o.out = repro_out;
      o.seeds = repro_seeds;
      o.test_fraction = repro_fraction;
      o.params = repro_hp.resolve();
      o.resampling_study = !skip_study;
      o.k_neighbors = repro_k;
      run_reproduce(o);
      std::ifstream report(std::filesystem::path(repro_out) / "report.txt");
      std::cout << report.rdbuf();
    } else if (*rs_cmd) {
      ResampleOptions o;
      o.data = require(rs_data, "--data", "resample");
      o.out = require(rs_out, "--out", "resample");
      o.spec = {parse_resample_method(rs_method), rs_k, rs_seed};
      const Dataset out = run_resample(o);
      std::printf("wrote %zu rows (%zu spam, %zu ham)\n", out.rows(), out.count(kSpam),
                  out.count(kHam));
    }
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (char& c : msg) {
      if (c == '\n') c = ' ';
    }
    std::fprintf(stderr, "spamboost: error: %s\n", msg.c_str());
    return 1;
  }
  return 0;
}
