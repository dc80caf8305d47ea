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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spamboost/dataset.hpp"
#include "spamboost/error.hpp"
#include "spamboost/hyperparams.hpp"
#include "spamboost/metrics.hpp"
#include "spamboost/model.hpp"
#include "spamboost/objective.hpp"
#include "spamboost/pipeline.hpp"
#include "spamboost/resampling.hpp"
#include "spamboost/split.hpp"

namespace fs = std::filesystem;
using namespace spamboost;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, a);
  return buf;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

double pct(const std::optional<double>& v) { return v ? *v * 100.0 : std::nan(""); }

// --- criteria 1, 2, 10: the multi-seed run -------------------------------

struct Band {
  const char* name;
  double target;
  double tolerance;  // percentage points; negative means "at least target"
  std::optional<double> MetricsReport::*field;
};

Outcome check_table_means(const ReproduceResult& r) {
  const Band bands[] = {
      {"accuracy", 96.88, 1.0, &MetricsReport::accuracy},
      {"sensitivity", 95.59, 1.5, &MetricsReport::sensitivity},
      {"specificity", 97.73, 1.5, &MetricsReport::specificity},
      {"f1", 96.03, 1.5, &MetricsReport::f1},
      {"roc_auc", 98.0, -1.0, &MetricsReport::roc_auc},
  };
  Outcome o{true, ""};
  for (const Band& b : bands) {
    std::vector<double> values;
    for (const SeedResult& s : r.seeds) values.push_back(pct(s.test.report.*b.field));
    const MeanSd ms = mean_sd(values);
    const bool ok = b.tolerance < 0 ? ms.mean >= b.target
                                    : std::abs(ms.mean - b.target) <= b.tolerance;
    o.pass = o.pass && ok;
    std::ostringstream d;
    d << b.name << " " << fmt("%.2f", ms.mean) << "+-" << fmt("%.2f", ms.sd);
    if (b.tolerance < 0) {
      d << " (need >= " << fmt("%.2f", b.target) << ")";
    } else {
      d << " (need " << fmt("%.2f", b.target) << "+-" << fmt("%.1f", b.tolerance) << ")";
    }
    d << (ok ? "" : " MISS");
    o.detail += (o.detail.empty() ? "" : "; ") + d.str();
  }
  o.detail += "; seeds=" + std::to_string(r.seeds.size());
  return o;
}

Outcome check_train_accuracy(const ReproduceResult& r) {
  std::vector<double> values;
  for (const SeedResult& s : r.seeds) values.push_back(pct(s.train.report.accuracy));
  const MeanSd ms = mean_sd(values);
  const double lo = *std::min_element(values.begin(), values.end());
  return {ms.mean >= 99.5, "mean train accuracy " + fmt("%.2f", ms.mean) + " (min " +
                               fmt("%.2f", lo) + ", need >= 99.50)"};
}

Outcome check_resampling_study(const ReproduceResult& r) {
  std::string detail;
  for (const ResamplingStudyRow& row : r.resampling) {
    if (row.method == ResampleMethod::kNone) continue;
    detail += std::string(resample_method_name(row.method)) + " " + fmt("%+.2f", row.delta_pp) +
              "pp; ";
  }
  const bool holds = r.max_resampling_delta_pp <= 0.5;
  detail += "max " + fmt("%+.2f", r.max_resampling_delta_pp) + "pp; no gain above +0.5pp: " +
            (holds ? "holds" : "does not hold") + " (report-only)";
  return {r.resampling.size() == 6, detail};
}

// --- criterion 3 -----------------------------------------------------------

Outcome check_metric_oracle() {
  ConfusionMatrix test;
  test.tp = 520;
  test.tn = 817;
  test.fp = 19;
  test.fn = 24;
  const MetricsReport m = scalar_metrics(test);
  const std::pair<std::optional<double>, const char*> expected[] = {
      {m.accuracy, "96.88"},  {m.sensitivity, "95.59"}, {m.specificity, "97.73"},
      {m.precision, "96.47"}, {m.f1, "96.03"},          {m.balanced_accuracy, "96.66"},
  };
  Outcome o{true, ""};
  for (const auto& [value, want] : expected) {
    const std::string got = format_percent(value);
    o.pass = o.pass && got == want;
    o.detail += got + (got == want ? " " : "(want " + std::string(want) + ") ");
  }
  ConfusionMatrix train;
  train.tp = 1266;
  train.tn = 1946;
  train.fp = 8;
  train.fn = 1;
  const std::string acc = format_percent(scalar_metrics(train).accuracy);
  o.pass = o.pass && acc == "99.72";
  o.detail += "train " + acc;
  return o;
}

// --- criterion 4 -----------------------------------------------------------

Outcome check_split_counts(const Dataset& ds) {
  Outcome o{true, ""};
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const TrainTestSplit s = stratified_split(ds, {0.3, seed});
    const std::size_t spam = s.test.count(kSpam);
    const std::size_t ham = s.test.count(kHam);
    if (spam != 544 || ham != 836) {
      o.pass = false;
      o.detail += "seed " + std::to_string(seed) + ": " + std::to_string(spam) + "/" +
                  std::to_string(ham) + "; ";
    }
    ++checked;
  }
  o.detail += "544 spam + 836 ham checked on seeds 1.." + std::to_string(checked);
  return o;
}

// --- criterion 5 -----------------------------------------------------------

struct BruteSplit {
  std::size_t feature = 0;
  double threshold = 0.0;
  double gain = 0.0;
};

// Enumerates every (feature, midpoint) candidate and sums each side directly.
std::optional<BruteSplit> brute_force_split(const Dataset& ds, std::span<const GradPair> grads,
                                            const SplitParams& p) {
  std::optional<BruteSplit> best;
  for (std::size_t f = 0; f < ds.feature_count; ++f) {
    std::vector<double> values;
    for (std::size_t i = 0; i < ds.rows(); ++i) values.push_back(ds.at(i, f));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
      const double t = (values[k] + values[k + 1]) / 2.0;
      double gl = 0, hl = 0, gr = 0, hr = 0;
      for (std::size_t i = 0; i < ds.rows(); ++i) {
        if (ds.at(i, f) < t) {
          gl += grads[i].g;
          hl += grads[i].h;
        } else {
          gr += grads[i].g;
          hr += grads[i].h;
        }
      }
      if (hl < p.min_child_weight || hr < p.min_child_weight) continue;
      const double g = gl + gr, h = hl + hr;
      const double gain =
          0.5 * (gl * gl / (hl + p.lambda) + gr * gr / (hr + p.lambda) - g * g / (h + p.lambda)) -
          p.gamma;
      if (gain <= 0.0) continue;
      if (!best || gain > best->gain) best = BruteSplit{f, t, gain};
    }
  }
  return best;
}

Outcome check_exact_greedy() {
  std::mt19937_64 gen(20260501);
  std::uniform_int_distribution<std::size_t> rows_dist(2, 200);
  std::uniform_int_distribution<std::size_t> cols_dist(1, 5);
  std::uniform_int_distribution<int> level_dist(0, 1);
  std::uniform_int_distribution<int> eighth(1, 7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int cases = 500;
  int mismatches = 0, with_split = 0;
  for (int c = 0; c < cases; ++c) {
    const std::size_t n = rows_dist(gen), d = cols_dist(gen);
    const bool discrete = level_dist(gen) == 1;
    Dataset ds;
    ds.feature_count = d;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t f = 0; f < d; ++f) {
        ds.features.push_back(discrete ? std::floor(unit(gen) * 6.0) : unit(gen) * 10.0);
      }
      ds.labels.push_back(unit(gen) < 0.4 ? kSpam : kHam);
      ds.row_ids.push_back(i);
    }
    // Logistic gradients at probabilities k/8 are dyadic, so every partial
    // sum is exact and ties are decided by the tie-break rule alone.
    std::vector<GradPair> grads(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double prob = eighth(gen) / 8.0;
      grads[i] = {prob - ds.labels[i], prob * (1.0 - prob)};
    }
    SplitParams p;
    p.lambda = std::floor(unit(gen) * 4.0);
    p.gamma = unit(gen) < 0.5 ? 0.0 : unit(gen) * 0.5;
    p.min_child_weight = unit(gen) < 0.5 ? 0.0 : std::floor(unit(gen) * 8.0) / 8.0;

    const ColumnMatrix x(ds.matrix());
    std::vector<RowIndex> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<RowIndex>(i);
    std::vector<std::size_t> features(d);
    for (std::size_t f = 0; f < d; ++f) features[f] = f;

    const auto got = find_best_split(x, rows, features, grads, p);
    const auto want = brute_force_split(ds, grads, p);
    bool same = got.has_value() == want.has_value();
    if (same && got) {
      same = got->feature == want->feature && got->threshold == want->threshold &&
             std::abs(got->gain - want->gain) <= 1e-9;
      ++with_split;
    }
    if (!same) ++mismatches;
  }
  return {mismatches == 0 && with_split >= 100,
          std::to_string(cases) + " datasets, " + std::to_string(with_split) +
              " with a split, " + std::to_string(mismatches) + " mismatches"};
}

// --- criterion 6 -----------------------------------------------------------

Outcome check_gain_identity() {
  std::mt19937_64 gen(61);
  std::uniform_real_distribution<double> gdist(-50.0, 50.0);
  std::uniform_real_distribution<double> hdist(1e-3, 50.0);
  std::uniform_real_distribution<double> ldist(0.0, 5.0);
  std::uniform_real_distribution<double> gamma_dist(0.0, 2.0);
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const GradStats l{gdist(gen), hdist(gen)};
    const GradStats r{gdist(gen), hdist(gen)};
    const double lambda = ldist(gen), gamma = gamma_dist(gen);
    const std::vector<GradStats> parent{{l.sum_grad + r.sum_grad, l.sum_hess + r.sum_hess}};
    const std::vector<GradStats> children{l, r};
    const double expected =
        structure_score(parent, lambda, gamma) - structure_score(children, lambda, gamma);
    const double got = split_gain(l, r, lambda, gamma);
    const double err = std::abs(expected - got);
    const double rel = err / std::max({std::abs(expected), std::abs(got), 1e-300});
    if (rel > 1e-9 && err > 1e-12) ++failures;
    worst = std::max(worst, rel);
  }
  return {failures == 0, "10000 tuples, " + std::to_string(failures) +
                             " failures, worst relative error " + fmt("%.2e", worst)};
}

// --- criterion 7 -----------------------------------------------------------

Outcome check_leaf_optimality() {
  std::mt19937_64 gen(71);
  std::uniform_real_distribution<double> gdist(-100.0, 100.0);
  std::uniform_real_distribution<double> hdist(0.0, 100.0);
  std::uniform_real_distribution<double> ldist(0.01, 10.0);
  const auto objective = [](double g, double h, double lambda, double w) {
    return g * w + 0.5 * (h + lambda) * w * w;
  };
  int failures = 0, trials = 0;
  for (int i = 0; i < 10000; ++i) {
    const double g = gdist(gen), h = hdist(gen), lambda = ldist(gen);
    const double w = leaf_weight(g, h, lambda);
    const double best = objective(g, h, lambda, w);
    for (const double delta : {1e-3, 1e-2, 1e-1}) {
      for (const double sign : {-1.0, 1.0}) {
        ++trials;
        if (objective(g, h, lambda, w + sign * delta) < best) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(trials) + " perturbations, " +
                             std::to_string(failures) + " improved on the closed form"};
}

// --- criterion 8 -----------------------------------------------------------

Outcome check_auc_dual() {
  std::mt19937_64 gen(81);
  std::uniform_int_distribution<std::size_t> n_dist(2, 400);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int cases = 0, failures = 0;
  double worst = 0.0;
  for (int c = 0; c < 2000; ++c) {
    const std::size_t n = n_dist(gen);
    const int levels = c % 3 == 0 ? 0 : 1 + static_cast<int>(unit(gen) * 20);
    std::vector<Label> y(n);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = unit(gen) < 0.4 ? kSpam : kHam;
      s[i] = levels == 0 ? unit(gen) : std::floor(unit(gen) * levels) / levels;
    }
    if (std::count(y.begin(), y.end(), kSpam) == 0 ||
        std::count(y.begin(), y.end(), kHam) == 0) {
      continue;
    }
    ++cases;
    const double diff = std::abs(roc_curve(y, s).auc - roc_auc_mann_whitney(y, s));
    worst = std::max(worst, diff);
    if (diff > 1e-12) ++failures;
  }
  return {failures == 0 && cases > 1000,
          std::to_string(cases) + " score vectors (two thirds tied), max difference " +
              fmt("%.1e", worst)};
}

// --- criterion 9 -----------------------------------------------------------

Outcome check_determinism(const fs::path& data, const fs::path& work) {
  std::string detail;
  std::vector<std::string> bytes[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = work / ("determinism-" + std::to_string(run));
    TrainOptions t;
    t.data = data;
    t.out = dir / "train";
    t.split = {0.3, 1};
    run_train(t);
    EvaluateOptions e;
    e.model = t.out / "model.json";
    e.manifest = t.out / "manifest.json";
    e.out = dir / "eval";
    run_evaluate(e);
    for (const fs::path& f : {t.out / "model.json", t.out / "manifest.json",
                              e.out / "metrics.json", e.out / "metrics.txt", e.out / "roc.csv",
                              e.out / "pr.csv"}) {
      bytes[run].push_back(read_file(f));
    }
  }
  const bool same = bytes[0] == bytes[1];
  std::size_t total = 0;
  for (const auto& b : bytes[0]) total += b.size();
  return {same && total > 0, std::to_string(bytes[0].size()) + " files, " +
                                 std::to_string(total) + " bytes, " +
                                 (same ? "byte-identical" : "DIFFER")};
}

// --- criterion 11 ----------------------------------------------------------

Outcome check_round_trip(const fs::path& seed_dir) {
  const Manifest m = load_manifest(seed_dir / "manifest.json");
  const TrainTestSplit split = split_from_manifest(m);
  const Model loaded = load_model(seed_dir / "model.json");
  const Model reloaded = deserialize_model(serialize_model(loaded));
  const TrainOutcome fresh = run_replay(seed_dir / "manifest.json", seed_dir.parent_path() / "replay");
  const auto x = split.test.matrix();
  const std::vector<double> a = predict_raw(fresh.model, x);
  const std::vector<double> b = predict_raw(loaded, x);
  const std::vector<double> c = predict_raw(reloaded, x);
  std::size_t diffs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::memcmp(&a[i], &b[i], sizeof(double)) != 0) ++diffs;
    if (std::memcmp(&b[i], &c[i], sizeof(double)) != 0) ++diffs;
  }
  return {diffs == 0 && !a.empty(), std::to_string(a.size()) + " test rows, " +
                                        std::to_string(diffs) + " bitwise differences"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::string data = SPAMBOOST_DATA_FILE;
  std::string out;
  app.add_option("--data", data, "Spambase CSV");
  app.add_option("--out", out, "Working directory (default: a fresh temporary directory)");
  CLI11_PARSE(app, argc, argv);

  fs::path work = out.empty() ? fs::temp_directory_path() / ("spamboost_acceptance_" + std::to_string(std::random_device{}())) : fs::path(out);
  fs::remove_all(work);
  fs::create_directories(work);

  std::optional<Dataset> spambase;
  std::optional<ReproduceResult> repro;
  std::string setup_error;
  try {
    spambase = load_dataset(data, 57);
    ReproduceOptions r;
    r.data = data;
    r.out = work / "reproduce";
    repro = run_reproduce(r);
  } catch (const std::exception& e) {
    setup_error = e.what();
  }

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const auto needs_repro = [&](auto f) {
    return [&, f]() -> Outcome {
      if (!repro) return {false, "reproduce run failed: " + setup_error};
      return f(*repro);
    };
  };
  const std::vector<Criterion> criteria = {
      {1, "test metrics, 5-seed mean", needs_repro(check_table_means)},
      {2, "training accuracy", needs_repro(check_train_accuracy)},
      {3, "metric oracle", check_metric_oracle},
      {4, "stratified split counts",
       [&]() -> Outcome {
         if (!spambase) return {false, "dataset unavailable: " + setup_error};
         return check_split_counts(*spambase);
       }},
      {5, "exact greedy vs brute force", check_exact_greedy},
      {6, "gain equals structure score difference", check_gain_identity},
      {7, "leaf weight optimality", check_leaf_optimality},
      {8, "ROC-AUC trapezoid vs Mann-Whitney", check_auc_dual},
      {9, "determinism", [&] { return check_determinism(data, work); }},
      {10, "resampling study", needs_repro(check_resampling_study)},
      {11, "serialization round-trip",
       needs_repro([&](const ReproduceResult& r) {
         return check_round_trip(work / "reproduce" / ("seed-" + std::to_string(r.seeds[0].seed)));
       })},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d passed, %d failed\n", criteria.size(),
              static_cast<int>(criteria.size()) - failed, failed);
  if (out.empty()) fs::remove_all(work);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
