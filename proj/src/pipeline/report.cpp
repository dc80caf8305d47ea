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
#include <cmath>
#include <iomanip>
#include <sstream>

#include "spamboost/error.hpp"
#include "spamboost/pipeline.hpp"
#include "text_io.hpp"

namespace spamboost {
namespace {

using nlohmann::ordered_json;
using pipeline_detail::ensure_directory;
using pipeline_detail::format_double;
using pipeline_detail::write_text;

constexpr double kResamplingTolerancePp = 0.5;

// Published comparison figures in percent; missing cells are blank.
constexpr std::optional<double> kNa = std::nullopt;
const BaselineRow kBaselines[] = {
    {"SVM", 94.06, 93.87, 94.06, kNa, kNa, kNa},
    {"CNSA-FFO", 93.88, 87.28, 97.31, kNa, kNa, kNa},
    {"NSA-PSO", 91.22, 65.99, 93.43, kNa, kNa, kNa},
    {"PSO", 81.32, 60.48, 94.86, kNa, kNa, kNa},
    {"NSA", 68.86, 22.24, 99.16, kNa, kNa, kNa},
    {"LR two-step clustering", 93.03, kNa, kNa, kNa, kNa, kNa},
    {"LR", 90.85, kNa, kNa, kNa, kNa, kNa},
    {"Rotation Forest", 93.50, 93.50, kNa, 93.50, 93.50, 97.60},
    {"J48", 91.20, 91.20, kNa, 91.20, 91.10, 93.70},
    {"Bayesian LR", 93.00, 93.00, kNa, 93.00, 93.00, 92.70},
    {"MLP", 92.30, 92.30, kNa, 92.30, 92.30, 97.30},
};

ordered_json optional_number(std::optional<double> v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

struct Column {
  const char* title;
  const char* key;
  std::optional<double> MetricsReport::*field;
};

const Column kColumns[] = {
    {"Sensitivity/Recall", "sensitivity", &MetricsReport::sensitivity},
    {"Specificity", "specificity", &MetricsReport::specificity},
    {"Precision", "precision", &MetricsReport::precision},
    {"F1-Score", "f1", &MetricsReport::f1},
    {"Balanced Accuracy", "balanced_accuracy", &MetricsReport::balanced_accuracy},
    {"Accuracy", "accuracy", &MetricsReport::accuracy},
    {"ROC-AUC", "roc_auc", &MetricsReport::roc_auc},
    {"PR-AUC", "pr_auc", &MetricsReport::pr_auc},
};

// Left-aligned first column, right-aligned others, two spaces between.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c > 0) line += "  ";
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string percent_or_dash(std::optional<double> percent) {
  if (!percent) return "-";
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << *percent;
  return s.str();
}

std::string fixed2(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

std::string signed2(double v) {
  std::ostringstream s;
  s << std::showpos << std::fixed << std::setprecision(2) << v;
  return s.str();
}

ordered_json confusion_json(const ConfusionMatrix& cm) {
  return ordered_json{{"tp", cm.tp}, {"tn", cm.tn}, {"fp", cm.fp}, {"fn", cm.fn}};
}

ordered_json summary_json(const std::vector<SeedResult>& seeds) {
  ordered_json doc = ordered_json::object();
  for (const Column& col : kColumns) {
    std::vector<double> values;
    bool defined = true;
    for (const SeedResult& s : seeds) {
      const auto v = s.test.report.*col.field;
      if (!v) defined = false;
      else values.push_back(*v);
    }
    if (!defined) {
      doc[col.key] = nullptr;
      continue;
    }
    const MeanSd ms = mean_sd(values);
    doc[col.key] = {{"mean", ms.mean}, {"sd", ms.sd}};
  }
  std::vector<double> train_acc;
  for (const SeedResult& s : seeds) train_acc.push_back(*s.train.report.accuracy);
  const MeanSd ms = mean_sd(train_acc);
  doc["train_accuracy"] = {{"mean", ms.mean}, {"sd", ms.sd}};
  return doc;
}

ordered_json report_json(const ReproduceOptions& options, const ReproduceResult& result) {
  ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["dataset"] = options.data.lexically_normal().string();
  doc["dataset_sha256"] = file_sha256(options.data);
  doc["test_fraction"] = options.test_fraction;
  doc["hyperparams"] = hyperparams_to_json(options.params);
  doc["seeds"] = options.seeds;

  ordered_json per_seed = ordered_json::array();
  for (const SeedResult& s : result.seeds) {
    per_seed.push_back({{"seed", s.seed},
                        {"trees", s.trees},
                        {"test", evaluation_to_json(s.test)},
                        {"train", evaluation_to_json(s.train)}});
  }
  doc["per_seed"] = std::move(per_seed);
  doc["summary"] = summary_json(result.seeds);

  ordered_json baselines = ordered_json::array();
  for (const BaselineRow& b : reported_baselines()) {
    baselines.push_back({{"classifier", b.classifier},
                         {"accuracy", optional_number(b.accuracy)},
                         {"sensitivity", optional_number(b.sensitivity)},
                         {"specificity", optional_number(b.specificity)},
                         {"precision", optional_number(b.precision)},
                         {"f1", optional_number(b.f1)},
                         {"roc_auc", optional_number(b.roc_auc)}});
  }
  doc["baselines"] = {{"note", "reported, not recomputed; percent"}, {"rows", baselines}};

  if (!result.resampling.empty()) {
    ordered_json rows = ordered_json::array();
    for (const ResamplingStudyRow& r : result.resampling) {
      rows.push_back({{"method", std::string(resample_method_name(r.method))},
                      {"accuracies", r.accuracies},
                      {"mean_accuracy", r.mean_accuracy},
                      {"delta_pp", r.delta_pp}});
    }
    doc["resampling_study"] = {
        {"expectation", "no resampling method raises mean test accuracy by more than 0.5 "
                        "percentage points over training on the imbalanced data"},
        {"tolerance_pp", kResamplingTolerancePp},
        {"max_delta_pp", result.max_resampling_delta_pp},
        {"holds", result.max_resampling_delta_pp <= kResamplingTolerancePp},
        {"methods", rows}};
  }
  return doc;
}

std::string report_text(const ReproduceOptions& options, const ReproduceResult& result) {
  std::ostringstream out;
  out << "spamboost " << kToolVersion << " reproduction report\n";
  out << "dataset: " << options.data.lexically_normal().string() << "\n";
  out << "test fraction: " << format_double(options.test_fraction) << ", seeds:";
  for (const auto s : options.seeds) out << ' ' << s;
  out << "\n\n";

  out << "Test results in percent\n";
  std::vector<std::vector<std::string>> rows;
  rows.emplace_back(std::vector<std::string>{"Seed"});
  for (const Column& col : kColumns) rows.back().push_back(col.title);
  rows.back().push_back("Trees");
  for (const SeedResult& s : result.seeds) {
    rows.emplace_back(std::vector<std::string>{std::to_string(s.seed)});
    for (const Column& col : kColumns) rows.back().push_back(format_percent(s.test.report.*col.field));
    rows.back().push_back(std::to_string(s.trees));
  }
  const ordered_json summary = summary_json(result.seeds);
  rows.emplace_back(std::vector<std::string>{"mean"});
  rows.emplace_back(std::vector<std::string>{"sd"});
  for (const Column& col : kColumns) {
    const auto& cell = summary[col.key];
    rows[rows.size() - 2].push_back(cell.is_null() ? "undefined" : fixed2(100 * cell["mean"].get<double>()));
    rows.back().push_back(cell.is_null() ? "undefined" : fixed2(100 * cell["sd"].get<double>()));
  }
  out << render_table(rows) << '\n';

  out << "Training accuracy in percent\n";
  rows.clear();
  rows.push_back({"Seed", "Accuracy"});
  for (const SeedResult& s : result.seeds) {
    rows.push_back({std::to_string(s.seed), format_percent(s.train.report.accuracy)});
  }
  const auto& train_summary = summary["train_accuracy"];
  rows.push_back({"mean", fixed2(100 * train_summary["mean"].get<double>())});
  out << render_table(rows) << '\n';

  out << "Confusion matrices (rows: predicted, columns: actual; 1 = spam)\n";
  for (const SeedResult& s : result.seeds) {
    out << "seed " << s.seed << ", training set\n" << confusion_table(s.train.report.confusion);
    out << "seed " << s.seed << ", test set\n" << confusion_table(s.test.report.confusion) << '\n';
  }

  out << "Earlier classifiers on the same data (reported, not recomputed; percent)\n";
  rows.clear();
  rows.push_back({"Classifier", "Accuracy", "Sensitivity/Recall", "Specificity", "Precision",
                  "F1-Score", "ROC-AUC"});
  for (const BaselineRow& b : reported_baselines()) {
    rows.push_back({b.classifier, percent_or_dash(b.accuracy), percent_or_dash(b.sensitivity),
                    percent_or_dash(b.specificity), percent_or_dash(b.precision),
                    percent_or_dash(b.f1), percent_or_dash(b.roc_auc)});
  }
  out << render_table(rows);

  if (!result.resampling.empty()) {
    out << "\nResampling study (training partition resampled, test partition untouched)\n";
    rows.clear();
    rows.push_back({"Method", "Mean accuracy", "Delta (pp)"});
    for (const ResamplingStudyRow& r : result.resampling) {
      rows.push_back({std::string(resample_method_name(r.method)), fixed2(100 * r.mean_accuracy),
                      r.method == ResampleMethod::kNone ? "" : signed2(r.delta_pp)});
    }
    out << render_table(rows);
    const bool holds = result.max_resampling_delta_pp <= kResamplingTolerancePp;
    out << "expected: no method gains more than " << fixed2(kResamplingTolerancePp)
        << " pp; largest gain " << signed2(result.max_resampling_delta_pp) << " pp ("
        << (holds ? "holds" : "does not hold") << ")\n";
  }
  return out.str();
}

}  // namespace

std::span<const BaselineRow> reported_baselines() { return kBaselines; }

MeanSd mean_sd(std::span<const double> values) {
  if (values.empty()) throw Error("mean_sd: no values");
  MeanSd r;
  for (const double v : values) r.mean += v;
  r.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (const double v : values) ss += (v - r.mean) * (v - r.mean);
    r.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return r;
}

Evaluation evaluate_model(const Model& model, const Dataset& ds, const std::string& source,
                          double threshold) {
  if (ds.empty()) throw Error("evaluate: the " + source + " set is empty");
  if (ds.feature_count != model.feature_count) {
    throw Error("evaluate: dataset has " + std::to_string(ds.feature_count) +
                " features, model expects " + std::to_string(model.feature_count));
  }
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error("evaluate: threshold must lie in [0, 1]");
  }
  Evaluation e;
  e.source = source;
  const std::vector<double> proba = predict_proba(model, ds.matrix());
  e.report = evaluate_scores(ds.labels, proba, threshold);
  const std::size_t pos = ds.count(kSpam);
  if (pos > 0 && pos < ds.rows()) e.roc = roc_curve(ds.labels, proba);
  if (pos > 0) e.pr = pr_curve(ds.labels, proba);
  return e;
}

nlohmann::ordered_json evaluation_to_json(const Evaluation& e) {
  const MetricsReport& r = e.report;
  ordered_json doc;
  doc["source"] = e.source;
  doc["rows"] = r.confusion.total();
  doc["confusion"] = confusion_json(r.confusion);
  doc["metrics"] = {{"accuracy", optional_number(r.accuracy)},
                    {"sensitivity", optional_number(r.sensitivity)},
                    {"specificity", optional_number(r.specificity)},
                    {"precision", optional_number(r.precision)},
                    {"f1", optional_number(r.f1)},
                    {"balanced_accuracy", optional_number(r.balanced_accuracy)},
                    {"roc_auc", optional_number(r.roc_auc)},
                    {"pr_auc", optional_number(r.pr_auc)}};
  return doc;
}

std::string metrics_table(const Evaluation& e) {
  std::vector<std::vector<std::string>> rows(2);
  rows[0].push_back("Data");
  rows[1].push_back(e.source);
  for (const Column& col : kColumns) {
    rows[0].push_back(col.title);
    rows[1].push_back(format_percent(e.report.*col.field));
  }
  return render_table(rows) + "\n" + confusion_table(e.report.confusion);
}

std::string confusion_table(const ConfusionMatrix& cm) {
  return render_table({{"predicted \\ actual", "0", "1"},
                       {"0", std::to_string(cm.tn), std::to_string(cm.fn)},
                       {"1", std::to_string(cm.fp), std::to_string(cm.tp)}});
}

void write_curve_csv(const Curve& curve, const std::string& x_name, const std::string& y_name,
                     const std::filesystem::path& path) {
  std::ostringstream out;
  out << "threshold," << x_name << ',' << y_name << '\n';
  for (const CurvePoint& p : curve.points) {
    out << format_double(p.threshold) << ',' << format_double(p.x) << ',' << format_double(p.y)
        << '\n';
  }
  write_text(path, out.str());
}

ReproduceResult run_reproduce(const ReproduceOptions& options) {
  options.params.validate();
  if (options.seeds.empty()) throw Error("reproduce: at least one seed is required");
  if (options.out.empty()) throw Error("reproduce: an output directory is required");
  ensure_directory(options.out);

  ReproduceResult result;
  for (const std::uint64_t seed : options.seeds) {
    TrainOptions t;
    t.data = options.data;
    t.out = options.out / ("seed-" + std::to_string(seed));
    t.split = {options.test_fraction, seed};
    t.params = options.params;
    const TrainOutcome run = run_train(t);

    SeedResult s;
    s.seed = seed;
    s.trees = run.model.trees.size();
    s.test = evaluate_model(run.model, run.split.test, "test");
    s.train = evaluate_model(run.model, run.split.train, "train");
    pipeline_detail::write_evaluation_files(s.test, t.out);
    pipeline_detail::write_text(t.out / "train_metrics.json",
                                evaluation_to_json(s.train).dump(2) + "\n");
    result.seeds.push_back(std::move(s));
  }

  if (options.resampling_study) {
    const Dataset ds = load_dataset(options.data);
    ResamplingStudyRow none;
    for (const SeedResult& s : result.seeds) none.accuracies.push_back(*s.test.report.accuracy);
    none.mean_accuracy = mean_sd(none.accuracies).mean;
    result.resampling.push_back(none);
    result.max_resampling_delta_pp = -100.0;
    for (const ResampleMethod method :
         {ResampleMethod::kRandomOver, ResampleMethod::kRandomUnder, ResampleMethod::kSmote,
          ResampleMethod::kTomek, ResampleMethod::kSmoteTomek}) {
      ResamplingStudyRow row;
      row.method = method;
      for (const std::uint64_t seed : options.seeds) {
        const TrainTestSplit split = stratified_split(ds, {options.test_fraction, seed});
        const Dataset fit_set = resample(split.train, {method, options.k_neighbors, seed});
        const Model model = train(fit_set, options.params, seed);
        const auto labels = predict_label(model, split.test.matrix());
        row.accuracies.push_back(*scalar_metrics(confusion(split.test.labels, labels)).accuracy);
      }
      row.mean_accuracy = mean_sd(row.accuracies).mean;
      row.delta_pp = 100.0 * (row.mean_accuracy - none.mean_accuracy);
      result.max_resampling_delta_pp = std::max(result.max_resampling_delta_pp, row.delta_pp);
      result.resampling.push_back(std::move(row));
    }
  }

  write_text(options.out / "report.json", report_json(options, result).dump(2) + "\n");
  write_text(options.out / "report.txt", report_text(options, result));
  return result;
}

}  // namespace spamboost
