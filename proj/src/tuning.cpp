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

#include "spamboost/tuning.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>

#include "spamboost/error.hpp"
#include "spamboost/model.hpp"

namespace spamboost {
namespace {

std::size_t canonical_rank(const std::string& name) {
  const auto names = hyperparam_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error("grid: unknown hyperparameter '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

std::string describe(const ParamGrid& grid, const Hyperparams& p) {
  std::ostringstream s;
  bool first = true;
  for (const GridAxis& axis : grid.axes()) {
    s << (first ? "" : ", ") << axis.name << '=' << get_hyperparam(p, axis.name);
    first = false;
  }
  return s.str();
}

struct FoldData {
  Dataset fit;
  Dataset valid;
};

std::vector<FoldData> make_folds(const Dataset& train, const ValidationConfig& v) {
  std::vector<FoldData> folds;
  if (v.strategy == ValidationConfig::Strategy::kHoldout) {
    auto split = stratified_split(train, {v.holdout_fraction, v.seed});
    folds.push_back({std::move(split.train), std::move(split.test)});
  } else {
    for (const Fold& f : kfold_indices(train, v.folds, v.seed)) {
      folds.push_back({select_row_ids(train, f.train_ids), select_row_ids(train, f.valid_ids)});
    }
  }
  return folds;
}

TraceRecord evaluate_combination(const std::vector<FoldData>& folds, const Hyperparams& params,
                                 std::uint64_t seed, const std::string& label) {
  const auto start = std::chrono::steady_clock::now();
  TraceRecord rec;
  rec.params = params;
  for (std::size_t i = 0; i < folds.size(); ++i) {
    const FoldData& fold = folds[i];
    for (const Dataset* part : {&fold.fit, &fold.valid}) {
      if (part->count(kSpam) == 0 || part->count(kHam) == 0) {
        throw Error("grid_search [" + label + "]: validation fold " + std::to_string(i) +
                    " lacks a class");
      }
    }
    const Model model = train_with_validation(fold.fit, fold.valid, params, seed);
    const auto raw = predict_raw(model, fold.valid.matrix());
    rec.validation_error += classification_error(fold.valid.labels, raw);
    rec.rounds_used += static_cast<double>(model.trees.size());
  }
  rec.validation_error /= static_cast<double>(folds.size());
  rec.rounds_used /= static_cast<double>(folds.size());
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

void ParamGrid::add_axis(std::string name, std::vector<double> values) {
  const std::size_t rank = canonical_rank(name);
  if (values.empty()) throw Error("grid: '" + name + "' has no values");
  for (const GridAxis& a : axes_) {
    if (a.name == name) throw Error("grid: '" + name + "' listed twice");
  }
  GridAxis axis{std::move(name), std::move(values)};
  const auto pos = std::find_if(axes_.begin(), axes_.end(), [&](const GridAxis& a) {
    return canonical_rank(a.name) > rank;
  });
  axes_.insert(pos, std::move(axis));
}

std::size_t ParamGrid::size() const {
  std::size_t n = 1;
  for (const GridAxis& a : axes_) n *= a.values.size();
  return n;
}

std::vector<Hyperparams> ParamGrid::enumerate(const Hyperparams& base) const {
  std::vector<Hyperparams> out;
  out.reserve(size());
  std::vector<std::size_t> index(axes_.size(), 0);
  for (std::size_t c = 0; c < size(); ++c) {
    Hyperparams p = base;
    for (std::size_t a = 0; a < axes_.size(); ++a) {
      set_hyperparam(p, axes_[a].name, axes_[a].values[index[a]]);
    }
    try {
      p.validate();
    } catch (const Error& e) {
      throw Error("grid: combination " + std::to_string(c) + ": " + e.what());
    }
    out.push_back(p);
    for (std::size_t a = axes_.size(); a-- > 0;) {
      if (++index[a] < axes_[a].values.size()) break;
      index[a] = 0;
    }
  }
  return out;
}

ParamGrid ParamGrid::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error("grid: config must be a JSON object");
  ParamGrid grid;
  for (const auto& [key, value] : doc.items()) {
    canonical_rank(key);
    if (!value.is_array() || value.empty()) {
      throw Error("grid: '" + key + "' must be a non-empty list");
    }
    std::vector<double> values;
    for (const auto& v : value) {
      if (key == "early_stopping_rounds" && v.is_null()) {
        values.push_back(0.0);
      } else if (v.is_number()) {
        values.push_back(v.get<double>());
      } else {
        throw Error("grid: '" + key + "' contains a non-numeric value");
      }
    }
    grid.add_axis(key, std::move(values));
  }
  if (grid.axes().empty()) throw Error("grid: config lists no hyperparameters");
  // Range checks happen here so that a bad value is reported with its key.
  for (const GridAxis& axis : grid.axes()) {
    for (const double v : axis.values) {
      Hyperparams probe;
      try {
        set_hyperparam(probe, axis.name, v);
        probe.validate();
      } catch (const Error& e) {
        throw Error("grid: invalid value for '" + axis.name + "': " + e.what());
      }
    }
  }
  return grid;
}

ParamGrid ParamGrid::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open grid config '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("grid: parse error in '" + path.string() + "': " + e.what());
  }
  return from_json(doc);
}

void ValidationConfig::validate() const {
  if (strategy == Strategy::kHoldout && !(holdout_fraction > 0.0 && holdout_fraction < 1.0)) {
    throw Error("validation: holdout fraction must lie in (0, 1)");
  }
  if (strategy == Strategy::kKFold && folds < 2) throw Error("validation: k must be >= 2");
}

SearchResult grid_search(const Dataset& train, const ParamGrid& grid,
                         const ValidationConfig& validation, std::uint64_t seed,
                         const Hyperparams& base) {
  validation.validate();
  if (grid.size() == 0) throw Error("grid_search: empty grid");
  const std::vector<Hyperparams> combos = grid.enumerate(base);
  std::vector<FoldData> folds;
  try {
    folds = make_folds(train, validation);
  } catch (const Error& e) {
    throw Error(std::string("grid_search [every combination]: validation split impossible: ") +
                e.what());
  }

  SearchResult result;
  result.trace.resize(combos.size());
  std::vector<std::exception_ptr> errors(combos.size());
  const auto n = static_cast<std::int64_t>(combos.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < n; ++c) {
    try {
      result.trace[c] = evaluate_combination(folds, combos[c], seed, describe(grid, combos[c]));
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (std::size_t c = 1; c < result.trace.size(); ++c) {
    if (result.trace[c].validation_error < result.trace[result.best_index].validation_error) {
      result.best_index = c;
    }
  }
  result.best = result.trace[result.best_index].params;
  return result;
}

void write_trace_csv(const SearchResult& result, std::ostream& out) {
  out.precision(12);
  out << "index";
  for (const auto name : hyperparam_names()) out << ',' << name;
  out << ",validation_error,rounds_used,wall_seconds,best\n";
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const TraceRecord& r = result.trace[i];
    out << i;
    for (const auto name : hyperparam_names()) out << ',' << get_hyperparam(r.params, name);
    out << ',' << r.validation_error << ',' << r.rounds_used << ',' << r.wall_seconds << ','
        << (i == result.best_index ? 1 : 0) << '\n';
  }
}

}  // namespace spamboost
