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

#include "spamboost/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "spamboost/error.hpp"
#include "spamboost/random.hpp"

namespace spamboost {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> parse_real(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    return std::nullopt;
  }
  return value;
}

std::string line_error(std::size_t line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

}  // namespace

std::size_t Dataset::count(Label label) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

void Dataset::validate() const {
  if (features.size() != rows() * feature_count) {
    throw Error("dataset: feature matrix size does not match rows x feature_count");
  }
  if (row_ids.size() != rows()) throw Error("dataset: row id count differs from label count");
  for (const Label y : labels) {
    if (y != kHam && y != kSpam) throw Error("dataset: labels must be 0 or 1");
  }
  for (const double v : features) {
    if (!std::isfinite(v)) throw Error("dataset: non-finite feature value");
  }
  std::unordered_set<std::size_t> seen(row_ids.begin(), row_ids.end());
  if (seen.size() != row_ids.size()) throw Error("dataset: duplicate row ids");
}

Dataset parse_dataset(std::istream& in, std::optional<std::size_t> expected_features) {
  Dataset ds;
  std::optional<std::size_t> width;
  if (expected_features) width = *expected_features + 1;

  std::string line;
  std::size_t line_no = 0;
  std::vector<double> fields;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;

    fields.clear();
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string_view field =
          text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                             : comma - start);
      const auto value = parse_real(field);
      if (!value) {
        throw Error(line_error(line_no, "non-numeric field '" + std::string(trim(field)) + "'"));
      }
      fields.push_back(*value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }

    if (fields.size() < 2) {
      throw Error(line_error(line_no, "expected at least one feature and a label"));
    }
    if (!width) width = fields.size();
    if (fields.size() != *width) {
      throw Error(line_error(line_no, "expected " + std::to_string(*width) + " fields, found " +
                                          std::to_string(fields.size())));
    }
    const double label = fields.back();
    if (label != 0.0 && label != 1.0) {
      throw Error(line_error(line_no, "label must be 0 or 1"));
    }
    for (std::size_t f = 0; f + 1 < fields.size(); ++f) {
      if (!std::isfinite(fields[f])) {
        throw Error(line_error(line_no, "non-finite value in field " + std::to_string(f + 1)));
      }
      ds.features.push_back(fields[f]);
    }
    ds.row_ids.push_back(ds.labels.size());
    ds.labels.push_back(label == 1.0 ? kSpam : kHam);
  }
  if (in.bad()) throw Error("dataset: read failure");
  ds.feature_count = width ? *width - 1 : expected_features.value_or(0);
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path,
                     std::optional<std::size_t> expected_features) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dataset '" + path.string() + "'");
  try {
    return parse_dataset(in, expected_features);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_dataset_csv(const Dataset& ds, std::ostream& out) {
  char buf[32];
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    for (const double v : ds.row(i)) {
      const auto res = std::to_chars(buf, buf + sizeof(buf), v);
      out.write(buf, res.ptr - buf);
      out.put(',');
    }
    out << static_cast<int>(ds.labels[i]) << '\n';
  }
}

Dataset take_rows(const Dataset& ds, std::span<const std::size_t> positions) {
  Dataset out;
  out.feature_count = ds.feature_count;
  out.features.reserve(positions.size() * ds.feature_count);
  out.labels.reserve(positions.size());
  out.row_ids.reserve(positions.size());
  for (const std::size_t p : positions) {
    if (p >= ds.rows()) throw Error("dataset: row position out of range");
    const auto r = ds.row(p);
    out.features.insert(out.features.end(), r.begin(), r.end());
    out.labels.push_back(ds.labels[p]);
    out.row_ids.push_back(ds.row_ids[p]);
  }
  return out;
}

Dataset select_row_ids(const Dataset& ds, std::span<const std::size_t> ids) {
  std::unordered_map<std::size_t, std::size_t> position;
  position.reserve(ds.rows());
  for (std::size_t i = 0; i < ds.rows(); ++i) position.emplace(ds.row_ids[i], i);
  std::vector<std::size_t> positions;
  positions.reserve(ids.size());
  for (const std::size_t id : ids) {
    const auto it = position.find(id);
    if (it == position.end()) throw Error("dataset: unknown row id " + std::to_string(id));
    positions.push_back(it->second);
  }
  return take_rows(ds, positions);
}

void SplitSpec::validate() const {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error("split: test fraction must lie strictly between 0 and 1");
  }
}

std::size_t class_quota(double fraction, std::size_t class_count) {
  // nearbyint honours the default FE_TONEAREST mode: ties go to even.
  return static_cast<std::size_t>(std::nearbyint(fraction * static_cast<double>(class_count)));
}

TrainTestSplit stratified_split(const Dataset& ds, const SplitSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<std::uint8_t> in_test(ds.rows(), 0);
  for (const Label c : {kHam, kSpam}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < ds.rows(); ++i) {
      if (ds.labels[i] == c) members.push_back(i);
    }
    if (members.size() < 2) {
      throw Error("split: class " + std::to_string(c) + " has " +
                  std::to_string(members.size()) + " rows, at least 2 required");
    }
    const std::size_t quota = class_quota(spec.test_fraction, members.size());
    if (quota > members.size()) {
      throw Error("split: class " + std::to_string(c) + " is smaller than its test quota");
    }
    rng.shuffle(members);
    for (std::size_t j = 0; j < quota; ++j) in_test[members[j]] = 1;
  }
  std::vector<std::size_t> train_pos, test_pos;
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    (in_test[i] ? test_pos : train_pos).push_back(i);
  }
  return {take_rows(ds, train_pos), take_rows(ds, test_pos)};
}

std::vector<Fold> kfold_indices(const Dataset& ds, std::size_t k, std::uint64_t seed) {
  if (k < 2 || k > ds.rows()) {
    throw Error("kfold: k must satisfy 2 <= k <= rows (k=" + std::to_string(k) +
                ", rows=" + std::to_string(ds.rows()) + ")");
  }
  Rng rng(seed);
  std::vector<std::size_t> fold_of(ds.rows(), 0);
  // The round-robin offset carries over between classes so that total fold
  // sizes also differ by at most one.
  std::size_t offset = 0;
  for (const Label c : {kHam, kSpam}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < ds.rows(); ++i) {
      if (ds.labels[i] == c) members.push_back(i);
    }
    rng.shuffle(members);
    for (std::size_t j = 0; j < members.size(); ++j) fold_of[members[j]] = (offset + j) % k;
    offset = (offset + members.size()) % k;
  }
  std::vector<Fold> folds(k);
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    for (std::size_t f = 0; f < k; ++f) {
      (fold_of[i] == f ? folds[f].valid_ids : folds[f].train_ids).push_back(ds.row_ids[i]);
    }
  }
  return folds;
}

}  // namespace spamboost
