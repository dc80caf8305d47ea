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
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "spamboost/dataset.hpp"

namespace spamboost::testing {

// Dataset from explicit rows; row ids are positional.
inline Dataset make_dataset(const std::vector<std::vector<double>>& rows,
                            const std::vector<Label>& labels) {
  Dataset ds;
  ds.feature_count = rows.empty() ? 0 : rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ds.features.insert(ds.features.end(), rows[i].begin(), rows[i].end());
    ds.labels.push_back(labels[i]);
    ds.row_ids.push_back(i);
  }
  return ds;
}

// Random dataset; each feature draws from `levels` distinct values (0 means
// continuous) so that ties between feature values are exercised.
inline Dataset random_dataset(std::mt19937_64& gen, std::size_t rows, std::size_t features,
                              int levels = 0, double positive_rate = 0.4) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Dataset ds;
  ds.feature_count = features;
  std::vector<std::vector<double>> level_values(features);
  for (auto& lv : level_values) {
    for (int l = 0; l < levels; ++l) lv.push_back(unit(gen) * 10.0);
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t f = 0; f < features; ++f) {
      const double v = levels > 0 ? level_values[f][gen() % static_cast<std::uint64_t>(levels)]
                                  : unit(gen) * 10.0;
      ds.features.push_back(v);
    }
    ds.labels.push_back(unit(gen) < positive_rate ? kSpam : kHam);
    ds.row_ids.push_back(i);
  }
  return ds;
}

// Two well separated clusters along feature 0.
inline Dataset separable_dataset(std::size_t per_class, std::size_t features,
                                 std::uint64_t seed = 7) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Dataset ds;
  ds.feature_count = features;
  for (std::size_t i = 0; i < 2 * per_class; ++i) {
    const Label y = i % 2 == 0 ? kSpam : kHam;
    for (std::size_t f = 0; f < features; ++f) {
      double v = unit(gen);
      if (f == 0) v += y == kSpam ? 5.0 : -5.0;
      ds.features.push_back(v);
    }
    ds.labels.push_back(y);
    ds.row_ids.push_back(i);
  }
  return ds;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("spamboost_" + tag + "_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace spamboost::testing
