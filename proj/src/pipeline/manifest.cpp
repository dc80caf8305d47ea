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

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>

#include "spamboost/error.hpp"
#include "spamboost/pipeline.hpp"
#include "text_io.hpp"

namespace spamboost {
namespace {

using nlohmann::ordered_json;

struct DigestDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};
using DigestContext = std::unique_ptr<EVP_MD_CTX, DigestDeleter>;

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw Error("sha256: digest initialisation failed");
    }
  }

  void update(const void* data, std::size_t size) {
    if (EVP_DigestUpdate(ctx_.get(), data, size) != 1) throw Error("sha256: update failed");
  }

  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), digest.data(), &len) != 1) {
      throw Error("sha256: finalisation failed");
    }
    std::string out;
    out.reserve(2 * len);
    char byte[3];
    for (unsigned int i = 0; i < len; ++i) {
      std::snprintf(byte, sizeof(byte), "%02x", digest[i]);
      out += byte;
    }
    return out;
  }

 private:
  DigestContext ctx_;
};

ordered_json counts_to_json(const ClassCounts& c) {
  return ordered_json{{"spam", c.spam}, {"ham", c.ham}};
}

ClassCounts counts_from_json(const nlohmann::json& doc) {
  return {doc.at("spam").get<std::size_t>(), doc.at("ham").get<std::size_t>()};
}

ordered_json manifest_body(const Manifest& m) {
  ordered_json doc;
  doc["format"] = "spamboost-manifest";
  doc["format_version"] = kManifestFormatVersion;
  doc["tool_version"] = m.tool_version;
  doc["dataset"] = {{"path", m.dataset_path},
                    {"sha256", m.dataset_sha256},
                    {"rows", m.dataset_rows},
                    {"feature_count", m.feature_count}};
  doc["split"] = {{"test_fraction", m.split.test_fraction},
                  {"seed", m.split.seed},
                  {"train", counts_to_json(m.train_counts)},
                  {"test", counts_to_json(m.test_counts)}};
  doc["training"] = {{"seed", m.train_seed},
                     {"hyperparams", hyperparams_to_json(m.params)},
                     {"resampling",
                      {{"method", std::string(resample_method_name(m.resample.method))},
                       {"k_neighbors", m.resample.k_neighbors},
                       {"seed", m.resample.seed}}},
                     {"rows_used", m.train_rows_used}};
  return doc;
}

}  // namespace

ClassCounts class_counts(const Dataset& ds) { return {ds.count(kSpam), ds.count(kHam)}; }

std::string sha256_hex(std::string_view bytes) {
  Sha256 h;
  h.update(bytes.data(), bytes.size());
  return h.hex();
}

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  Sha256 h;
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  if (in.bad()) throw Error("failed reading '" + path.string() + "'");
  return h.hex();
}

std::string manifest_hash(const Manifest& m) { return sha256_hex(manifest_body(m).dump()); }

nlohmann::ordered_json manifest_to_json(const Manifest& m) {
  ordered_json doc = manifest_body(m);
  doc["manifest_hash"] = manifest_hash(m);
  return doc;
}

Manifest manifest_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("format").get<std::string>() != "spamboost-manifest") {
      throw Error("manifest: not a spamboost manifest");
    }
    const int version = doc.at("format_version").get<int>();
    if (version != kManifestFormatVersion) {
      throw Error("manifest: unsupported format_version " + std::to_string(version));
    }
    Manifest m;
    m.tool_version = doc.at("tool_version").get<std::string>();
    const auto& ds = doc.at("dataset");
    m.dataset_path = ds.at("path").get<std::string>();
    m.dataset_sha256 = ds.at("sha256").get<std::string>();
    m.dataset_rows = ds.at("rows").get<std::size_t>();
    m.feature_count = ds.at("feature_count").get<std::size_t>();
    const auto& split = doc.at("split");
    m.split.test_fraction = split.at("test_fraction").get<double>();
    m.split.seed = split.at("seed").get<std::uint64_t>();
    m.split.validate();
    m.train_counts = counts_from_json(split.at("train"));
    m.test_counts = counts_from_json(split.at("test"));
    const auto& training = doc.at("training");
    m.train_seed = training.at("seed").get<std::uint64_t>();
    m.params = hyperparams_from_json(training.at("hyperparams"));
    const auto& rs = training.at("resampling");
    m.resample.method = parse_resample_method(rs.at("method").get<std::string>());
    m.resample.k_neighbors = rs.at("k_neighbors").get<std::size_t>();
    m.resample.seed = rs.at("seed").get<std::uint64_t>();
    m.train_rows_used = training.at("rows_used").get<std::size_t>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("manifest: schema violation: ") + e.what());
  }
}

void save_manifest(const Manifest& m, const std::filesystem::path& path) {
  pipeline_detail::write_text(path, manifest_to_json(m).dump(2) + "\n");
}

Manifest load_manifest(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(pipeline_detail::read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error("manifest '" + path.string() + "': parse error: " + e.what());
  }
  Manifest m = manifest_from_json(doc);
  const auto stored = doc.find("manifest_hash");
  if (stored == doc.end() || !stored->is_string() ||
      stored->get<std::string>() != manifest_hash(m)) {
    throw Error("manifest '" + path.string() + "': manifest_hash does not match its content");
  }
  return m;
}

}  // namespace spamboost
