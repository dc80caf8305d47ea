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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "spamboost/random.hpp"

using namespace spamboost;

TEST_CASE("streams are reproducible and distinct") {
  Rng a = Rng::derive(1, 1), b = Rng::derive(1, 1), c = Rng::derive(1, 2), d = Rng::derive(2, 1);
  const auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(x != d.next());
}

TEST_CASE("below and uniform stay in range") {
  Rng rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    REQUIRE(v < 7);
    ++hits[v];
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  for (const int h : hits) CHECK(h > 800);
}

TEST_CASE("shuffle permutes") {
  Rng rng(4);
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[i] = i;
  auto w = v;
  rng.shuffle(w);
  CHECK(w != v);
  std::sort(w.begin(), w.end());
  CHECK(w == v);
}

TEST_CASE("sample_sorted draws distinct ascending values") {
  Rng rng(5);
  for (std::size_t n = 1; n < 40; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto s = rng.sample_sorted(n, k);
      REQUIRE(s.size() == k);
      CHECK(std::is_sorted(s.begin(), s.end()));
      CHECK(std::set<std::size_t>(s.begin(), s.end()).size() == k);
      if (k > 0) CHECK(s.back() < n);
    }
  }
}

TEST_CASE("fraction_count rounds up and clamps") {
  CHECK(fraction_count(0.75, 57) == 43);
  CHECK(fraction_count(1.0, 57) == 57);
  CHECK(fraction_count(0.5, 4) == 2);
  CHECK(fraction_count(0.01, 5) == 1);
  CHECK(fraction_count(0.7, 10) == 7);
}
