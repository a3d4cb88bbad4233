// Copyright 2026 The deflate-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "deflate/realize.hpp"
#include "random_dual.hpp"

namespace deflate::testing {

struct DeflatedSample {
  DualTree dual;
  Polygon polygon;
};

// Deflated polygons realized from random illegal-path-free duals; every
// other sample uses jittered realization choices.
inline std::vector<DeflatedSample> deflated_corpus(std::uint64_t seed, int count, int min_n, int max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(min_n, max_n);
  std::vector<DeflatedSample> out;
  for (int i = 0; i < count; ++i) {
    DualTree d = random_directed_dual(rng, size(rng));
    RealizeOptions opts;
    if (i % 2 == 1) opts.jitter_seed = rng() | 1u;
    Polygon p = realize(d, opts);
    out.push_back({std::move(d), std::move(p)});
  }
  return out;
}

}  // namespace deflate::testing
