// Copyright 2026 The mnep Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mnep/cli/manhattan.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace mnep::cli {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % n + 1) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t v = rng();
    if (rem == 0 || v <= max - rem) return v % n;
  }
}

namespace {

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(uniform_below(rng, std::uint64_t(hi - lo + 1)));
}

}  // namespace

Instance gen_manhattan(int n, int classes, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_manhattan: n must be at least 2");
  if (classes < 1) {
    throw std::invalid_argument("gen_manhattan: at least one class");
  }
  Instance inst;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      inst.vertices.push_back("v" + std::to_string(r) + "_" + std::to_string(c));
    }
  }
  auto vid = [n](int r, int c) { return r * n + c; };
  auto add_edge = [&inst](int u, int v) {
    inst.arcs.push_back({"a" + std::to_string(inst.num_arcs()), u, v});
    inst.arcs.push_back({"a" + std::to_string(inst.num_arcs()), v, u});
  };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) add_edge(vid(r, c), vid(r, c + 1));
      if (r + 1 < n) add_edge(vid(r, c), vid(r + 1, c));
    }
  }

  std::mt19937_64 rng(seed);
  const int num_vertices = n * n;
  for (int k = 0; k < classes; ++k) {
    ClassSpec cls;
    cls.origin = static_cast<int>(uniform_below(rng, num_vertices));
    int dest = static_cast<int>(uniform_below(rng, num_vertices - 1));
    if (dest >= cls.origin) ++dest;
    cls.destination = dest;
    cls.demand = Rational(uniform_int(rng, 1, 10));
    cls.costs.resize(inst.num_arcs());
    for (int a = 0; a < inst.num_arcs(); ++a) {
      ArcCost cost;
      cost.alpha = Rational(uniform_int(rng, 100, 1000), 100);
      cost.beta = Rational(uniform_int(rng, 0, 10000), 100);
      cls.costs[a] = std::move(cost);
    }
    inst.classes.push_back(std::move(cls));
  }
  return inst;
}

}  // namespace mnep::cli
