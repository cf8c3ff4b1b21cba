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

#ifndef MNEP_CLI_MANHATTAN_HPP
#define MNEP_CLI_MANHATTAN_HPP

#include <cstdint>
#include <random>

#include "mnep/instance.hpp"

namespace mnep::cli {

// Random grid instances: an n x n grid with both directions of every edge
// between adjacent vertices (4n(n-1) arcs). Per class, sampled in a fixed
// order from a seeded mt19937_64 (origin, destination, demand, then alpha
// and beta per arc in arc order):
//   alpha  uniform on {100..1000}/100  (i.e. [1,10] on the 1/100 lattice)
//   beta   uniform on {0..10000}/100   (i.e. [0,100] on the same lattice)
//   demand uniform integer in [1,10]
//   origin/destination: uniform distinct vertices
// Identical (n, classes, seed) produce byte-identical instance files.

Instance gen_manhattan(int n, int classes, std::uint64_t seed);

/// Exact uniform draw from [0, n) by rejection, independent of any standard
/// library distribution implementation (mt19937_64 output is specified
/// bit-for-bit, so generation is portable).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace mnep::cli

#endif  // MNEP_CLI_MANHATTAN_HPP
