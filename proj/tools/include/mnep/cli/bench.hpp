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

#ifndef MNEP_CLI_BENCH_HPP
#define MNEP_CLI_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mnep::cli {

struct BenchOptions {
  std::vector<int> grids{2, 4, 6, 8};
  std::vector<int> class_counts{2};
  int seeds_per_cell = 5;
};

/// One (classes, grid) cell: aggregates over `seeds_per_cell` seeded
/// instances. Timing splits the run into the pivoting phase and the exact
/// linear-solve phase (initial tableau plus final read-out).
struct BenchCell {
  int classes = 0;
  int n = 0;
  int vertices = 0;
  int arcs = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<int> pivots;
  std::vector<bool> omega_zero;
  std::vector<double> pivot_seconds;
  std::vector<double> solve_seconds;
  std::vector<std::string> failures;

  bool complete() const { return failures.empty(); }
  double mean_pivots() const;
  double mean_pivot_seconds() const;
  double mean_solve_seconds() const;
};

struct BenchReport {
  BenchOptions options;
  std::vector<BenchCell> cells;
};

BenchReport run_bench(const BenchOptions& options);

/// Fixed-width table with one row per cell, plus a header recording the
/// sampling distributions used by the generator.
void render_bench_report(const BenchReport& report, std::ostream& out);

}  // namespace mnep::cli

#endif  // MNEP_CLI_BENCH_HPP
