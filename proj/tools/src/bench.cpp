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

#include "mnep/cli/bench.hpp"

#include <iomanip>
#include <numeric>
#include <ostream>

#include "mnep/cli/manhattan.hpp"
#include "mnep/lemke.hpp"

namespace mnep::cli {

namespace {

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

double BenchCell::mean_pivots() const {
  if (pivots.empty()) return 0.0;
  return std::accumulate(pivots.begin(), pivots.end(), 0.0) /
         static_cast<double>(pivots.size());
}

double BenchCell::mean_pivot_seconds() const { return mean_of(pivot_seconds); }
double BenchCell::mean_solve_seconds() const { return mean_of(solve_seconds); }

BenchReport run_bench(const BenchOptions& options) {
  BenchReport report;
  report.options = options;
  for (int classes : options.class_counts) {
    for (int n : options.grids) {
      BenchCell cell;
      cell.classes = classes;
      cell.n = n;
      cell.vertices = n * n;
      cell.arcs = 4 * n * (n - 1);
      for (int s = 1; s <= options.seeds_per_cell; ++s) {
        cell.seeds.push_back(static_cast<std::uint64_t>(s));
        try {
          const Instance inst = gen_manhattan(n, classes, s);
          const LemkeResult result = lemke_solve(inst);
          cell.pivots.push_back(result.trace.pivots());
          cell.omega_zero.push_back(result.state.omega.is_zero());
          cell.pivot_seconds.push_back(result.trace.pivot_seconds);
          cell.solve_seconds.push_back(result.trace.setup_seconds +
                                       result.trace.extract_seconds);
        } catch (const std::exception& e) {
          cell.failures.push_back("seed " + std::to_string(s) + ": " + e.what());
        }
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

void render_bench_report(const BenchReport& report, std::ostream& out) {
  out << "# Random grid benchmark (exact pivoting solver)\n";
  out << "# per class: alpha ~ U{100..1000}/100, beta ~ U{0..10000}/100,\n";
  out << "# demand ~ U{1..10}, origin/destination uniform distinct; seeds 1.."
      << report.options.seeds_per_cell << " per cell\n";
  out << std::left << std::setw(8) << "Classes" << std::setw(8) << "Grid"
      << std::setw(10) << "Vertices" << std::setw(7) << "Arcs" << std::setw(10)
      << "Pivots" << std::setw(12) << "Pivoting(s)" << std::setw(12)
      << "Solves(s)" << "Status" << "\n";
  for (const auto& cell : report.cells) {
    out << std::left << std::setw(8) << cell.classes << std::setw(8)
        << (std::to_string(cell.n) + "x" + std::to_string(cell.n))
        << std::setw(10) << cell.vertices << std::setw(7) << cell.arcs
        << std::setw(10) << std::fixed << std::setprecision(1)
        << cell.mean_pivots() << std::setw(12) << std::setprecision(3)
        << cell.mean_pivot_seconds() << std::setw(12) << cell.mean_solve_seconds()
        << (cell.complete() ? "ok" : "incomplete") << "\n";
    for (const auto& failure : cell.failures) {
      out << "#   failure: " << failure << "\n";
    }
  }
}

}  // namespace mnep::cli
