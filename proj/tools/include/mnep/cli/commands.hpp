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

#ifndef MNEP_CLI_COMMANDS_HPP
#define MNEP_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mnep::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;   // verify: checks failed
inline constexpr int kExitParse = 2;      // unreadable or invalid input
inline constexpr int kExitSizeGuard = 3;  // enumeration size guard tripped
inline constexpr int kExitInternal = 4;   // solver invariant breach

// Size guards for the enumeration-based algorithms.
inline constexpr int kArrangementMaxDimension = 4;
inline constexpr int kArrangementMaxHyperplanes = 64;

struct GenArgs {
  int n = 2;
  int classes = 1;
  std::uint64_t seed = 1;
  std::string output;
};

struct SolveArgs {
  std::string algo = "lemke";  // lemke | arrangement | brute
  std::string input;
  std::string output;  // optional; stdout summary either way
};

struct VerifyArgs {
  std::string instance_path;
  std::string solution_path;
};

struct BenchArgs {
  std::vector<int> grids{2, 4, 6, 8};
  std::vector<int> classes{2};
  int seeds = 5;
  std::string output;  // optional report file
};

int run_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace mnep::cli

#endif  // MNEP_CLI_COMMANDS_HPP
