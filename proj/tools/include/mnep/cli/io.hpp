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

#ifndef MNEP_CLI_IO_HPP
#define MNEP_CLI_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "mnep/instance.hpp"

namespace mnep::cli {

// File formats. Both documents are JSON with every numeric value written as
// an exact rational string ("7/2", "5"); integer JSON numbers are accepted
// on input, floats are rejected as lossy.
//
// Instance:
//   {"vertices": ["s","t"],
//    "arcs": [{"id":"a1","tail":"s","head":"t"}],
//    "classes": [{"origin":"s","destination":"t","demand":"4",
//                 "costs": {"a1": {"alpha":"1","beta":"0"}}}]}
// Costs must cover every arc the class can reach; entries for unreachable
// arcs are kept but ignored, with a warning.
//
// Solution:
//   {"omega":"0",
//    "classes": [{"x": {...}, "mu": {...}, "pi": {...}, "pi_t": "3"}],
//    "meta": {"algorithm":"lemke","pivots":1,"elapsed_seconds":0.01}}
// "mu"/"pi" may be absent, in which case only the flow-side checks apply.

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct LoadedInstance {
  Instance instance;
  std::vector<std::string> warnings;
};

LoadedInstance parse_instance_text(const std::string& text);
LoadedInstance read_instance(const std::string& path);
std::string instance_to_text(const Instance& instance);
void write_instance(const std::string& path, const Instance& instance);

struct SolutionMeta {
  std::string algorithm;
  int pivots = -1;               // < 0: not recorded
  double elapsed_seconds = -1;   // < 0: not recorded
};

struct SolutionDocument {
  SolutionState state;
  SolutionMeta meta;
};

SolutionDocument parse_solution_text(const std::string& text,
                                     const Instance& instance);
SolutionDocument read_solution(const std::string& path, const Instance& instance);
std::string solution_to_text(const Instance& instance, const SolutionState& state,
                             const SolutionMeta& meta);
void write_solution(const std::string& path, const Instance& instance,
                    const SolutionState& state, const SolutionMeta& meta);

}  // namespace mnep::cli

#endif  // MNEP_CLI_IO_HPP
