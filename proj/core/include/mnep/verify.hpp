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

#ifndef MNEP_VERIFY_HPP
#define MNEP_VERIFY_HPP

#include <string>
#include <vector>

#include "mnep/instance.hpp"

namespace mnep {

/// Outcome of the equilibrium checks. All comparisons are exact; there are
/// no tolerances anywhere.
struct VerificationReport {
  bool flow_conservation_ok = true;
  bool nonnegativity_ok = true;
  bool support_condition_ok = true;
  bool complementarity_ok = true;  // cost rows, x.mu = 0, mu >= 0, pi anchors
  bool duals_checked = false;      // false when the state carries no mu/pi
  std::vector<std::vector<Rational>> potentials;  // [class][vertex]
  std::vector<std::string> violations;

  bool accepted() const {
    return flow_conservation_ok && nonnegativity_ok && support_condition_ok &&
           complementarity_ok;
  }
};

/// Minimum cost of an origin-to-v path for each vertex of the class
/// subgraph, under the arc costs induced by the aggregate flows. Exact
/// label-correcting relaxation; costs are nonnegative, so finite.
std::vector<Rational> shortest_potentials(const Instance& instance, int class_id,
                                          const std::vector<Rational>& aggregate);

/// Arcs lying on some minimum-cost path from the class origin.
std::vector<int> mincost_arcs(const Instance& instance, int class_id,
                              const std::vector<Rational>& aggregate);

/// Certifies an equilibrium: per-class flow conservation, nonnegativity,
/// and support contained in the minimum-cost arc set. When the state
/// carries duals, additionally checks the cost rows, complementarity,
/// mu >= 0, and the origin anchoring of pi.
VerificationReport verify_equilibrium(const Instance& instance,
                                      const SolutionState& state);

/// Exhaustive oracle: tries every support family in a fixed order and
/// returns the first one admitting a feasible restricted system. Guarded
/// to at most 16 (class, arc) pairs; throws SizeGuardError beyond that.
SolutionState brute_force_solve(const Instance& instance);

inline constexpr int kBruteForceMaxPairs = 16;

}  // namespace mnep

#endif  // MNEP_VERIFY_HPP
