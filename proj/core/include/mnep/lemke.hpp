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

#ifndef MNEP_LEMKE_HPP
#define MNEP_LEMKE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mnep/errors.hpp"
#include "mnep/lcp.hpp"

namespace mnep {

/// One spanning arborescence per class, rooted at the class origin.
/// Built by breadth-first search, so deterministic in arc-index order.
struct Arborescences {
  struct Tree {
    std::vector<int> parent_arc;   // per vertex; -1 at the origin and off-class
    std::vector<int> bfs_vertices; // root first
    std::vector<int> arcs;         // ascending arc indices
    std::vector<char> in_tree;     // per arc
  };
  std::vector<Tree> trees;
};

Arborescences build_arborescences(const Instance& instance,
                                  const std::vector<ClassSubgraph>& subgraphs);

/// Covering vector over pairs: 0 on arborescence arcs, 1 elsewhere.
std::vector<Rational> covering_vector(const IndexSets& idx,
                                      const Arborescences& arbs);

/// A basis: a sorted set of signed variable ids (x, mu, possibly omega)
/// whose bordered square matrix (with the pi block) is nonsingular.
struct Basis {
  std::vector<int> vars;  // ascending

  bool contains(int var) const;
  std::uint64_t hash() const;
  bool operator==(const Basis& o) const { return vars == o.vars; }
  bool operator<(const Basis& o) const { return vars < o.vars; }
};

struct PivotStep {
  int entering = -1;
  int leaving = -1;
  std::uint64_t basis_hash = 0;  // hash after the pivot
};

/// Record of a pivoting run, including the invariant counters the
/// integration tests assert on.
struct PivotTrace {
  std::vector<PivotStep> steps;
  bool solved_at_init = false;
  double setup_seconds = 0.0;    // initial linear solves
  double pivot_seconds = 0.0;    // main loop
  double extract_seconds = 0.0;  // final solution read-out

  int pivots() const { return static_cast<int>(steps.size()); }
};

struct InitialBasis {
  bool solved = false;  // true: `state` already solves the problem with omega=0
  Basis basis;          // meaningful when !solved
  SolutionState state;  // basic solution at the returned basis (or solved state)
};

/// Tree-flow construction of the starting point: either the instance is
/// solved outright (all non-tree reduced costs nonnegative) or a feasible
/// complementary basis containing omega is returned.
InitialBasis initial_basis(const LcpSystem& system, const Arborescences& arbs);

/// Basic solution of an arbitrary basis: off-basis x/mu are zero, omega is
/// zero unless the omega index is in the basis, and the square bordered
/// system determines the rest. Throws NotABasisError when singular.
SolutionState basic_solution(const LcpSystem& system, const Basis& basis);

/// The unique (x, mu) pair with both indices absent when omega is in the
/// basis; nullopt when omega is not (the pivot path has ended).
std::optional<std::pair<int, int>> twin_indices(const IndexSets& idx,
                                                const Basis& basis);

/// Twin partner of the index that just left the basis.
int entering_index(const IndexSets& idx, const Basis& basis, int just_left);

/// Lexicographic ratio test from an arbitrary feasible complementary basis:
/// the leaving variable and the plain (unperturbed) step of the entering
/// variable. Throws RayError when nothing blocks.
std::pair<int, Rational> leaving_index(const LcpSystem& system,
                                       const Basis& basis, int entering);

struct LemkeOptions {
  /// Re-check lexicographic feasibility and complementarity after every
  /// pivot. Quadratic per pivot; meant for tests.
  bool paranoid = false;
};

struct LemkeResult {
  SolutionState state;
  PivotTrace trace;
  Basis final_basis;
};

/// Full pivoting solver: arborescences, covering vector, initial basis,
/// then twin-index pivots until omega leaves. The returned state solves the
/// equilibrium system exactly (omega = 0). Degeneracy is resolved by a
/// symbolic lexicographic perturbation of the right-hand side, so no
/// numeric epsilon is ever materialized.
LemkeResult lemke_solve(const Instance& instance, const LemkeOptions& = {});

}  // namespace mnep

#endif  // MNEP_LEMKE_HPP
