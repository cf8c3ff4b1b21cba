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

#ifndef MNEP_INSTANCE_HPP
#define MNEP_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mnep/rational.hpp"

namespace mnep {

// Vertices, arcs, and classes are referred to by dense indices everywhere in
// the solvers. Indices follow file order: the position of a vertex in
// Instance::vertices, of an arc in Instance::arcs, and of a class in
// Instance::classes. All row/column/basis orderings derive from these, which
// makes runs reproducible for a given input file.

struct Arc {
  std::string id;
  int tail = -1;
  int head = -1;
};

struct ArcCost {
  Rational alpha;  // slope, must be > 0
  Rational beta;   // intercept, must be >= 0
};

/// One population of players: origin, destination, demand, and the affine
/// cost coefficients of every arc the class can reach. `costs` is indexed by
/// arc; entries may exist for unreachable arcs (they are ignored).
struct ClassSpec {
  int origin = -1;
  int destination = -1;
  Rational demand;
  std::vector<std::optional<ArcCost>> costs;
};

struct Instance {
  std::vector<std::string> vertices;
  std::vector<Arc> arcs;
  std::vector<ClassSpec> classes;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arcs() const { return static_cast<int>(arcs.size()); }
  int num_classes() const { return static_cast<int>(classes.size()); }
};

/// The part of the network a class can use: vertices reachable from its
/// origin and arcs whose tail is reachable.
struct ClassSubgraph {
  int class_id = -1;
  std::vector<int> vertices;  // ascending vertex indices
  std::vector<int> arcs;      // ascending arc indices
  std::vector<char> has_vertex;
  std::vector<char> has_arc;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arcs() const { return static_cast<int>(arcs.size()); }
  bool contains_vertex(int v) const { return has_vertex[v] != 0; }
  bool contains_arc(int a) const { return has_arc[a] != 0; }
};

/// A candidate solution: per-class arc flows x, cost slacks mu, vertex
/// potentials pi, and the augmentation scalar omega. Entries for arcs or
/// vertices outside a class subgraph are kept at zero. Files may omit the
/// dual parts (mu, pi); `has_duals` records whether they are meaningful.
struct SolutionState {
  std::vector<std::vector<Rational>> x;   // [class][arc]
  std::vector<std::vector<Rational>> mu;  // [class][arc]
  std::vector<std::vector<Rational>> pi;  // [class][vertex], 0 at the origin
  Rational omega;
  bool has_duals = true;

  static SolutionState zeros(const Instance& instance);
};

/// Vertices and arcs reachable from the class origin, by breadth-first
/// search in arc-index order.
ClassSubgraph reachable_subgraph(const Instance& instance, int class_id);

std::vector<ClassSubgraph> all_subgraphs(const Instance& instance);

/// Checks every structural invariant of the instance. Returns a list of
/// human-readable violations; empty means the instance is well-formed and
/// solvable (every destination reachable, costs positive-slope, etc.).
std::vector<std::string> validate_instance(const Instance& instance);

/// alpha * load + beta for class `class_id` on arc `arc`. Throws
/// std::invalid_argument if the arc is outside the class subgraph.
Rational arc_cost(const Instance& instance, int class_id, int arc,
                  const Rational& load);

/// Aggregate flow per arc: x_a = sum over classes of x[k][a].
std::vector<Rational> aggregate_flow(const Instance& instance,
                                     const SolutionState& state);

}  // namespace mnep

#endif  // MNEP_INSTANCE_HPP
