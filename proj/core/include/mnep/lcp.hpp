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

#ifndef MNEP_LCP_HPP
#define MNEP_LCP_HPP

#include <utility>
#include <vector>

#include "mnep/instance.hpp"
#include "mnep/linalg.hpp"

namespace mnep {

// The complementarity system couples one flow variable x and one slack
// variable mu per (class, reachable arc) pair, a single augmentation
// variable omega, and one unsigned potential pi per (class, vertex other
// than the origin). Variable ids are dense:
//   [0, P)        x variables, pair order
//   [P, 2P)       mu variables, pair order
//   2P            omega
//   (2P, 2P + R]  pi variables, conservation-row order
// where P is the pair count and R the conservation-row count. Pair order is
// class-major with arcs ascending; the same convention orders the rows.

/// Index bookkeeping for the signed variables x, mu, and omega.
struct IndexSets {
  int num_pairs = 0;
  std::vector<std::pair<int, int>> pairs;     // pair -> (class, arc)
  std::vector<std::vector<int>> pair_index;   // [class][arc] -> pair or -1

  int x_var(int pair) const { return pair; }
  int mu_var(int pair) const { return num_pairs + pair; }
  int omega_var() const { return 2 * num_pairs; }
  int x_var_of(int class_id, int arc) const;
  int mu_var_of(int class_id, int arc) const;

  bool is_x(int var) const { return var >= 0 && var < num_pairs; }
  bool is_mu(int var) const { return var >= num_pairs && var < 2 * num_pairs; }
  bool is_omega(int var) const { return var == 2 * num_pairs; }
  /// Pair of an x or mu variable.
  int pair_of(int var) const { return is_mu(var) ? var - num_pairs : var; }
  int num_signed_vars() const { return 2 * num_pairs + 1; }
};

/// Row layout: all flow-conservation rows (class-major, vertices ascending,
/// origin row dropped), then all cost rows (class-major, arcs ascending).
struct RowLayout {
  int num_cons = 0;
  int num_cost = 0;
  std::vector<std::pair<int, int>> cons_rows;  // row -> (class, vertex)
  std::vector<std::pair<int, int>> cost_rows;  // row - num_cons -> (class, arc)
  std::vector<std::vector<int>> cons_row_of;   // [class][vertex] -> row or -1
  std::vector<std::vector<int>> cost_row_of;   // [class][arc] -> row or -1

  int num_rows() const { return num_cons + num_cost; }
};

struct SparseEntry {
  int row;
  Rational value;
};
using SparseColumn = std::vector<SparseEntry>;

/// The assembled data of the augmented complementarity program: sparse
/// columns of the signed variables and of the pi block, the covering
/// vector, and the right-hand side (demands; negated intercepts).
struct LcpSystem {
  Instance instance;
  std::vector<ClassSubgraph> subgraphs;
  IndexSets idx;
  RowLayout rows;
  std::vector<Rational> e;    // covering vector, one entry per pair
  std::vector<Rational> rhs;  // (b ; -beta) over rows

  std::vector<SparseColumn> x_cols;   // per pair
  std::vector<SparseColumn> mu_cols;  // per pair
  SparseColumn omega_col;
  std::vector<SparseColumn> pi_cols;  // per conservation row

  int num_rows() const { return rows.num_rows(); }
  int num_pi() const { return rows.num_cons; }
  int pi_var(int cons_row) const { return idx.num_signed_vars() + cons_row; }
  bool is_pi_var(int var) const { return var > idx.omega_var(); }
  int num_vars() const { return idx.num_signed_vars() + num_pi(); }

  const SparseColumn& column_for_var(int var) const;

  /// Materializes the signed-column block [M 0 0; C -I e] densely.
  Matrix dense_signed() const;

  /// Row residuals of the equality system at a candidate state, computed
  /// from the defining formulas (not from the stored columns).
  std::vector<Rational> residuals(const SolutionState& state) const;
};

IndexSets build_index_sets(const Instance& instance,
                           const std::vector<ClassSubgraph>& subgraphs);

/// Incidence matrix of a class subgraph with the origin row removed:
/// +1 where the row vertex is the arc tail, -1 where it is the head.
struct IncidenceMatrix {
  std::vector<int> row_vertices;  // V^k minus the origin, ascending
  std::vector<int> col_arcs;      // A^k ascending
  Matrix m;
};

IncidenceMatrix build_incidence(const Instance& instance,
                                const ClassSubgraph& subgraph);

/// Demand vector over conservation rows: -demand at each destination row,
/// zero elsewhere (the origin row is dropped).
std::vector<Rational> build_demand(const Instance& instance);

/// Cost block over (cost row, x variable): the row of pair (a, k) carries
/// alpha_a^k in the x column of every class that reaches arc a.
Matrix build_cost_blocks(const Instance& instance);

/// Assembles the full system for a given covering vector (entries 0/1,
/// one per pair).
LcpSystem assemble_lcp(const Instance& instance, std::vector<Rational> e);

}  // namespace mnep

#endif  // MNEP_LCP_HPP
