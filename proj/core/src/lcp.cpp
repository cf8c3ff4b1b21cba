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

#include "mnep/lcp.hpp"

#include <stdexcept>

namespace mnep {

IndexSets build_index_sets(const Instance& instance,
                           const std::vector<ClassSubgraph>& subs) {
  IndexSets idx;
  idx.pair_index.assign(instance.num_classes(),
                        std::vector<int>(instance.num_arcs(), -1));
  for (int k = 0; k < instance.num_classes(); ++k) {
    for (int a : subs[k].arcs) {
      idx.pair_index[k][a] = idx.num_pairs++;
      idx.pairs.emplace_back(k, a);
    }
  }
  return idx;
}

namespace {

RowLayout build_row_layout(const Instance& instance,
                           const std::vector<ClassSubgraph>& subs) {
  RowLayout rows;
  rows.cons_row_of.assign(instance.num_classes(),
                          std::vector<int>(instance.num_vertices(), -1));
  rows.cost_row_of.assign(instance.num_classes(),
                          std::vector<int>(instance.num_arcs(), -1));
  for (int k = 0; k < instance.num_classes(); ++k) {
    for (int v : subs[k].vertices) {
      if (v == instance.classes[k].origin) continue;
      rows.cons_row_of[k][v] = rows.num_cons++;
      rows.cons_rows.emplace_back(k, v);
    }
  }
  for (int k = 0; k < instance.num_classes(); ++k) {
    for (int a : subs[k].arcs) {
      rows.cost_row_of[k][a] = rows.num_cons + rows.num_cost++;
      rows.cost_rows.emplace_back(k, a);
    }
  }
  return rows;
}

}  // namespace

int IndexSets::x_var_of(int class_id, int arc) const {
  int p = pair_index[class_id][arc];
  if (p < 0) throw std::invalid_argument("x_var_of: arc not reachable by class");
  return x_var(p);
}

int IndexSets::mu_var_of(int class_id, int arc) const {
  int p = pair_index[class_id][arc];
  if (p < 0) throw std::invalid_argument("mu_var_of: arc not reachable by class");
  return mu_var(p);
}

const SparseColumn& LcpSystem::column_for_var(int var) const {
  if (idx.is_x(var)) return x_cols[var];
  if (idx.is_mu(var)) return mu_cols[var - idx.num_pairs];
  if (idx.is_omega(var)) return omega_col;
  int p = var - idx.num_signed_vars();
  if (p < 0 || p >= num_pi()) throw std::invalid_argument("bad variable id");
  return pi_cols[p];
}

Matrix LcpSystem::dense_signed() const {
  Matrix m(num_rows(), idx.num_signed_vars());
  auto put = [&m](const SparseColumn& col, int j) {
    for (const auto& entry : col) m.at(entry.row, j) = entry.value;
  };
  for (int p = 0; p < idx.num_pairs; ++p) put(x_cols[p], idx.x_var(p));
  for (int p = 0; p < idx.num_pairs; ++p) put(mu_cols[p], idx.mu_var(p));
  put(omega_col, idx.omega_var());
  return m;
}

std::vector<Rational> LcpSystem::residuals(const SolutionState& state) const {
  std::vector<Rational> agg = aggregate_flow(instance, state);
  std::vector<Rational> out(num_rows());
  for (int r = 0; r < rows.num_cons; ++r) {
    auto [k, v] = rows.cons_rows[r];
    Rational net;
    for (int a : subgraphs[k].arcs) {
      const Arc& arc = instance.arcs[a];
      if (arc.tail == v) net += state.x[k][a];
      if (arc.head == v) net -= state.x[k][a];
    }
    out[r] = net - rhs[r];
  }
  for (int r = 0; r < rows.num_cost; ++r) {
    auto [k, a] = rows.cost_rows[r];
    const Arc& arc = instance.arcs[a];
    const ArcCost& cost = *instance.classes[k].costs[a];
    Rational value = cost.alpha * agg[a];
    if (arc.tail != instance.classes[k].origin) value += state.pi[k][arc.tail];
    if (arc.head != instance.classes[k].origin) value -= state.pi[k][arc.head];
    value -= state.mu[k][a];
    int p = idx.pair_index[k][a];
    value += e[p] * state.omega;
    out[rows.num_cons + r] = value - rhs[rows.num_cons + r];
  }
  return out;
}

IncidenceMatrix build_incidence(const Instance& instance,
                                const ClassSubgraph& subgraph) {
  IncidenceMatrix inc;
  const int origin = instance.classes[subgraph.class_id].origin;
  std::vector<int> row_of(instance.num_vertices(), -1);
  for (int v : subgraph.vertices) {
    if (v == origin) continue;
    row_of[v] = static_cast<int>(inc.row_vertices.size());
    inc.row_vertices.push_back(v);
  }
  inc.col_arcs = subgraph.arcs;
  inc.m = Matrix(static_cast<int>(inc.row_vertices.size()),
                 static_cast<int>(inc.col_arcs.size()));
  for (int j = 0; j < static_cast<int>(inc.col_arcs.size()); ++j) {
    const Arc& arc = instance.arcs[inc.col_arcs[j]];
    if (row_of[arc.tail] >= 0) inc.m.at(row_of[arc.tail], j) = Rational(1);
    if (row_of[arc.head] >= 0) inc.m.at(row_of[arc.head], j) = Rational(-1);
  }
  return inc;
}

std::vector<Rational> build_demand(const Instance& instance) {
  auto subs = all_subgraphs(instance);
  RowLayout rows = build_row_layout(instance, subs);
  std::vector<Rational> b(rows.num_cons);
  for (int r = 0; r < rows.num_cons; ++r) {
    auto [k, v] = rows.cons_rows[r];
    if (v == instance.classes[k].destination) b[r] = -instance.classes[k].demand;
  }
  return b;
}

Matrix build_cost_blocks(const Instance& instance) {
  auto subs = all_subgraphs(instance);
  IndexSets idx = build_index_sets(instance, subs);
  RowLayout rows = build_row_layout(instance, subs);
  Matrix c(rows.num_cost, idx.num_pairs);
  for (int r = 0; r < rows.num_cost; ++r) {
    auto [k, a] = rows.cost_rows[r];
    const Rational& alpha = instance.classes[k].costs[a]->alpha;
    for (int k2 = 0; k2 < instance.num_classes(); ++k2) {
      int p = idx.pair_index[k2][a];
      if (p >= 0) c.at(r, p) = alpha;
    }
  }
  return c;
}

LcpSystem assemble_lcp(const Instance& instance, std::vector<Rational> e) {
  LcpSystem sys;
  sys.instance = instance;
  sys.subgraphs = all_subgraphs(sys.instance);
  sys.idx = build_index_sets(sys.instance, sys.subgraphs);
  sys.rows = build_row_layout(sys.instance, sys.subgraphs);
  if (static_cast<int>(e.size()) != sys.idx.num_pairs) {
    throw std::invalid_argument("assemble_lcp: covering vector size mismatch");
  }
  for (const auto& v : e) {
    if (!(v == Rational(0) || v == Rational(1))) {
      throw std::invalid_argument("assemble_lcp: covering entries must be 0/1");
    }
  }
  sys.e = std::move(e);

  sys.rhs.assign(sys.num_rows(), Rational(0));
  std::vector<Rational> b = build_demand(sys.instance);
  for (int r = 0; r < sys.rows.num_cons; ++r) sys.rhs[r] = b[r];
  for (int r = 0; r < sys.rows.num_cost; ++r) {
    auto [k, a] = sys.rows.cost_rows[r];
    sys.rhs[sys.rows.num_cons + r] = -instance.classes[k].costs[a]->beta;
  }

  sys.x_cols.resize(sys.idx.num_pairs);
  sys.mu_cols.resize(sys.idx.num_pairs);
  for (int p = 0; p < sys.idx.num_pairs; ++p) {
    auto [k, a] = sys.idx.pairs[p];
    const Arc& arc = sys.instance.arcs[a];
    SparseColumn& col = sys.x_cols[p];
    int tail_row = sys.rows.cons_row_of[k][arc.tail];
    int head_row = sys.rows.cons_row_of[k][arc.head];
    if (tail_row >= 0) col.push_back({tail_row, Rational(1)});
    if (head_row >= 0) col.push_back({head_row, Rational(-1)});
    // alpha of every class whose cost row sees this arc's aggregate flow.
    for (int k2 = 0; k2 < sys.instance.num_classes(); ++k2) {
      int row = sys.rows.cost_row_of[k2][a];
      if (row >= 0) {
        col.push_back({row, sys.instance.classes[k2].costs[a]->alpha});
      }
    }
    sys.mu_cols[p].push_back({sys.rows.cost_row_of[k][a], Rational(-1)});
    if (!sys.e[p].is_zero()) {
      sys.omega_col.push_back({sys.rows.cost_row_of[k][a], sys.e[p]});
    }
  }

  sys.pi_cols.resize(sys.rows.num_cons);
  for (int r = 0; r < sys.rows.num_cons; ++r) {
    auto [k, w] = sys.rows.cons_rows[r];
    SparseColumn& col = sys.pi_cols[r];
    for (int a : sys.subgraphs[k].arcs) {
      const Arc& arc = sys.instance.arcs[a];
      if (arc.tail == w) col.push_back({sys.rows.cost_row_of[k][a], Rational(1)});
      if (arc.head == w) col.push_back({sys.rows.cost_row_of[k][a], Rational(-1)});
    }
  }
  return sys;
}

}  // namespace mnep
