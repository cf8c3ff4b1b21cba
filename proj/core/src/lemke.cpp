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

// Pivoting solver for the augmented complementarity program.
//
// The engine keeps an exact tableau T = A_B^{-1} [rhs | diag(sigma)] where
// A_B is the square bordered basis matrix (signed basis columns plus the pi
// block). Column 0 holds the basic values; column 1+i holds the coefficient
// of the i-th symbolic perturbation epsilon^(i+1) of the right-hand side.
// Row i of the RHS is perturbed with sign sigma_i: -1 on conservation rows,
// +1 on cost rows. That sign choice makes the tree-flow initial basis
// lexicographically feasible even when tree arcs carry zero flow, so the
// anti-cycling argument applies from the first pivot.
//
// All comparisons in the ratio test are lexicographic over a tableau row,
// which is exactly the basic value followed by the corresponding row of the
// basis inverse. No epsilon is ever materialized.
//
// A pivot replaces one basis column and rank-1-updates the whole tableau in
// O(m^2) exact operations; the initial tableau is built in O(m^2) overall
// from three linear-time passes per column along the arborescences, since
// the initial bordered matrix is block-triangular with respect to the
// trees.

#include "mnep/lemke.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace mnep {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Final tie-break order (class, arc, kind x < mu < omega). Unreachable when
// perturbation rows differ, which they always do for distinct slots; kept
// for determinism.
std::tuple<int, int, int> tie_key(const LcpSystem& sys, int var) {
  if (sys.idx.is_omega(var)) return {INT_MAX, INT_MAX, 2};
  auto [k, a] = sys.idx.pairs[sys.idx.pair_of(var)];
  return {k, a, sys.idx.is_x(var) ? 0 : 1};
}

class Tableau {
 public:
  // Initial tableau at the basis {x on tree arcs} + {mu off trees} + pi.
  Tableau(const LcpSystem& sys, const Arborescences& arbs) : sys_(&sys) {
    m_ = sys.num_rows();
    const IndexSets& idx = sys.idx;
    slot_var_.reserve(m_);
    x_slot_of_pair_.assign(idx.num_pairs, -1);
    mu_slot_of_pair_.assign(idx.num_pairs, -1);
    for (int p = 0; p < idx.num_pairs; ++p) {
      auto [k, a] = idx.pairs[p];
      if (arbs.trees[k].in_tree[a]) {
        x_slot_of_pair_[p] = static_cast<int>(slot_var_.size());
        slot_var_.push_back(idx.x_var(p));
      }
    }
    for (int p = 0; p < idx.num_pairs; ++p) {
      auto [k, a] = idx.pairs[p];
      if (!arbs.trees[k].in_tree[a]) {
        mu_slot_of_pair_[p] = static_cast<int>(slot_var_.size());
        slot_var_.push_back(idx.mu_var(p));
      }
    }
    pi_slot_base_ = static_cast<int>(slot_var_.size());
    for (int r = 0; r < sys.rows.num_cons; ++r) {
      slot_var_.push_back(sys.pi_var(r));
    }
    if (static_cast<int>(slot_var_.size()) != m_) {
      throw InternalError("tableau: slot count mismatch");
    }
    rebuild_var_slot();

    // Tree arcs leaving each vertex, per class, for the flow pass.
    const Instance& inst = sys.instance;
    tree_out_.assign(inst.num_classes(),
                     std::vector<std::vector<int>>(inst.num_vertices()));
    for (int k = 0; k < inst.num_classes(); ++k) {
      for (int a : arbs.trees[k].arcs) {
        tree_out_[k][inst.arcs[a].tail].push_back(a);
      }
    }

    t_.assign(m_, std::vector<Rational>(m_ + 1));
    std::vector<Rational> rhs_cons(sys.rows.num_cons), rhs_cost(sys.rows.num_cost);
    std::vector<Rational> column(m_);
    for (int col = 0; col <= m_; ++col) {
      for (auto& v : rhs_cons) v = Rational(0);
      for (auto& v : rhs_cost) v = Rational(0);
      if (col == 0) {
        for (int r = 0; r < sys.rows.num_cons; ++r) rhs_cons[r] = sys.rhs[r];
        for (int r = 0; r < sys.rows.num_cost; ++r) {
          rhs_cost[r] = sys.rhs[sys.rows.num_cons + r];
        }
      } else {
        int row = col - 1;
        if (row < sys.rows.num_cons) {
          rhs_cons[row] = Rational(sigma(row));
        } else {
          rhs_cost[row - sys.rows.num_cons] = Rational(sigma(row));
        }
      }
      solve_structured(arbs, rhs_cons, rhs_cost, column);
      for (int j = 0; j < m_; ++j) {
        if (!column[j].is_zero()) t_[j][col] = column[j];
      }
    }
  }

  // Generic tableau at an arbitrary basis, by dense exact elimination.
  Tableau(const LcpSystem& sys, const Basis& basis) : sys_(&sys) {
    m_ = sys.num_rows();
    if (static_cast<int>(basis.vars.size()) != sys.idx.num_pairs) {
      throw NotABasisError("basis cardinality must equal the pair count");
    }
    slot_var_ = basis.vars;
    pi_slot_base_ = static_cast<int>(slot_var_.size());
    for (int r = 0; r < sys.rows.num_cons; ++r) slot_var_.push_back(sys.pi_var(r));
    rebuild_var_slot();

    Matrix a(m_, m_);
    for (int j = 0; j < m_; ++j) {
      for (const auto& entry : sys.column_for_var(slot_var_[j])) {
        a.at(entry.row, j) = entry.value;
      }
    }
    Matrix rhs(m_, m_ + 1);
    for (int i = 0; i < m_; ++i) {
      rhs.at(i, 0) = sys.rhs[i];
      rhs.at(i, 1 + i) = Rational(sigma(i));
    }
    auto solved = solve_linear_multi(std::move(a), std::move(rhs));
    if (!solved) throw NotABasisError("singular bordered matrix");
    t_.assign(m_, std::vector<Rational>(m_ + 1));
    for (int j = 0; j < m_; ++j) {
      for (int c = 0; c <= m_; ++c) t_[j][c] = std::move(solved->at(j, c));
    }
  }

  int num_slots() const { return m_; }
  int var_at(int slot) const { return slot_var_[slot]; }
  int slot_of(int var) const { return var_slot_[var]; }
  bool is_signed_slot(int slot) const {
    return slot_var_[slot] <= sys_->idx.omega_var();
  }
  const Rational& value(int slot) const { return t_[slot][0]; }

  // d = A_B^{-1} (column of `var`); z(theta) = z - theta d along the ray
  // where `var` enters with value theta.
  std::vector<Rational> direction(int var) const {
    std::vector<Rational> d(m_);
    for (const auto& entry : sys_->column_for_var(var)) {
      const int col = 1 + entry.row;
      const bool flip = sigma(entry.row) < 0;
      const Rational scaled = flip ? -entry.value : entry.value;
      for (int j = 0; j < m_; ++j) {
        if (!t_[j][col].is_zero()) d[j] += t_[j][col] * scaled;
      }
    }
    return d;
  }

  // Lexicographic ratio test. positive=true: the usual blocking test over
  // signed slots with d > 0 (smallest T[j]/d_j). positive=false: the
  // drive-to-feasibility rule used once at initialization, over d < 0
  // (lexicographically smallest T[j]/|d_j|). Returns -1 when no candidate.
  int ratio_test(const std::vector<Rational>& d, bool positive) const {
    int best = -1;
    Rational best_abs;
    for (int j = 0; j < m_; ++j) {
      if (!is_signed_slot(j)) continue;
      const int sg = d[j].sign();
      if (positive ? sg <= 0 : sg >= 0) continue;
      Rational dj_abs = abs(d[j]);
      if (best < 0) {
        best = j;
        best_abs = std::move(dj_abs);
        continue;
      }
      const int cmp = lex_compare(j, dj_abs, best, best_abs);
      if (cmp < 0 ||
          (cmp == 0 && tie_key(*sys_, slot_var_[j]) < tie_key(*sys_, slot_var_[best]))) {
        best = j;
        best_abs = std::move(dj_abs);
      }
    }
    return best;
  }

  // Rank-1 update: `entering` replaces the variable in slot p.
  void pivot(int p, int entering, const std::vector<Rational>& d) {
    const Rational& dp = d[p];
    if (dp.is_zero()) throw InternalError("pivot on zero direction entry");
    std::vector<Rational>& prow = t_[p];
    mpq_class tmp;
    for (int j = 0; j < m_; ++j) {
      if (j == p || d[j].is_zero()) continue;
      const Rational ratio = d[j] / dp;
      std::vector<Rational>& row = t_[j];
      for (int c = 0; c <= m_; ++c) {
        if (prow[c].is_zero()) continue;
        tmp = ratio.mpq() * prow[c].mpq();
        row[c].mpq() -= tmp;
      }
    }
    const Rational inv = Rational(1) / dp;
    for (int c = 0; c <= m_; ++c) {
      if (!prow[c].is_zero()) prow[c] *= inv;
    }
    var_slot_[slot_var_[p]] = -1;
    slot_var_[p] = entering;
    var_slot_[entering] = p;
  }

  Basis basis() const {
    Basis b;
    for (int j = 0; j < m_; ++j) {
      if (is_signed_slot(j)) b.vars.push_back(slot_var_[j]);
    }
    std::sort(b.vars.begin(), b.vars.end());
    return b;
  }

  SolutionState extract() const {
    const LcpSystem& sys = *sys_;
    SolutionState st = SolutionState::zeros(sys.instance);
    for (int j = 0; j < m_; ++j) {
      const int var = slot_var_[j];
      const Rational& v = t_[j][0];
      if (sys.idx.is_x(var)) {
        auto [k, a] = sys.idx.pairs[var];
        st.x[k][a] = v;
      } else if (sys.idx.is_mu(var)) {
        auto [k, a] = sys.idx.pairs[var - sys.idx.num_pairs];
        st.mu[k][a] = v;
      } else if (sys.idx.is_omega(var)) {
        st.omega = v;
      } else {
        auto [k, w] = sys.rows.cons_rows[var - sys.idx.num_signed_vars()];
        st.pi[k][w] = v;
      }
    }
    return st;
  }

  bool plain_feasible() const {
    for (int j = 0; j < m_; ++j) {
      if (is_signed_slot(j) && t_[j][0].sign() < 0) return false;
    }
    return true;
  }

  bool lex_feasible() const {
    for (int j = 0; j < m_; ++j) {
      if (!is_signed_slot(j)) continue;
      int first = 0;
      for (int c = 0; c <= m_; ++c) {
        first = t_[j][c].sign();
        if (first != 0) break;
      }
      if (first <= 0) return false;
    }
    return true;
  }

  bool complementary() const {
    std::vector<char> seen(sys_->idx.num_pairs, 0);
    for (int j = 0; j < m_; ++j) {
      const int var = slot_var_[j];
      if (!is_signed_slot(j) || sys_->idx.is_omega(var)) continue;
      const int p = sys_->idx.pair_of(var);
      if (seen[p]) return false;
      seen[p] = 1;
    }
    return true;
  }

 private:
  int sigma(int row) const { return row < sys_->rows.num_cons ? -1 : 1; }

  void rebuild_var_slot() {
    var_slot_.assign(sys_->num_vars(), -1);
    for (int j = 0; j < static_cast<int>(slot_var_.size()); ++j) {
      var_slot_[slot_var_[j]] = j;
    }
  }

  // Compares T[j1]/a1 with T[j2]/a2 lexicographically (a1, a2 > 0).
  int lex_compare(int j1, const Rational& a1, int j2, const Rational& a2) const {
    for (int c = 0; c <= m_; ++c) {
      const Rational& u = t_[j1][c];
      const Rational& v = t_[j2][c];
      if (u.is_zero() && v.is_zero()) continue;
      const Rational lhs = u * a2;
      const Rational rhs = v * a1;
      if (lhs != rhs) return lhs < rhs ? -1 : 1;
    }
    return 0;
  }

  // Solves the initial bordered system for one right-hand side. The basis
  // is block-triangular along the arborescences: tree flows from the
  // conservation rows (reverse BFS), then potentials along tree arcs
  // (forward BFS), then slacks on the non-tree cost rows. Results are
  // written per slot into `out`.
  void solve_structured(const Arborescences& arbs,
                        const std::vector<Rational>& rhs_cons,
                        const std::vector<Rational>& rhs_cost,
                        std::vector<Rational>& out) const {
    const LcpSystem& sys = *sys_;
    const Instance& inst = sys.instance;
    const int num_classes = inst.num_classes();

    std::vector<Rational> agg(inst.num_arcs());
    std::vector<std::vector<Rational>> x(num_classes), pi(num_classes);

    for (int k = 0; k < num_classes; ++k) {
      const auto& tree = arbs.trees[k];
      const int origin = inst.classes[k].origin;
      x[k].assign(inst.num_arcs(), Rational(0));
      for (auto it = tree.bfs_vertices.rbegin(); it != tree.bfs_vertices.rend();
           ++it) {
        const int v = *it;
        if (v == origin) continue;
        Rational val = -rhs_cons[sys.rows.cons_row_of[k][v]];
        for (int a : tree_out_[k][v]) val += x[k][a];
        const int pa = tree.parent_arc[v];
        agg[pa] += val;
        x[k][pa] = std::move(val);
      }
    }
    for (int k = 0; k < num_classes; ++k) {
      const auto& tree = arbs.trees[k];
      const int origin = inst.classes[k].origin;
      pi[k].assign(inst.num_vertices(), Rational(0));
      for (int v : tree.bfs_vertices) {
        if (v == origin) continue;
        const int a = tree.parent_arc[v];
        const int u = inst.arcs[a].tail;
        Rational val = inst.classes[k].costs[a]->alpha * agg[a] -
                       rhs_cost[sys.rows.cost_row_of[k][a] - sys.rows.num_cons];
        if (u != origin) val += pi[k][u];
        pi[k][v] = std::move(val);
      }
    }
    for (int p = 0; p < sys.idx.num_pairs; ++p) {
      auto [k, a] = sys.idx.pairs[p];
      if (x_slot_of_pair_[p] >= 0) {
        out[x_slot_of_pair_[p]] = x[k][a];
        continue;
      }
      const Arc& arc = inst.arcs[a];
      const int origin = inst.classes[k].origin;
      Rational val = inst.classes[k].costs[a]->alpha * agg[a] -
                     rhs_cost[sys.rows.cost_row_of[k][a] - sys.rows.num_cons];
      if (arc.tail != origin) val += pi[k][arc.tail];
      if (arc.head != origin) val -= pi[k][arc.head];
      out[mu_slot_of_pair_[p]] = std::move(val);
    }
    for (int r = 0; r < sys.rows.num_cons; ++r) {
      auto [k, v] = sys.rows.cons_rows[r];
      out[pi_slot_base_ + r] = pi[k][v];
    }
  }

  const LcpSystem* sys_;
  int m_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> slot_var_;
  std::vector<int> var_slot_;
  std::vector<int> x_slot_of_pair_, mu_slot_of_pair_;
  int pi_slot_base_ = 0;
  std::vector<std::vector<std::vector<int>>> tree_out_;  // [class][vertex]
};

int partner(const IndexSets& idx, int var) {
  if (idx.is_x(var)) return idx.mu_var(idx.pair_of(var));
  if (idx.is_mu(var)) return idx.x_var(idx.pair_of(var));
  throw std::invalid_argument("partner: not an x/mu index");
}

struct InitState {
  Tableau tableau;
  bool solved;
  int left_mu = -1;  // mu index that left when omega entered
};

// Lemma-style initialization: if every non-tree reduced cost is
// nonnegative at the tree solution, the system is already solved with
// omega = 0. Otherwise omega enters and the lexicographically most
// negative slack leaves.
InitState make_initial(const LcpSystem& sys, const Arborescences& arbs) {
  InitState st{Tableau(sys, arbs), true, -1};
  bool negative = false;
  for (int j = 0; j < st.tableau.num_slots(); ++j) {
    if (!st.tableau.is_signed_slot(j)) continue;
    const int sg = st.tableau.value(j).sign();
    if (sg < 0) {
      if (sys.idx.is_x(st.tableau.var_at(j))) {
        throw InternalError("negative tree flow at initialization");
      }
      negative = true;
      break;
    }
  }
  if (!negative) return st;

  st.solved = false;
  const int omega = sys.idx.omega_var();
  const std::vector<Rational> d = st.tableau.direction(omega);
  const int p = st.tableau.ratio_test(d, /*positive=*/false);
  if (p < 0) throw InternalError("initialization found no entering row");
  st.left_mu = st.tableau.var_at(p);
  if (!sys.idx.is_mu(st.left_mu)) {
    throw InternalError("initialization must drop a mu index");
  }
  st.tableau.pivot(p, omega, d);
  return st;
}

}  // namespace

bool Basis::contains(int var) const {
  return std::binary_search(vars.begin(), vars.end(), var);
}

std::uint64_t Basis::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (int v : vars) {
    h ^= static_cast<std::uint64_t>(v) + 1;
    h *= 1099511628211ull;
  }
  return h;
}

Arborescences build_arborescences(const Instance& instance,
                                  const std::vector<ClassSubgraph>& subgraphs) {
  Arborescences arbs;
  arbs.trees.resize(instance.num_classes());
  for (int k = 0; k < instance.num_classes(); ++k) {
    const ClassSubgraph& sub = subgraphs[k];
    auto& tree = arbs.trees[k];
    tree.parent_arc.assign(instance.num_vertices(), -1);
    tree.in_tree.assign(instance.num_arcs(), 0);

    std::vector<std::vector<int>> out(instance.num_vertices());
    for (int a : sub.arcs) out[instance.arcs[a].tail].push_back(a);

    const int origin = instance.classes[k].origin;
    std::vector<char> visited(instance.num_vertices(), 0);
    std::deque<int> queue{origin};
    visited[origin] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      tree.bfs_vertices.push_back(u);
      for (int a : out[u]) {
        const int v = instance.arcs[a].head;
        if (visited[v]) continue;
        visited[v] = 1;
        tree.parent_arc[v] = a;
        tree.in_tree[a] = 1;
        queue.push_back(v);
      }
    }
    for (int a : sub.arcs) {
      if (tree.in_tree[a]) tree.arcs.push_back(a);
    }
    if (static_cast<int>(tree.arcs.size()) != sub.num_vertices() - 1) {
      throw InternalError("arborescence size mismatch");
    }
  }
  return arbs;
}

std::vector<Rational> covering_vector(const IndexSets& idx,
                                      const Arborescences& arbs) {
  std::vector<Rational> e(idx.num_pairs);
  for (int p = 0; p < idx.num_pairs; ++p) {
    auto [k, a] = idx.pairs[p];
    if (!arbs.trees[k].in_tree[a]) e[p] = Rational(1);
  }
  return e;
}

InitialBasis initial_basis(const LcpSystem& system, const Arborescences& arbs) {
  InitState st = make_initial(system, arbs);
  InitialBasis out;
  out.solved = st.solved;
  out.basis = st.tableau.basis();
  out.state = st.tableau.extract();
  return out;
}

SolutionState basic_solution(const LcpSystem& system, const Basis& basis) {
  if (static_cast<int>(basis.vars.size()) != system.idx.num_pairs) {
    throw NotABasisError("basis cardinality must equal the pair count");
  }
  const int m = system.num_rows();
  Matrix a(m, m);
  std::vector<int> slot_var = basis.vars;
  for (int r = 0; r < system.rows.num_cons; ++r) slot_var.push_back(system.pi_var(r));
  for (int j = 0; j < m; ++j) {
    for (const auto& entry : system.column_for_var(slot_var[j])) {
      a.at(entry.row, j) = entry.value;
    }
  }
  auto solved = solve_linear(std::move(a), system.rhs);
  if (!solved) throw NotABasisError("singular bordered matrix");

  SolutionState st = SolutionState::zeros(system.instance);
  for (int j = 0; j < m; ++j) {
    const int var = slot_var[j];
    if (system.idx.is_x(var)) {
      auto [k, arc] = system.idx.pairs[var];
      st.x[k][arc] = (*solved)[j];
    } else if (system.idx.is_mu(var)) {
      auto [k, arc] = system.idx.pairs[var - system.idx.num_pairs];
      st.mu[k][arc] = (*solved)[j];
    } else if (system.idx.is_omega(var)) {
      st.omega = (*solved)[j];
    } else {
      auto [k, w] = system.rows.cons_rows[var - system.idx.num_signed_vars()];
      st.pi[k][w] = (*solved)[j];
    }
  }
  return st;
}

std::optional<std::pair<int, int>> twin_indices(const IndexSets& idx,
                                                const Basis& basis) {
  std::vector<char> has_x(idx.num_pairs, 0), has_mu(idx.num_pairs, 0);
  bool has_omega = false;
  for (int var : basis.vars) {
    if (idx.is_x(var)) {
      has_x[var] = 1;
    } else if (idx.is_mu(var)) {
      has_mu[idx.pair_of(var)] = 1;
    } else if (idx.is_omega(var)) {
      has_omega = true;
    } else {
      throw std::invalid_argument("twin_indices: non-signed index in basis");
    }
  }
  int empty_pair = -1;
  for (int p = 0; p < idx.num_pairs; ++p) {
    if (has_x[p] && has_mu[p]) {
      throw std::invalid_argument("twin_indices: basis is not complementary");
    }
    if (!has_x[p] && !has_mu[p]) {
      if (empty_pair >= 0) {
        throw std::invalid_argument("twin_indices: multiple uncovered pairs");
      }
      empty_pair = p;
    }
  }
  if (!has_omega) return std::nullopt;
  if (empty_pair < 0) {
    throw std::invalid_argument("twin_indices: no uncovered pair with omega basic");
  }
  return std::make_pair(idx.x_var(empty_pair), idx.mu_var(empty_pair));
}

int entering_index(const IndexSets& idx, const Basis& basis, int just_left) {
  auto twins = twin_indices(idx, basis);
  if (!twins || (just_left != twins->first && just_left != twins->second)) {
    throw std::invalid_argument("entering_index: not a twin index");
  }
  return just_left == twins->first ? twins->second : twins->first;
}

std::pair<int, Rational> leaving_index(const LcpSystem& system,
                                       const Basis& basis, int entering) {
  if (basis.contains(entering)) {
    throw std::invalid_argument("leaving_index: entering index already basic");
  }
  Tableau tab(system, basis);
  const std::vector<Rational> d = tab.direction(entering);
  const int p = tab.ratio_test(d, /*positive=*/true);
  if (p < 0) {
    throw RayError("leaving_index: no blocking variable (infinite ray)");
  }
  return {tab.var_at(p), tab.value(p) / d[p]};
}

LemkeResult lemke_solve(const Instance& instance, const LemkeOptions& opts) {
  {
    auto violations = validate_instance(instance);
    if (!violations.empty()) {
      throw std::invalid_argument("lemke_solve: invalid instance: " +
                                  violations.front());
    }
  }
  const auto subgraphs = all_subgraphs(instance);
  const IndexSets idx = build_index_sets(instance, subgraphs);
  const Arborescences arbs = build_arborescences(instance, subgraphs);
  const LcpSystem system = assemble_lcp(instance, covering_vector(idx, arbs));

  LemkeResult result;
  PivotTrace& trace = result.trace;

  const auto t_setup = Clock::now();
  InitState st = make_initial(system, arbs);
  Tableau& tab = st.tableau;
  trace.setup_seconds = seconds_since(t_setup);

  std::set<std::vector<int>> visited;
  visited.insert(tab.basis().vars);

  if (!st.solved) {
    const auto t_pivot = Clock::now();
    const int omega = system.idx.omega_var();
    int just_left = st.left_mu;
    for (;;) {
      const int entering = partner(system.idx, just_left);
      const std::vector<Rational> d = tab.direction(entering);
      const int p = tab.ratio_test(d, /*positive=*/true);
      if (p < 0) {
        throw RayError("lemke_solve: no blocking variable (secondary ray)");
      }
      const int leaving = tab.var_at(p);
      tab.pivot(p, entering, d);

      const Basis b = tab.basis();
      trace.steps.push_back({entering, leaving, b.hash()});
      if (!visited.insert(b.vars).second) {
        throw InternalError("lemke_solve: basis revisited");
      }
      if (!tab.plain_feasible()) {
        throw InternalError("lemke_solve: infeasible basis reached");
      }
      if (static_cast<int>(b.vars.size()) != system.idx.num_pairs) {
        throw InternalError("lemke_solve: basis cardinality changed");
      }
      if (opts.paranoid) {
        if (!tab.complementary()) {
          throw InternalError("lemke_solve: complementarity lost");
        }
        if (!tab.lex_feasible()) {
          throw InternalError("lemke_solve: lexicographic feasibility lost");
        }
      }
      if (leaving == omega) break;
      just_left = leaving;
    }
    trace.pivot_seconds = seconds_since(t_pivot);
  } else {
    trace.solved_at_init = true;
  }

  const auto t_extract = Clock::now();
  result.state = tab.extract();
  result.final_basis = tab.basis();
  trace.extract_seconds = seconds_since(t_extract);

  if (!result.state.omega.is_zero()) {
    throw InternalError("lemke_solve: terminated with nonzero omega");
  }
  return result;
}

}  // namespace mnep
