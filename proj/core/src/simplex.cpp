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

#include "mnep/simplex.hpp"

#include <stdexcept>

namespace mnep {

namespace {

using Row = std::vector<Rational>;

// Tableau pivot on (row r, column j). The last column is the RHS.
void pivot(std::vector<Row>& t, std::vector<int>& basis, int r, int j) {
  Row& prow = t[r];
  const Rational inv = Rational(1) / prow[j];
  for (auto& v : prow) {
    if (!v.is_zero()) v *= inv;
  }
  for (int i = 0; i < static_cast<int>(t.size()); ++i) {
    if (i == r || t[i][j].is_zero()) continue;
    const Rational f = t[i][j];
    Row& row = t[i];
    for (size_t c = 0; c < row.size(); ++c) {
      if (!prow[c].is_zero()) row[c] -= f * prow[c];
    }
  }
  basis[r] = j;
}

// Minimizes obj . x from the current feasible basis using Bland's rule.
// Columns with eligible[j] == 0 never enter. Throws on unboundedness,
// which cannot occur for the bounded programs built below.
void bland_min(std::vector<Row>& t, std::vector<int>& basis,
               const std::vector<Rational>& obj,
               const std::vector<char>& eligible) {
  const int m = static_cast<int>(t.size());
  const int width = m == 0 ? 0 : static_cast<int>(t[0].size());
  const int rhs_col = width - 1;
  for (;;) {
    int enter = -1;
    for (int j = 0; j < rhs_col && enter < 0; ++j) {
      if (!eligible[j]) continue;
      Rational rj = obj[j];
      for (int i = 0; i < m; ++i) {
        if (!obj[basis[i]].is_zero() && !t[i][j].is_zero()) {
          rj -= obj[basis[i]] * t[i][j];
        }
      }
      if (rj.sign() < 0) enter = j;
    }
    if (enter < 0) return;  // optimal
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rational ratio = t[i][rhs_col] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (leave < 0) throw std::logic_error("simplex: unbounded objective");
    pivot(t, basis, leave, enter);
  }
}

}  // namespace

std::optional<std::vector<Rational>> solve_constraints(
    int num_vars, const std::vector<Constraint>& constraints) {
  bool has_strict = false;
  for (const auto& c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != num_vars) {
      throw std::invalid_argument("solve_constraints: bad coefficient count");
    }
    if (c.rel == Constraint::Rel::Gt) has_strict = true;
  }

  // Structural columns: y = u - w (both >= 0), then the margin variable t
  // when strict constraints exist, then one slack per inequality row.
  const int t_col = has_strict ? 2 * num_vars : -1;
  int n_struct = 2 * num_vars + (has_strict ? 1 : 0);
  int num_rows = static_cast<int>(constraints.size()) + (has_strict ? 1 : 0);
  int num_slacks = has_strict ? 1 : 0;  // slack of the t <= 1 row
  for (const auto& c : constraints) {
    if (c.rel != Constraint::Rel::Eq) ++num_slacks;
  }
  const int first_slack = n_struct;
  n_struct += num_slacks;
  const int first_artificial = n_struct;
  const int width = n_struct + num_rows + 1;  // + artificials + rhs

  std::vector<Row> t(num_rows, Row(width));
  int slack = first_slack;
  for (size_t i = 0; i < constraints.size(); ++i) {
    const Constraint& c = constraints[i];
    Row& row = t[i];
    for (int v = 0; v < num_vars; ++v) {
      row[v] = c.coeffs[v];
      row[num_vars + v] = -c.coeffs[v];
    }
    if (c.rel == Constraint::Rel::Gt) row[t_col] = Rational(-1);
    if (c.rel != Constraint::Rel::Eq) row[slack++] = Rational(-1);
    row[width - 1] = c.rhs;
  }
  if (has_strict) {
    Row& row = t[num_rows - 1];
    row[t_col] = Rational(1);
    row[slack++] = Rational(1);
    row[width - 1] = Rational(1);
  }

  // Phase 1: artificial basis, minimize the sum of artificials.
  std::vector<int> basis(num_rows);
  for (int i = 0; i < num_rows; ++i) {
    if (t[i][width - 1].sign() < 0) {
      for (auto& v : t[i]) v = -v;
    }
    t[i][first_artificial + i] = Rational(1);
    basis[i] = first_artificial + i;
  }
  std::vector<Rational> obj1(width - 1);
  for (int j = first_artificial; j < width - 1; ++j) obj1[j] = Rational(1);
  std::vector<char> all_eligible(width - 1, 1);
  bland_min(t, basis, obj1, all_eligible);

  Rational infeasibility;
  for (int i = 0; i < num_rows; ++i) {
    if (basis[i] >= first_artificial) infeasibility += t[i][width - 1];
  }
  if (!infeasibility.is_zero()) return std::nullopt;

  // Drive basic artificials out; rows that cannot pivot are redundant.
  std::vector<int> keep;
  for (int i = 0; i < num_rows; ++i) {
    if (basis[i] < first_artificial) {
      keep.push_back(i);
      continue;
    }
    int col = -1;
    for (int j = 0; j < first_artificial && col < 0; ++j) {
      if (!t[i][j].is_zero()) col = j;
    }
    if (col >= 0) {
      pivot(t, basis, i, col);
      keep.push_back(i);
    }
  }
  if (static_cast<int>(keep.size()) != num_rows) {
    std::vector<Row> t2;
    std::vector<int> basis2;
    for (int i : keep) {
      t2.push_back(std::move(t[i]));
      basis2.push_back(basis[i]);
    }
    t = std::move(t2);
    basis = std::move(basis2);
    num_rows = static_cast<int>(t.size());
  }

  Rational t_value;
  if (has_strict) {
    // Phase 2: maximize the margin t (bounded above by 1).
    std::vector<Rational> obj2(width - 1);
    obj2[t_col] = Rational(-1);
    std::vector<char> eligible(width - 1, 0);
    for (int j = 0; j < first_artificial; ++j) eligible[j] = 1;
    bland_min(t, basis, obj2, eligible);
    for (int i = 0; i < num_rows; ++i) {
      if (basis[i] == t_col) t_value = t[i][width - 1];
    }
    if (t_value.sign() <= 0) return std::nullopt;
  }

  std::vector<Rational> value(first_artificial);
  for (int i = 0; i < num_rows; ++i) {
    if (basis[i] < first_artificial) value[basis[i]] = t[i][width - 1];
  }
  std::vector<Rational> y(num_vars);
  for (int v = 0; v < num_vars; ++v) y[v] = value[v] - value[num_vars + v];
  return y;
}

}  // namespace mnep
