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

// Cell enumeration by incremental insertion: every cell of the current
// arrangement is kept as a realizable sign vector plus a rational witness.
// Inserting a hyperplane extends each cell by the witness sign for free and
// probes the other two signs with an exact feasibility test, so cells of
// every dimension appear, each with an exact witness. This is quadratic-ish
// in the cell count, which is fine at the intended small dimensions.

#include "mnep/arrangement.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "mnep/linalg.hpp"
#include "mnep/simplex.hpp"

namespace mnep {

Rational LinearForm::eval(const std::vector<Rational>& point) const {
  Rational out = offset;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero() && !point[i].is_zero()) out += coeffs[i] * point[i];
  }
  return out;
}

int LinearForm::sign_at(const std::vector<Rational>& point) const {
  return eval(point).sign();
}

std::string SupportFamily::key() const {
  std::string out;
  for (const auto& class_arcs : arcs) {
    for (int a : class_arcs) {
      out += std::to_string(a);
      out += ',';
    }
    out += ';';
  }
  return out;
}

namespace {

PotentialCoords build_coords(const Instance& instance,
                             const std::vector<ClassSubgraph>& subs) {
  PotentialCoords pc;
  pc.coord_of.assign(instance.num_classes(),
                     std::vector<int>(instance.num_vertices(), -1));
  for (int k = 0; k < instance.num_classes(); ++k) {
    for (int v : subs[k].vertices) {
      if (v == instance.classes[k].origin) continue;
      pc.coord_of[k][v] = pc.dimension++;
      pc.coords.emplace_back(k, v);
    }
  }
  return pc;
}

// y_v^k - y_u^k with origin coordinates pinned to zero.
void add_difference(LinearForm& f, const PotentialCoords& pc, int k, int u,
                    int v, const Rational& scale) {
  if (pc.coord_of[k][v] >= 0) f.coeffs[pc.coord_of[k][v]] += scale;
  if (pc.coord_of[k][u] >= 0) f.coeffs[pc.coord_of[k][u]] -= scale;
}

}  // namespace

ArrangementInput build_hyperplanes(const Instance& instance) {
  const auto subs = all_subgraphs(instance);
  ArrangementInput input;
  input.coords = build_coords(instance, subs);
  const int d = input.coords.dimension;
  const int num_classes = instance.num_classes();
  const int num_arcs = instance.num_arcs();

  input.single_ref.assign(num_classes,
                          std::vector<ArrangementInput::TagRef>(num_arcs));
  input.pair_refs.assign(
      num_classes, std::vector<std::vector<ArrangementInput::TagRef>>(num_arcs));

  std::map<std::pair<std::vector<Rational>, Rational>, int> canon;
  auto intern = [&](LinearForm f) -> std::pair<int, int> {
    int lead = -1;
    for (int i = 0; i < d; ++i) {
      if (!f.coeffs[i].is_zero()) {
        lead = i;
        break;
      }
    }
    if (lead < 0) throw InternalError("hyperplane with zero normal");
    const int flip = f.coeffs[lead].sign();
    const Rational scale = Rational(1) / f.coeffs[lead];
    for (auto& c : f.coeffs) {
      if (!c.is_zero()) c *= scale;
    }
    f.offset *= scale;
    auto key = std::make_pair(f.coeffs, f.offset);
    auto it = canon.find(key);
    if (it != canon.end()) return {it->second, flip};
    const int id = static_cast<int>(input.planes.size());
    canon.emplace(std::move(key), id);
    input.planes.push_back(Hyperplane{std::move(f), {}});
    return {id, flip};
  };

  for (int k = 0; k < num_classes; ++k) {
    for (int a : subs[k].arcs) {
      const Arc& arc = instance.arcs[a];
      LinearForm f;
      f.coeffs.assign(d, Rational(0));
      add_difference(f, input.coords, k, arc.tail, arc.head, Rational(1));
      f.offset = -instance.classes[k].costs[a]->beta;
      auto [plane, flip] = intern(std::move(f));
      input.planes[plane].tags.push_back(
          {HyperplaneTag::Kind::Single, a, k, -1, flip});
      input.single_ref[k][a] = {plane, flip};
    }
  }
  for (int k = 0; k < num_classes; ++k) {
    for (int k2 = k + 1; k2 < num_classes; ++k2) {
      for (int a = 0; a < num_arcs; ++a) {
        if (!subs[k].contains_arc(a) || !subs[k2].contains_arc(a)) continue;
        const Arc& arc = instance.arcs[a];
        const ArcCost& ck = *instance.classes[k].costs[a];
        const ArcCost& ck2 = *instance.classes[k2].costs[a];
        LinearForm f;
        f.coeffs.assign(d, Rational(0));
        add_difference(f, input.coords, k, arc.tail, arc.head, ck2.alpha);
        add_difference(f, input.coords, k2, arc.tail, arc.head, -ck.alpha);
        f.offset = ck.alpha * ck2.beta - ck2.alpha * ck.beta;
        auto [plane, flip] = intern(std::move(f));
        input.planes[plane].tags.push_back(
            {HyperplaneTag::Kind::Pair, a, k, k2, flip});
        input.pair_refs[k][a].push_back({plane, flip});
        input.pair_refs[k2][a].push_back({plane, -flip});
      }
    }
  }
  return input;
}

namespace {

// Feasibility of a prefix sign vector; returns an exact witness realizing
// every sign (strictly for the nonzero ones).
std::optional<std::vector<Rational>> sign_vector_witness(
    const std::vector<Hyperplane>& planes, const std::vector<std::int8_t>& signs,
    int dimension) {
  std::vector<Constraint> cs;
  cs.reserve(signs.size());
  for (size_t i = 0; i < signs.size(); ++i) {
    const LinearForm& f = planes[i].form;
    if (signs[i] == 0) {
      cs.push_back(constraint_eq(f.coeffs, -f.offset));
    } else if (signs[i] > 0) {
      cs.push_back(constraint_gt(f.coeffs, -f.offset));
    } else {
      std::vector<Rational> neg(f.coeffs.size());
      for (size_t j = 0; j < neg.size(); ++j) neg[j] = -f.coeffs[j];
      cs.push_back(constraint_gt(std::move(neg), f.offset));
    }
  }
  return solve_constraints(dimension, cs);
}

}  // namespace

std::vector<Cell> enumerate_cells(const std::vector<Hyperplane>& planes,
                                  int dimension) {
  std::vector<Cell> cells;
  cells.push_back(Cell{{}, std::vector<Rational>(dimension)});
  for (size_t t = 0; t < planes.size(); ++t) {
    const LinearForm& f = planes[t].form;
    std::vector<Cell> additions;
    for (Cell& cell : cells) {
      const std::int8_t s0 = static_cast<std::int8_t>(f.sign_at(cell.witness));
      for (std::int8_t s : {std::int8_t(-1), std::int8_t(0), std::int8_t(1)}) {
        if (s == s0) continue;
        std::vector<std::int8_t> candidate = cell.signs;
        candidate.push_back(s);
        if (auto witness = sign_vector_witness(planes, candidate, dimension)) {
          additions.push_back(Cell{std::move(candidate), std::move(*witness)});
        }
      }
      cell.signs.push_back(s0);
    }
    for (auto& c : additions) cells.push_back(std::move(c));
  }
  return cells;
}

int cell_dimension(const std::vector<Hyperplane>& planes, const Cell& cell,
                   int dimension) {
  std::vector<const LinearForm*> zero_forms;
  for (size_t i = 0; i < cell.signs.size(); ++i) {
    if (cell.signs[i] == 0) zero_forms.push_back(&planes[i].form);
  }
  if (zero_forms.empty()) return dimension;
  Matrix normals(static_cast<int>(zero_forms.size()), dimension);
  for (int i = 0; i < static_cast<int>(zero_forms.size()); ++i) {
    for (int j = 0; j < dimension; ++j) normals.at(i, j) = zero_forms[i]->coeffs[j];
  }
  return dimension - rank(std::move(normals));
}

SupportFamily cell_supports(const ArrangementInput& input,
                            const Instance& instance, const Cell& cell) {
  if (cell.signs.size() != input.planes.size()) {
    throw std::invalid_argument("cell_supports: sign vector size mismatch");
  }
  const auto subs = all_subgraphs(instance);
  SupportFamily support;
  support.arcs.resize(instance.num_classes());
  auto on_usable_side = [&cell](const ArrangementInput::TagRef& ref) {
    return static_cast<int>(cell.signs[ref.plane]) * ref.flip >= 0;
  };
  for (int k = 0; k < instance.num_classes(); ++k) {
    for (int a : subs[k].arcs) {
      if (!on_usable_side(input.single_ref[k][a])) continue;
      bool ok = true;
      for (const auto& ref : input.pair_refs[k][a]) {
        if (!on_usable_side(ref)) {
          ok = false;
          break;
        }
      }
      if (ok) support.arcs[k].push_back(a);
    }
  }
  return support;
}

std::optional<SolutionState> support_feasibility(const Instance& instance,
                                                 const SupportFamily& support) {
  const auto subs = all_subgraphs(instance);
  const int num_classes = instance.num_classes();
  if (static_cast<int>(support.arcs.size()) != num_classes) {
    throw std::invalid_argument("support_feasibility: class count mismatch");
  }

  // Variable layout: x on supported pairs, mu on unsupported pairs, then
  // one potential per (class, vertex) with the origin dropped.
  std::vector<std::vector<int>> x_of(num_classes), mu_of(num_classes),
      pi_of(num_classes);
  std::vector<std::vector<char>> in_support(num_classes);
  int num_vars = 0;
  for (int k = 0; k < num_classes; ++k) {
    x_of[k].assign(instance.num_arcs(), -1);
    mu_of[k].assign(instance.num_arcs(), -1);
    pi_of[k].assign(instance.num_vertices(), -1);
    in_support[k].assign(instance.num_arcs(), 0);
    for (int a : support.arcs[k]) {
      if (a < 0 || a >= instance.num_arcs() || !subs[k].contains_arc(a)) {
        throw std::invalid_argument(
            "support_feasibility: support arc outside the class subgraph");
      }
      in_support[k][a] = 1;
    }
  }
  for (int k = 0; k < num_classes; ++k) {
    for (int a : subs[k].arcs) {
      if (in_support[k][a]) {
        x_of[k][a] = num_vars++;
      } else {
        mu_of[k][a] = num_vars++;
      }
    }
  }
  for (int k = 0; k < num_classes; ++k) {
    for (int v : subs[k].vertices) {
      if (v != instance.classes[k].origin) pi_of[k][v] = num_vars++;
    }
  }

  std::vector<Constraint> cs;
  for (int k = 0; k < num_classes; ++k) {
    const ClassSpec& cls = instance.classes[k];
    for (int v : subs[k].vertices) {
      if (v == cls.origin) continue;
      std::vector<Rational> row(num_vars);
      for (int a : subs[k].arcs) {
        if (x_of[k][a] < 0) continue;
        if (instance.arcs[a].tail == v) row[x_of[k][a]] += Rational(1);
        if (instance.arcs[a].head == v) row[x_of[k][a]] -= Rational(1);
      }
      Rational rhs;
      if (v == cls.destination) rhs = -cls.demand;
      cs.push_back(constraint_eq(std::move(row), std::move(rhs)));
    }
    for (int a : subs[k].arcs) {
      const Arc& arc = instance.arcs[a];
      const ArcCost& cost = *cls.costs[a];
      std::vector<Rational> row(num_vars);
      for (int k2 = 0; k2 < num_classes; ++k2) {
        if (k2 < static_cast<int>(x_of.size()) && x_of[k2][a] >= 0) {
          row[x_of[k2][a]] += cost.alpha;
        }
      }
      if (pi_of[k][arc.tail] >= 0) row[pi_of[k][arc.tail]] += Rational(1);
      if (pi_of[k][arc.head] >= 0) row[pi_of[k][arc.head]] -= Rational(1);
      if (mu_of[k][a] >= 0) row[mu_of[k][a]] -= Rational(1);
      cs.push_back(constraint_eq(std::move(row), -cost.beta));
    }
    for (int a : subs[k].arcs) {
      std::vector<Rational> row(num_vars);
      row[x_of[k][a] >= 0 ? x_of[k][a] : mu_of[k][a]] = Rational(1);
      cs.push_back(constraint_ge(std::move(row), Rational(0)));
    }
  }

  auto point = solve_constraints(num_vars, cs);
  if (!point) return std::nullopt;

  SolutionState st = SolutionState::zeros(instance);
  for (int k = 0; k < num_classes; ++k) {
    for (int a : subs[k].arcs) {
      if (x_of[k][a] >= 0) st.x[k][a] = (*point)[x_of[k][a]];
      if (mu_of[k][a] >= 0) st.mu[k][a] = (*point)[mu_of[k][a]];
    }
    for (int v : subs[k].vertices) {
      if (pi_of[k][v] >= 0) st.pi[k][v] = (*point)[pi_of[k][v]];
    }
  }
  return st;
}

ArrangementResult arrangement_solve(const Instance& instance) {
  {
    auto violations = validate_instance(instance);
    if (!violations.empty()) {
      throw std::invalid_argument("arrangement_solve: invalid instance: " +
                                  violations.front());
    }
  }
  ArrangementInput input = build_hyperplanes(instance);
  ArrangementResult result;
  result.stats.num_hyperplanes = static_cast<int>(input.planes.size());

  const std::vector<Cell> cells =
      enumerate_cells(input.planes, input.coords.dimension);
  result.stats.num_cells = static_cast<int>(cells.size());

  std::vector<SupportFamily> candidates;
  std::set<std::string> seen;
  for (const Cell& cell : cells) {
    SupportFamily s = cell_supports(input, instance, cell);
    if (seen.insert(s.key()).second) candidates.push_back(std::move(s));
  }
  result.stats.num_supports = static_cast<int>(candidates.size());

  for (const SupportFamily& support : candidates) {
    ++result.stats.supports_tested;
    if (auto state = support_feasibility(instance, support)) {
      result.state = std::move(*state);
      return result;
    }
  }
  throw InternalError(
      "arrangement_solve: no feasible support family (existence violated)");
}

}  // namespace mnep
