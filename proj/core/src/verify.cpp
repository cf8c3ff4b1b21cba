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

#include "mnep/verify.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mnep/arrangement.hpp"
#include "mnep/errors.hpp"

namespace mnep {

std::vector<Rational> shortest_potentials(const Instance& instance, int class_id,
                                          const std::vector<Rational>& aggregate) {
  const ClassSubgraph sub = reachable_subgraph(instance, class_id);
  const ClassSpec& cls = instance.classes[class_id];

  std::vector<Rational> cost(instance.num_arcs());
  for (int a : sub.arcs) {
    cost[a] = cls.costs[a]->alpha * aggregate[a] + cls.costs[a]->beta;
    if (cost[a].sign() < 0) {
      throw std::invalid_argument("shortest_potentials: negative arc cost");
    }
  }

  // Bellman-Ford over the subgraph. Every vertex is reachable, so all
  // labels end up finite.
  std::vector<std::optional<Rational>> dist(instance.num_vertices());
  dist[cls.origin] = Rational(0);
  const int rounds = sub.num_vertices();
  for (int i = 0; i < rounds; ++i) {
    bool changed = false;
    for (int a : sub.arcs) {
      const Arc& arc = instance.arcs[a];
      if (!dist[arc.tail].has_value()) continue;
      Rational cand = *dist[arc.tail] + cost[a];
      if (!dist[arc.head].has_value() || cand < *dist[arc.head]) {
        dist[arc.head] = std::move(cand);
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<Rational> out(instance.num_vertices());
  for (int v : sub.vertices) out[v] = *dist[v];
  return out;
}

std::vector<int> mincost_arcs(const Instance& instance, int class_id,
                              const std::vector<Rational>& aggregate) {
  const ClassSubgraph sub = reachable_subgraph(instance, class_id);
  const ClassSpec& cls = instance.classes[class_id];
  const std::vector<Rational> pot =
      shortest_potentials(instance, class_id, aggregate);
  std::vector<int> out;
  for (int a : sub.arcs) {
    const Arc& arc = instance.arcs[a];
    const Rational cost = cls.costs[a]->alpha * aggregate[a] + cls.costs[a]->beta;
    if (pot[arc.head] - pot[arc.tail] == cost) out.push_back(a);
  }
  return out;
}

VerificationReport verify_equilibrium(const Instance& instance,
                                      const SolutionState& state) {
  VerificationReport rep;
  const int num_classes = instance.num_classes();
  const auto subs = all_subgraphs(instance);
  auto complain = [&rep](bool& flag, const std::string& msg) {
    flag = false;
    rep.violations.push_back(msg);
  };

  // (ii) componentwise nonnegativity, checked first: the potentials below
  // assume nonnegative loads.
  for (int k = 0; k < num_classes; ++k) {
    for (int a : subs[k].arcs) {
      if (state.x[k][a].sign() < 0) {
        complain(rep.nonnegativity_ok,
                 "x < 0 on arc '" + instance.arcs[a].id + "', class " +
                     std::to_string(k));
      }
    }
  }
  if (state.omega.sign() < 0) {
    complain(rep.nonnegativity_ok, "omega < 0");
  }

  // (i) flow conservation against the demand vector, all vertices.
  for (int k = 0; k < num_classes; ++k) {
    const ClassSpec& cls = instance.classes[k];
    for (int v : subs[k].vertices) {
      Rational net;
      for (int a : subs[k].arcs) {
        if (instance.arcs[a].tail == v) net += state.x[k][a];
        if (instance.arcs[a].head == v) net -= state.x[k][a];
      }
      Rational expected;
      if (v == cls.origin) expected = cls.demand;
      if (v == cls.destination) expected -= cls.demand;
      if (net != expected) {
        complain(rep.flow_conservation_ok,
                 "conservation violated at vertex '" + instance.vertices[v] +
                     "', class " + std::to_string(k));
      }
    }
    // Flow must vanish outside the subgraph.
    for (int a = 0; a < instance.num_arcs(); ++a) {
      if (!subs[k].contains_arc(a) && !state.x[k][a].is_zero()) {
        complain(rep.flow_conservation_ok,
                 "flow on unreachable arc '" + instance.arcs[a].id +
                     "', class " + std::to_string(k));
      }
    }
  }

  if (!rep.nonnegativity_ok) return rep;  // potentials undefined below zero

  // (iii) supports inside the minimum-cost arc sets, certified through
  // exact potentials.
  const std::vector<Rational> agg = aggregate_flow(instance, state);
  rep.potentials.resize(num_classes);
  for (int k = 0; k < num_classes; ++k) {
    rep.potentials[k] = shortest_potentials(instance, k, agg);
    const ClassSpec& cls = instance.classes[k];
    for (int a : subs[k].arcs) {
      if (state.x[k][a].sign() <= 0) continue;
      const Arc& arc = instance.arcs[a];
      const Rational cost = cls.costs[a]->alpha * agg[a] + cls.costs[a]->beta;
      if (rep.potentials[k][arc.head] - rep.potentials[k][arc.tail] != cost) {
        complain(rep.support_condition_ok,
                 "used arc '" + arc.id + "' is not on a minimum-cost path, class " +
                     std::to_string(k));
      }
    }
  }

  // (iv)-(v) dual checks when mu and pi are supplied.
  if (state.has_duals) {
    rep.duals_checked = true;
    for (int k = 0; k < num_classes; ++k) {
      const ClassSpec& cls = instance.classes[k];
      if (!state.pi[k][cls.origin].is_zero()) {
        complain(rep.complementarity_ok,
                 "pi at the origin is nonzero, class " + std::to_string(k));
      }
      for (int a : subs[k].arcs) {
        const Arc& arc = instance.arcs[a];
        const Rational cost = cls.costs[a]->alpha * agg[a] + cls.costs[a]->beta;
        if (cost + state.pi[k][arc.tail] - state.pi[k][arc.head] -
                state.mu[k][a] !=
            Rational(0)) {
          complain(rep.complementarity_ok,
                   "cost row violated on arc '" + arc.id + "', class " +
                       std::to_string(k));
        }
        if (state.mu[k][a].sign() < 0) {
          complain(rep.complementarity_ok,
                   "mu < 0 on arc '" + arc.id + "', class " + std::to_string(k));
        }
        if (!(state.x[k][a] * state.mu[k][a]).is_zero()) {
          complain(rep.complementarity_ok,
                   "x * mu != 0 on arc '" + arc.id + "', class " +
                       std::to_string(k));
        }
      }
    }
  }
  return rep;
}

SolutionState brute_force_solve(const Instance& instance) {
  {
    auto violations = validate_instance(instance);
    if (!violations.empty()) {
      throw std::invalid_argument("brute_force_solve: invalid instance: " +
                                  violations.front());
    }
  }
  const auto subs = all_subgraphs(instance);
  int num_pairs = 0;
  for (const auto& sub : subs) num_pairs += sub.num_arcs();
  if (num_pairs > kBruteForceMaxPairs) {
    throw SizeGuardError("brute_force_solve: more than " +
                         std::to_string(kBruteForceMaxPairs) +
                         " (class, arc) pairs");
  }

  // Pair p = (class, arc) in class-major, arc-ascending order; support
  // families are enumerated as ascending bit masks over the pairs.
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < instance.num_classes(); ++k) {
    for (int a : subs[k].arcs) pairs.emplace_back(k, a);
  }
  const std::uint64_t limit = std::uint64_t(1) << num_pairs;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    SupportFamily support;
    support.arcs.resize(instance.num_classes());
    for (int p = 0; p < num_pairs; ++p) {
      if (mask & (std::uint64_t(1) << p)) {
        support.arcs[pairs[p].first].push_back(pairs[p].second);
      }
    }
    if (auto state = support_feasibility(instance, support)) {
      return *state;
    }
  }
  throw InternalError("brute_force_solve: no feasible support family");
}

}  // namespace mnep
