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

#include "mnep/instance.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace mnep {

SolutionState SolutionState::zeros(const Instance& instance) {
  SolutionState s;
  const int k = instance.num_classes();
  s.x.assign(k, std::vector<Rational>(instance.num_arcs()));
  s.mu.assign(k, std::vector<Rational>(instance.num_arcs()));
  s.pi.assign(k, std::vector<Rational>(instance.num_vertices()));
  return s;
}

ClassSubgraph reachable_subgraph(const Instance& instance, int class_id) {
  if (class_id < 0 || class_id >= instance.num_classes()) {
    throw std::invalid_argument("reachable_subgraph: bad class id");
  }
  const int nv = instance.num_vertices();
  const int na = instance.num_arcs();

  // Outgoing arcs per vertex, in arc-index order.
  std::vector<std::vector<int>> out(nv);
  for (int a = 0; a < na; ++a) {
    const Arc& arc = instance.arcs[a];
    if (arc.tail >= 0 && arc.tail < nv) out[arc.tail].push_back(a);
  }

  ClassSubgraph sub;
  sub.class_id = class_id;
  sub.has_vertex.assign(nv, 0);
  sub.has_arc.assign(na, 0);

  const int origin = instance.classes[class_id].origin;
  std::deque<int> queue{origin};
  sub.has_vertex[origin] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int a : out[u]) {
      int v = instance.arcs[a].head;
      if (!sub.has_vertex[v]) {
        sub.has_vertex[v] = 1;
        queue.push_back(v);
      }
    }
  }
  // A^k: arcs whose tail is reachable. Their heads are then reachable too.
  for (int a = 0; a < na; ++a) {
    if (sub.has_vertex[instance.arcs[a].tail]) sub.has_arc[a] = 1;
  }
  for (int v = 0; v < nv; ++v) {
    if (sub.has_vertex[v]) sub.vertices.push_back(v);
  }
  for (int a = 0; a < na; ++a) {
    if (sub.has_arc[a]) sub.arcs.push_back(a);
  }
  return sub;
}

std::vector<ClassSubgraph> all_subgraphs(const Instance& instance) {
  std::vector<ClassSubgraph> subs;
  subs.reserve(instance.classes.size());
  for (int k = 0; k < instance.num_classes(); ++k) {
    subs.push_back(reachable_subgraph(instance, k));
  }
  return subs;
}

std::vector<std::string> validate_instance(const Instance& instance) {
  std::vector<std::string> out;
  const int nv = instance.num_vertices();
  const int na = instance.num_arcs();

  std::set<std::string> names;
  for (const auto& name : instance.vertices) {
    if (!names.insert(name).second) {
      out.push_back("duplicate vertex name '" + name + "'");
    }
  }
  std::set<std::string> arc_ids;
  bool arcs_ok = true;
  for (int a = 0; a < na; ++a) {
    const Arc& arc = instance.arcs[a];
    if (!arc_ids.insert(arc.id).second) {
      out.push_back("duplicate arc id '" + arc.id + "'");
    }
    if (arc.tail < 0 || arc.tail >= nv || arc.head < 0 || arc.head >= nv) {
      out.push_back("arc '" + arc.id + "': endpoint out of range");
      arcs_ok = false;
      continue;
    }
    if (arc.tail == arc.head) {
      out.push_back("arc '" + arc.id + "': self-loops are not allowed");
      arcs_ok = false;
    }
  }
  if (instance.classes.empty()) {
    out.push_back("instance has no classes");
  }
  for (int k = 0; k < instance.num_classes(); ++k) {
    const ClassSpec& cls = instance.classes[k];
    const std::string tag = "class " + std::to_string(k);
    if (cls.origin < 0 || cls.origin >= nv || cls.destination < 0 ||
        cls.destination >= nv) {
      out.push_back(tag + ": origin or destination out of range");
      continue;
    }
    if (cls.origin == cls.destination) {
      out.push_back(tag + ": origin equals destination");
      continue;
    }
    if (cls.demand.sign() < 0) {
      out.push_back(tag + ": demand must be nonnegative");
    }
    if (static_cast<int>(cls.costs.size()) != na) {
      out.push_back(tag + ": cost table size differs from arc count");
      continue;
    }
    if (!arcs_ok) continue;
    ClassSubgraph sub = reachable_subgraph(instance, k);
    if (!sub.contains_vertex(cls.destination)) {
      out.push_back(tag + ": destination unreachable from origin");
    }
    for (int a : sub.arcs) {
      if (!cls.costs[a].has_value()) {
        out.push_back(tag + ": missing cost for reachable arc '" +
                      instance.arcs[a].id + "'");
        continue;
      }
      if (cls.costs[a]->alpha.sign() <= 0) {
        out.push_back(tag + ": alpha must be positive on arc '" +
                      instance.arcs[a].id + "'");
      }
      if (cls.costs[a]->beta.sign() < 0) {
        out.push_back(tag + ": beta must be nonnegative on arc '" +
                      instance.arcs[a].id + "'");
      }
    }
  }
  return out;
}

Rational arc_cost(const Instance& instance, int class_id, int arc,
                  const Rational& load) {
  if (class_id < 0 || class_id >= instance.num_classes()) {
    throw std::invalid_argument("arc_cost: bad class id");
  }
  ClassSubgraph sub = reachable_subgraph(instance, class_id);
  if (arc < 0 || arc >= instance.num_arcs() || !sub.contains_arc(arc)) {
    throw std::invalid_argument("arc_cost: arc not in the class subgraph");
  }
  const ArcCost& c = *instance.classes[class_id].costs[arc];
  return c.alpha * load + c.beta;
}

std::vector<Rational> aggregate_flow(const Instance& instance,
                                     const SolutionState& state) {
  std::vector<Rational> total(instance.num_arcs());
  for (const auto& xk : state.x) {
    for (int a = 0; a < instance.num_arcs(); ++a) total[a] += xk[a];
  }
  return total;
}

}  // namespace mnep
