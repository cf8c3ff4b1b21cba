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

#include "mnep/cli/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace mnep::cli {

namespace {

using nlohmann::json;

Rational parse_number(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string");
}

const json& require(const json& j, const char* field, const std::string& where) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw ParseError(where + ": missing field '" + field + "'");
  }
  return *it;
}

std::string require_string(const json& j, const char* field,
                           const std::string& where) {
  const json& f = require(j, field, where);
  if (!f.is_string()) {
    throw ParseError(where + ": field '" + field + "' must be a string");
  }
  return f.get<std::string>();
}

json parse_document(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError(std::string(what) + ": invalid JSON");
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

LoadedInstance parse_instance_text(const std::string& text) {
  const json j = parse_document(text, "instance");
  LoadedInstance loaded;
  Instance& inst = loaded.instance;

  const json& vertices = require(j, "vertices", "instance");
  if (!vertices.is_array()) throw ParseError("instance: 'vertices' must be an array");
  std::map<std::string, int> vertex_of;
  for (const auto& v : vertices) {
    if (!v.is_string()) throw ParseError("instance: vertex names must be strings");
    const std::string name = v.get<std::string>();
    if (!vertex_of.emplace(name, inst.num_vertices()).second) {
      throw ParseError("instance: duplicate vertex '" + name + "'");
    }
    inst.vertices.push_back(name);
  }
  auto vertex_index = [&vertex_of](const std::string& name,
                                   const std::string& where) {
    auto it = vertex_of.find(name);
    if (it == vertex_of.end()) {
      throw ParseError(where + ": unknown vertex '" + name + "'");
    }
    return it->second;
  };

  const json& arcs = require(j, "arcs", "instance");
  if (!arcs.is_array()) throw ParseError("instance: 'arcs' must be an array");
  std::map<std::string, int> arc_of;
  for (const auto& a : arcs) {
    const std::string where = "arc " + std::to_string(inst.num_arcs());
    Arc arc;
    arc.id = require_string(a, "id", where);
    arc.tail = vertex_index(require_string(a, "tail", where), where);
    arc.head = vertex_index(require_string(a, "head", where), where);
    if (!arc_of.emplace(arc.id, inst.num_arcs()).second) {
      throw ParseError("instance: duplicate arc id '" + arc.id + "'");
    }
    inst.arcs.push_back(std::move(arc));
  }

  const json& classes = require(j, "classes", "instance");
  if (!classes.is_array()) throw ParseError("instance: 'classes' must be an array");
  for (const auto& c : classes) {
    const std::string where = "class " + std::to_string(inst.num_classes());
    ClassSpec cls;
    cls.origin = vertex_index(require_string(c, "origin", where), where);
    cls.destination = vertex_index(require_string(c, "destination", where), where);
    cls.demand = parse_number(require(c, "demand", where), where + ": demand");
    cls.costs.assign(inst.num_arcs(), std::nullopt);
    const json& costs = require(c, "costs", where);
    if (!costs.is_object()) throw ParseError(where + ": 'costs' must be an object");
    for (const auto& [arc_id, entry] : costs.items()) {
      auto it = arc_of.find(arc_id);
      if (it == arc_of.end()) {
        throw ParseError(where + ": cost for unknown arc '" + arc_id + "'");
      }
      ArcCost cost;
      cost.alpha = parse_number(require(entry, "alpha", where),
                                where + ": alpha of '" + arc_id + "'");
      cost.beta = parse_number(require(entry, "beta", where),
                               where + ": beta of '" + arc_id + "'");
      cls.costs[it->second] = std::move(cost);
    }
    inst.classes.push_back(std::move(cls));
  }

  // Cost entries on unreachable arcs are legal but inert.
  for (int k = 0; k < inst.num_classes(); ++k) {
    if (inst.classes[k].origin < 0) continue;
    const ClassSubgraph sub = reachable_subgraph(inst, k);
    for (int a = 0; a < inst.num_arcs(); ++a) {
      if (inst.classes[k].costs[a].has_value() && !sub.contains_arc(a)) {
        loaded.warnings.push_back("class " + std::to_string(k) +
                                  ": cost for unreachable arc '" +
                                  inst.arcs[a].id + "' is ignored");
      }
    }
  }
  return loaded;
}

LoadedInstance read_instance(const std::string& path) {
  return parse_instance_text(read_file(path));
}

std::string instance_to_text(const Instance& instance) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : instance.vertices) j["vertices"].push_back(v);
  j["arcs"] = json::array();
  for (const auto& a : instance.arcs) {
    j["arcs"].push_back({{"id", a.id},
                         {"tail", instance.vertices[a.tail]},
                         {"head", instance.vertices[a.head]}});
  }
  j["classes"] = json::array();
  for (const auto& c : instance.classes) {
    json costs = json::object();
    for (int a = 0; a < instance.num_arcs(); ++a) {
      if (!c.costs[a].has_value()) continue;
      costs[instance.arcs[a].id] = {{"alpha", c.costs[a]->alpha.str()},
                                    {"beta", c.costs[a]->beta.str()}};
    }
    j["classes"].push_back({{"origin", instance.vertices[c.origin]},
                            {"destination", instance.vertices[c.destination]},
                            {"demand", c.demand.str()},
                            {"costs", std::move(costs)}});
  }
  return j.dump(2) + "\n";
}

void write_instance(const std::string& path, const Instance& instance) {
  write_file(path, instance_to_text(instance));
}

SolutionDocument parse_solution_text(const std::string& text,
                                     const Instance& instance) {
  const json j = parse_document(text, "solution");
  SolutionDocument doc;
  doc.state = SolutionState::zeros(instance);

  std::map<std::string, int> arc_of, vertex_of;
  for (int a = 0; a < instance.num_arcs(); ++a) arc_of[instance.arcs[a].id] = a;
  for (int v = 0; v < instance.num_vertices(); ++v) {
    vertex_of[instance.vertices[v]] = v;
  }

  if (auto it = j.find("omega"); it != j.end()) {
    doc.state.omega = parse_number(*it, "solution: omega");
  }
  const json& classes = require(j, "classes", "solution");
  if (!classes.is_array() ||
      static_cast<int>(classes.size()) != instance.num_classes()) {
    throw ParseError("solution: 'classes' must list one entry per class");
  }
  bool has_duals = true;
  for (int k = 0; k < instance.num_classes(); ++k) {
    const json& c = classes[k];
    const std::string where = "solution class " + std::to_string(k);
    const json& x = require(c, "x", where);
    if (!x.is_object()) throw ParseError(where + ": 'x' must be an object");
    for (const auto& [arc_id, value] : x.items()) {
      auto it = arc_of.find(arc_id);
      if (it == arc_of.end()) {
        throw ParseError(where + ": unknown arc '" + arc_id + "'");
      }
      doc.state.x[k][it->second] = parse_number(value, where + ": x");
    }
    if (c.find("mu") == c.end() || c.find("pi") == c.end()) {
      has_duals = false;
      continue;
    }
    for (const auto& [arc_id, value] : c["mu"].items()) {
      auto it = arc_of.find(arc_id);
      if (it == arc_of.end()) {
        throw ParseError(where + ": unknown arc '" + arc_id + "'");
      }
      doc.state.mu[k][it->second] = parse_number(value, where + ": mu");
    }
    for (const auto& [vertex, value] : c["pi"].items()) {
      auto it = vertex_of.find(vertex);
      if (it == vertex_of.end()) {
        throw ParseError(where + ": unknown vertex '" + vertex + "'");
      }
      doc.state.pi[k][it->second] = parse_number(value, where + ": pi");
    }
  }
  doc.state.has_duals = has_duals;

  if (auto it = j.find("meta"); it != j.end() && it->is_object()) {
    if (auto f = it->find("algorithm"); f != it->end() && f->is_string()) {
      doc.meta.algorithm = f->get<std::string>();
    }
    if (auto f = it->find("pivots"); f != it->end() && f->is_number_integer()) {
      doc.meta.pivots = f->get<int>();
    }
    if (auto f = it->find("elapsed_seconds"); f != it->end() && f->is_number()) {
      doc.meta.elapsed_seconds = f->get<double>();
    }
  }
  return doc;
}

SolutionDocument read_solution(const std::string& path, const Instance& instance) {
  return parse_solution_text(read_file(path), instance);
}

std::string solution_to_text(const Instance& instance, const SolutionState& state,
                             const SolutionMeta& meta) {
  const auto subs = all_subgraphs(instance);
  json j;
  j["omega"] = state.omega.str();
  j["classes"] = json::array();
  for (int k = 0; k < instance.num_classes(); ++k) {
    json x = json::object(), mu = json::object(), pi = json::object();
    for (int a : subs[k].arcs) {
      x[instance.arcs[a].id] = state.x[k][a].str();
      if (state.has_duals) mu[instance.arcs[a].id] = state.mu[k][a].str();
    }
    if (state.has_duals) {
      for (int v : subs[k].vertices) {
        pi[instance.vertices[v]] = state.pi[k][v].str();
      }
    }
    json entry = {{"x", std::move(x)}};
    if (state.has_duals) {
      entry["mu"] = std::move(mu);
      entry["pi_t"] = state.pi[k][instance.classes[k].destination].str();
      entry["pi"] = std::move(pi);
    }
    j["classes"].push_back(std::move(entry));
  }
  json m = json::object();
  if (!meta.algorithm.empty()) m["algorithm"] = meta.algorithm;
  if (meta.pivots >= 0) m["pivots"] = meta.pivots;
  if (meta.elapsed_seconds >= 0) m["elapsed_seconds"] = meta.elapsed_seconds;
  if (!m.empty()) j["meta"] = std::move(m);
  return j.dump(2) + "\n";
}

void write_solution(const std::string& path, const Instance& instance,
                    const SolutionState& state, const SolutionMeta& meta) {
  write_file(path, solution_to_text(instance, state, meta));
}

}  // namespace mnep::cli
