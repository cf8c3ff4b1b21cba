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

#ifndef MNEP_ARRANGEMENT_HPP
#define MNEP_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mnep/errors.hpp"
#include "mnep/instance.hpp"

namespace mnep {

// The enumeration solver works in the potential space: one coordinate per
// (class, vertex) with the class origin pinned to zero, ordered class-major
// with vertices ascending. Each reachable arc induces one hyperplane per
// class and one per unordered class pair sharing it; the cells of the
// resulting arrangement yield the candidate support families.

/// Affine form f(y) = coeffs . y + offset over the potential coordinates.
struct LinearForm {
  std::vector<Rational> coeffs;
  Rational offset;

  Rational eval(const std::vector<Rational>& point) const;
  int sign_at(const std::vector<Rational>& point) const;
};

/// Why a hyperplane exists. `flip` maps the stored form back to the tag's
/// natural orientation: the tag's closed "usable" side is
/// {flip * f(y) >= 0}.
struct HyperplaneTag {
  enum class Kind { Single, Pair };
  Kind kind = Kind::Single;
  int arc = -1;
  int class_a = -1;
  int class_b = -1;  // Pair only
  int flip = 1;
};

struct Hyperplane {
  LinearForm form;  // canonical: leading nonzero coefficient equals 1
  std::vector<HyperplaneTag> tags;
};

/// Coordinate bookkeeping for the potential space.
struct PotentialCoords {
  int dimension = 0;
  std::vector<std::pair<int, int>> coords;   // coord -> (class, vertex)
  std::vector<std::vector<int>> coord_of;    // [class][vertex] -> coord or -1
};

struct ArrangementInput {
  PotentialCoords coords;
  std::vector<Hyperplane> planes;
  // Per (class, arc in the class subgraph): references into `planes`.
  struct TagRef {
    int plane = -1;
    int flip = 1;
  };
  std::vector<std::vector<TagRef>> single_ref;        // [class][arc]
  std::vector<std::vector<std::vector<TagRef>>> pair_refs;  // [class][arc]
};

/// A relatively open cell, encoded by its sign vector over the planes plus
/// an exact witness point realizing those signs.
struct Cell {
  std::vector<std::int8_t> signs;
  std::vector<Rational> witness;
};

/// Candidate supports, one arc subset per class.
struct SupportFamily {
  std::vector<std::vector<int>> arcs;  // [class] -> ascending arc indices

  std::string key() const;  // canonical encoding, for deduplication
};

/// Builds the deduplicated hyperplane set of the instance. Tags of merged
/// duplicates are preserved with their orientations.
ArrangementInput build_hyperplanes(const Instance& instance);

/// Enumerates every nonempty cell (all dimensions) of the arrangement by
/// incremental insertion, with an exact feasibility check per candidate
/// sign vector. `dimension` may be zero (single point cell).
std::vector<Cell> enumerate_cells(const std::vector<Hyperplane>& planes,
                                  int dimension);

/// Affine dimension of a cell: the ambient dimension minus the rank of the
/// normals of the planes the cell lies on.
int cell_dimension(const std::vector<Hyperplane>& planes, const Cell& cell,
                   int dimension);

/// Support family of a cell: arc a belongs to S^k exactly when the cell is
/// on the closed usable side of the class hyperplane of (a, k) and of every
/// class-pair hyperplane of a involving k.
SupportFamily cell_supports(const ArrangementInput& input,
                            const Instance& instance, const Cell& cell);

/// Restricted feasibility: solves the equilibrium system with mu fixed to
/// zero on the support and x fixed to zero off it. A feasible point is a
/// genuine equilibrium; infeasibility is a valid answer.
std::optional<SolutionState> support_feasibility(const Instance& instance,
                                                 const SupportFamily& support);

struct ArrangementStats {
  int num_hyperplanes = 0;
  int num_cells = 0;
  int num_supports = 0;   // after deduplication
  int supports_tested = 0;
};

struct ArrangementResult {
  SolutionState state;
  ArrangementStats stats;
};

/// Two-step enumeration solver: candidate supports from the arrangement
/// cells, then the first feasible support wins. Intended for small
/// dimension; existence guarantees it never exhausts the candidates.
ArrangementResult arrangement_solve(const Instance& instance);

}  // namespace mnep

#endif  // MNEP_ARRANGEMENT_HPP
