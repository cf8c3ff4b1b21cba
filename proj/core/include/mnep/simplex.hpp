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

#ifndef MNEP_SIMPLEX_HPP
#define MNEP_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "mnep/rational.hpp"

namespace mnep {

/// One linear constraint coeffs . y (rel) rhs over free variables y.
struct Constraint {
  enum class Rel { Eq, Ge, Gt };
  std::vector<Rational> coeffs;
  Rational rhs;
  Rel rel = Rel::Eq;
};

inline Constraint constraint_eq(std::vector<Rational> a, Rational b) {
  return {std::move(a), std::move(b), Constraint::Rel::Eq};
}
inline Constraint constraint_ge(std::vector<Rational> a, Rational b) {
  return {std::move(a), std::move(b), Constraint::Rel::Ge};
}
inline Constraint constraint_gt(std::vector<Rational> a, Rational b) {
  return {std::move(a), std::move(b), Constraint::Rel::Gt};
}

/// Finds a point satisfying every constraint, strict ones strictly, or
/// returns nullopt when the system is infeasible. Exact simplex with
/// Bland's rule; strictness is handled by maximizing a joint margin
/// variable bounded by 1, so the answer is exact in all cases.
std::optional<std::vector<Rational>> solve_constraints(
    int num_vars, const std::vector<Constraint>& constraints);

}  // namespace mnep

#endif  // MNEP_SIMPLEX_HPP
