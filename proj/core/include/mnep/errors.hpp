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

#ifndef MNEP_ERRORS_HPP
#define MNEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mnep {

/// The candidate index set does not form a basis (wrong cardinality or a
/// singular bordered matrix).
class NotABasisError : public std::runtime_error {
 public:
  explicit NotABasisError(const std::string& what) : std::runtime_error(what) {}
};

/// The ratio test found no blocking variable: the polyhedron contains an
/// infinite ray where none may exist. Signals corrupted input or an
/// internal bug, never a legitimate outcome.
class RayError : public std::runtime_error {
 public:
  explicit RayError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration-based routine was asked to run beyond its documented
/// size guard.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// A solver invariant failed (revisited basis, infeasible basic solution,
/// exhausted support list, ...).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mnep

#endif  // MNEP_ERRORS_HPP
