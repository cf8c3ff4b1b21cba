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

#ifndef MNEP_LINALG_HPP
#define MNEP_LINALG_HPP

#include <optional>
#include <vector>

#include "mnep/rational.hpp"

namespace mnep {

/// Dense matrix of exact rationals, row-major. Sized for desk-scale
/// systems (a few hundred rows); no sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return d_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return d_[size_t(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> d_;
};

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v);

/// Solves the square system a * x = rhs by exact Gaussian elimination.
/// Returns nullopt when `a` is singular.
std::optional<std::vector<Rational>> solve_linear(Matrix a,
                                                  std::vector<Rational> rhs);

/// Solves a * X = rhs for a multi-column right-hand side; nullopt when
/// singular. Used to materialize basis inverses in tests and one-off ops.
std::optional<Matrix> solve_linear_multi(Matrix a, Matrix rhs);

int rank(Matrix a);

}  // namespace mnep

#endif  // MNEP_LINALG_HPP
