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

#include "mnep/linalg.hpp"

#include <stdexcept>

namespace mnep {

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != m.cols()) {
    throw std::invalid_argument("mat_vec: dimension mismatch");
  }
  std::vector<Rational> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
    }
  }
  return out;
}

namespace {

// Forward elimination with row pivoting on the first nonzero entry;
// reduces [a | rhs] so that a becomes the identity. Returns false when
// `a` is singular. Exact throughout.
bool reduce_in_place(Matrix& a, Matrix& rhs) {
  const int n = a.rows();
  if (a.cols() != n || rhs.rows() != n) {
    throw std::invalid_argument("reduce: dimension mismatch");
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (!a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs.at(pivot, j), rhs.at(col, j));
    }
    const Rational inv = Rational(1) / a.at(col, col);
    for (int j = col; j < n; ++j) a.at(col, j) *= inv;
    for (int j = 0; j < rhs.cols(); ++j) rhs.at(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      const Rational factor = a.at(i, col);
      for (int j = col; j < n; ++j) a.at(i, j) -= factor * a.at(col, j);
      for (int j = 0; j < rhs.cols(); ++j) rhs.at(i, j) -= factor * rhs.at(col, j);
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear(Matrix a,
                                                  std::vector<Rational> rhs) {
  Matrix r(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) r.at(i, 0) = std::move(rhs[i]);
  if (!reduce_in_place(a, r)) return std::nullopt;
  std::vector<Rational> out(a.rows());
  for (int i = 0; i < a.rows(); ++i) out[i] = std::move(r.at(i, 0));
  return out;
}

std::optional<Matrix> solve_linear_multi(Matrix a, Matrix rhs) {
  if (!reduce_in_place(a, rhs)) return std::nullopt;
  return rhs;
}

int rank(Matrix a) {
  const int m = a.rows();
  const int n = a.cols();
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int pivot = -1;
    for (int i = r; i < m; ++i) {
      if (!a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    }
    for (int i = r + 1; i < m; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const Rational factor = a.at(i, col) / a.at(r, col);
      for (int j = col; j < n; ++j) a.at(i, j) -= factor * a.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace mnep
