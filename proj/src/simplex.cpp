// Copyright 2026 The freetree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "freetree/simplex.hpp"

#include <cassert>

namespace freetree {

bool feasible_nonneg_solution(const std::vector<std::vector<Rat>>& A,
                              const std::vector<Rat>& b) {
  const int m = static_cast<int>(A.size());
  const int n = m == 0 ? 0 : static_cast<int>(A[0].size());
  if (m == 0) return true;

  // Phase-1 tableau: columns 0..n-1 original variables, n..n+m-1 artificial
  // variables, last column the right-hand side. Rows are normalized so the
  // rhs is nonnegative; the objective row minimizes the artificial sum.
  std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(n + m + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (int j = 0; j < n; ++j) t[i][j] = flip ? Rat(-A[i][j]) : A[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? Rat(-b[i]) : b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  // Objective row = -(sum of constraint rows) restricted to real columns,
  // so artificial columns start with reduced cost 0 in the basis.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n + m; ++j)
      if (j < n || j == n + m) t[m][j] -= t[i][j];

  for (;;) {
    // Bland's rule: first column with negative reduced cost.
    int pivot_col = -1;
    for (int j = 0; j < n + m; ++j)
      if (t[m][j] < 0) {
        pivot_col = j;
        break;
      }
    if (pivot_col < 0) break;
    int pivot_row = -1;
    for (int i = 0; i < m; ++i) {
      if (t[i][pivot_col] <= 0) continue;
      if (pivot_row < 0) {
        pivot_row = i;
        continue;
      }
      Rat cur = t[i][n + m] / t[i][pivot_col];
      Rat best = t[pivot_row][n + m] / t[pivot_row][pivot_col];
      if (cur < best || (cur == best && basis[i] < basis[pivot_row]))
        pivot_row = i;
    }
    assert(pivot_row >= 0 && "phase-1 objective is bounded below by 0");
    Rat piv = t[pivot_row][pivot_col];
    for (int j = 0; j <= n + m; ++j) t[pivot_row][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == pivot_row || t[i][pivot_col] == 0) continue;
      Rat factor = t[i][pivot_col];
      for (int j = 0; j <= n + m; ++j)
        t[i][j] -= factor * t[pivot_row][j];
    }
    basis[pivot_row] = pivot_col;
  }
  // Feasible iff all artificial variables were driven to zero.
  return t[m][n + m] == 0;
}

}  // namespace freetree
