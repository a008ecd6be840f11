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

#pragma once

#include <vector>

#include "freetree/rational.hpp"

namespace freetree {

// Decides whether A * lambda = b admits a solution with lambda >= 0, in exact
// rational arithmetic (phase-1 simplex, Bland's rule).
bool feasible_nonneg_solution(const std::vector<std::vector<Rat>>& A,
                              const std::vector<Rat>& b);

}  // namespace freetree
