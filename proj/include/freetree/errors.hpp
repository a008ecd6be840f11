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

#include <array>
#include <stdexcept>
#include <string>

namespace freetree {

enum class MetricErrorCode {
  BadShape,
  DuplicateLabel,
  BadBase,
  NonzeroDiagonal,
  NotSymmetric,
  NegativeOrZeroOffDiagonal,
  TriangleViolation,
};

inline const char* to_string(MetricErrorCode c) {
  switch (c) {
    case MetricErrorCode::BadShape: return "BadShape";
    case MetricErrorCode::DuplicateLabel: return "DuplicateLabel";
    case MetricErrorCode::BadBase: return "BadBase";
    case MetricErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case MetricErrorCode::NotSymmetric: return "NotSymmetric";
    case MetricErrorCode::NegativeOrZeroOffDiagonal:
      return "NegativeOrZeroOffDiagonal";
    case MetricErrorCode::TriangleViolation: return "TriangleViolation";
  }
  return "?";
}

// Names the first violated axiom and the offending indices.
struct MetricError : std::runtime_error {
  MetricErrorCode code;
  std::array<int, 3> at;  // unused slots are -1
  MetricError(MetricErrorCode c, std::array<int, 3> ix, const std::string& msg)
      : std::runtime_error(std::string(to_string(c)) + ": " + msg),
        code(c),
        at(ix) {}
};

struct TooFewPoints : std::runtime_error {
  TooFewPoints() : std::runtime_error("TooFewPoints") {}
};

struct SeparationZero : std::runtime_error {
  SeparationZero() : std::runtime_error("SeparationZero") {}
};

struct NotZeroHyperbolic : std::runtime_error {
  std::array<int, 4> quad;
  explicit NotZeroHyperbolic(std::array<int, 4> q)
      : std::runtime_error("NotZeroHyperbolic"), quad(q) {}
};

struct NormExceedsOne : std::runtime_error {
  NormExceedsOne() : std::runtime_error("NormExceedsOne") {}
};

struct NoMissingBranchPoint : std::runtime_error {
  NoMissingBranchPoint() : std::runtime_error("NoMissingBranchPoint") {}
};

struct NotOnePointed : std::runtime_error {
  NotOnePointed() : std::runtime_error("NotOnePointed: base point not in A") {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg)
      : std::runtime_error("ParseError: " + msg) {}
};

}  // namespace freetree
