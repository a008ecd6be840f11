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

#include <optional>
#include <string>

#include "freetree/freespace.hpp"
#include "freetree/json_io.hpp"
#include "freetree/metric.hpp"

namespace freetree {

inline constexpr const char* kToolVersion = "0.1.0";

// Canonical 64-bit digest of a space: label permutations that describe the
// same matrix hash identically.
std::string space_digest(const Metric& m);

// Report payloads. Each is deterministic in the canonical input; the full
// report adds digest/command/timestamp/version framing.
Json payload_check(const Metric& m);
Json payload_realize(const Metric& m);
Json payload_norm(const Metric& m, const std::optional<FreeVector>& vec,
                  const std::optional<LipFunction>& fn);
Json payload_verdict(const Metric& m);
Json payload_bm(const Metric& m);

// Wraps a payload into an AnalysisReport; the embedded input makes reports
// self-contained for re-verification.
Json make_report(const std::string& command, const Metric& m, Json payload);

// Re-derives every numeric claim in a stored report. Returns a list of
// discrepancies; empty = pass.
std::vector<std::string> verify_report(const Json& report);

}  // namespace freetree
