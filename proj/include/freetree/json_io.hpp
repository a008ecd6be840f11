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

#include <string>

#include <json.hpp>

#include "freetree/bm.hpp"
#include "freetree/extremal.hpp"
#include "freetree/freespace.hpp"
#include "freetree/metric.hpp"
#include "freetree/tree.hpp"

namespace freetree {

using Json = nlohmann::json;

// {"labels": [...], "base": "<label>", "dist": [["p/q", ...], ...]}
Json space_to_json(const Metric& m);
Metric space_from_json(const Json& j);

// Distance matrix CSV with a header row of labels; the first label is the
// base point.
Metric space_from_csv(const std::string& text);

// Edge-weighted tree input {"nodes": [{"id", "label"?}], "edges": [{"u",
// "v", "len"}], "base"?}: labeled nodes become the points of M under the
// induced path metric; unlabeled nodes act as Steiner nodes. The base
// defaults to the first labeled node.
Metric space_from_tree_json(const Json& j);

// {"nodes": [{"id", "kind", "label"?}], "edges": [{"u", "v", "len"}]}
Json tree_to_json(const Metric& m, const Tree& t);

// {"coeffs": {"<label>": "p/q", ...}}
Json freevector_to_json(const Metric& m, const FreeVector& a);
FreeVector freevector_from_json(const Metric& m, const Json& j);

// {"values": {"<label>": "p/q", ...}}; missing labels are 0, the base must
// map to 0 when present.
Json lipfunction_to_json(const Metric& m, const LipFunction& f);
LipFunction lipfunction_from_json(const Metric& m, const Json& j);

Json certificate_to_json(const Metric& m, const Certificate& c);
Json bm_certificate_to_json(const Metric& m, const PeakingFamily& fam,
                            const BmCertificate& c);

// "p/q" plus a 12-digit decimal for humans.
Json rat_to_json(const Rat& r);

}  // namespace freetree
