// Copyright 2026 The ymcert Authors
//
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

// JSON forms of graphs, flows and charged fields.
//
// Graph: {"vertices":[{"id":0,"kind":"boundary"},...],
//         "edges":[{"a":0,"b":1,"w":"1/2"},...]}
// An edge sets w(a,b) = w and w(b,a) = -w. Weights are "p/q" or decimal
// strings; plain JSON numbers are read through their decimal text.
//
// Flow: the graph form with "f" on every edge plus "value" (and "sink" for
// X-flows).
//
// Field: {"dim":5,"charges":[{"p":[...],"d":1}],
//         "arcs":[{"pts":[[...],...],"w":"1/100"}]}

#ifndef YMCERT_JSON_IO_H_
#define YMCERT_JSON_IO_H_

#include <string>

#include "json.hpp"

#include "ymcert/arc_measure.h"
#include "ymcert/flow.h"
#include "ymcert/xgraph.h"

namespace ymcert {

using Json = nlohmann::json;

// All readers throw InvalidInput on malformed documents.
Rational RationalFromJson(const Json& j);
WeightedGraph GraphFromJson(const Json& j);
Json GraphToJson(const WeightedGraph& g);
Json FlowToJson(const WeightedGraph& g, const Flow& f);
ChargedField FieldFromJson(const Json& j);
Json FieldToJson(const ChargedField& f);

// Parses text, mapping parse errors to InvalidInput.
Json ParseJson(const std::string& text);
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& text);

// Two-space indented dump followed by a newline.
std::string Dump(const Json& j);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string Fnv1a64(const std::string& bytes);

}  // namespace ymcert

#endif  // YMCERT_JSON_IO_H_
