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

#include "ymcert/json_io.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ymcert/errors.h"

namespace ymcert {
namespace {

const Json& Member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(where + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

const Json& Array(const Json& j, const char* key, const std::string& where) {
  const Json& a = Member(j, key, where);
  if (!a.is_array()) throw InvalidInput(where + ": \"" + key + "\" is not an array");
  return a;
}

int IntFrom(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InvalidInput(where + " is not an integer");
  const auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) throw InvalidInput(where + " is out of range");
  return static_cast<int>(v);
}

Point PointFrom(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + " is not an array");
  Point p;
  for (const Json& c : j) {
    if (!c.is_number()) throw InvalidInput(where + " has a non-numeric coordinate");
    const double v = c.get<double>();
    if (!std::isfinite(v)) throw InvalidInput(where + " has a non-finite coordinate");
    p.push_back(v);
  }
  return p;
}

VertexKind KindFrom(const Json& j, const std::string& where) {
  if (j == "boundary") return VertexKind::kBoundary;
  if (j == "charge") return VertexKind::kCharge;
  throw InvalidInput(where + ": unknown kind " + j.dump());
}

Json VerticesToJson(const WeightedGraph& g) {
  Json out = Json::array();
  for (const Vertex& v : g.Vertices()) out.push_back({{"id", v.id}, {"kind", VertexKindName(v.kind)}});
  return out;
}

}  // namespace

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return ParseRational(j.dump());
  throw InvalidInput("weight " + j.dump() + " is neither a string nor a number");
}

WeightedGraph GraphFromJson(const Json& j) {
  WeightedGraph g;
  const Json& vertices = Array(j, "vertices", "graph");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertex " + std::to_string(i);
    g.AddVertex(IntFrom(Member(vertices[i], "id", where), where + " id"),
                KindFrom(Member(vertices[i], "kind", where), where));
  }
  const Json& edges = Array(j, "edges", "graph");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edge " + std::to_string(i);
    const VertexId a = IntFrom(Member(edges[i], "a", where), where + " a");
    const VertexId b = IntFrom(Member(edges[i], "b", where), where + " b");
    const Rational w = RationalFromJson(Member(edges[i], "w", where));
    if (g.HasEdge(a, b) && g.Weight(a, b) != w) {
      throw InvalidInput(where + ": conflicts with an earlier entry for {" + std::to_string(a) + "," +
                         std::to_string(b) + "}");
    }
    g.SetEdge(a, b, w);
  }
  return g;
}

Json GraphToJson(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.UndirectedEdges()) {
    edges.push_back({{"a", a}, {"b", b}, {"w", FormatRational(g.Weight(a, b))}});
  }
  return {{"vertices", VerticesToJson(g)}, {"edges", edges}};
}

Json FlowToJson(const WeightedGraph& g, const Flow& f) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.UndirectedEdges()) {
    edges.push_back(
        {{"a", a}, {"b", b}, {"w", FormatRational(g.Weight(a, b))}, {"f", FormatRational(f.At(a, b))}});
  }
  Json out = {{"vertices", VerticesToJson(g)}, {"edges", edges}, {"value", FormatRational(f.value)}};
  if (f.sink) out["sink"] = *f.sink;
  return out;
}

ChargedField FieldFromJson(const Json& j) {
  ChargedField f;
  f.dim = IntFrom(Member(j, "dim", "field"), "field dim");
  f.measure.dim = f.dim;
  const Json& charges = Array(j, "charges", "field");
  for (std::size_t i = 0; i < charges.size(); ++i) {
    const std::string where = "charge " + std::to_string(i);
    f.charges.push_back({PointFrom(Member(charges[i], "p", where), where + " p"),
                         IntFrom(Member(charges[i], "d", where), where + " d")});
  }
  const Json& arcs = Array(j, "arcs", "field");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string where = "arc " + std::to_string(i);
    const Json& pts = Array(arcs[i], "pts", where);
    Arc arc;
    for (std::size_t k = 0; k < pts.size(); ++k) arc.pts.push_back(PointFrom(pts[k], where + " point " + std::to_string(k)));
    arc.weight = RationalFromJson(Member(arcs[i], "w", where));
    f.measure.arcs.push_back(std::move(arc));
  }
  return f;
}

Json FieldToJson(const ChargedField& f) {
  Json charges = Json::array();
  for (const Charge& c : f.charges) charges.push_back({{"p", c.p}, {"d", c.d}});
  Json arcs = Json::array();
  for (const Arc& a : f.measure.arcs) arcs.push_back({{"pts", a.pts}, {"w", FormatRational(a.weight)}});
  return {{"dim", f.dim}, {"charges", charges}, {"arcs", arcs}};
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw InvalidInput("write to " + path + " failed");
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string Fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ymcert
