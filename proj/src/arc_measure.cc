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

#include "ymcert/arc_measure.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ymcert/errors.h"

namespace ymcert {

double Norm(const Point& p) {
  double s = 0;
  for (double x : p) s += x * x;
  return std::sqrt(s);
}

double Distance(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

bool OnSphere(const Point& p) { return std::abs(Norm(p) - 1.0) <= kSphereTolerance; }

double Arc::Length() const {
  double len = 0;
  for (std::size_t k = 1; k < pts.size(); ++k) len += Distance(pts[k - 1], pts[k]);
  return len;
}

bool FieldReport::Has(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::string FieldReport::Summary() const {
  if (violations.empty()) return "valid";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].rule << ": " << violations[i].detail;
  }
  return out.str();
}

namespace {

std::string ArcName(std::size_t i) { return "arc " + std::to_string(i); }

bool FinitePoint(const Point& p, int dim) {
  if (static_cast<int>(p.size()) != dim) return false;
  return std::all_of(p.begin(), p.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

std::optional<VertexId> EndpointVertex(const ChargedField& f, const Point& p) {
  for (std::size_t i = 0; i < f.charges.size(); ++i) {
    if (f.charges[i].p == p) return static_cast<VertexId>(i + 1);
  }
  if (OnSphere(p)) return 0;
  return std::nullopt;
}

FieldReport ValidateField(const ChargedField& f) {
  FieldReport report;
  auto fail = [&](const char* rule, std::string detail) { report.violations.push_back({rule, std::move(detail)}); };
  if (f.dim < 2) fail("dimension", "dimension " + std::to_string(f.dim) + " is below 2");
  if (f.measure.dim != f.dim) fail("dimension", "measure and charges disagree on the dimension");

  std::set<Point> seen_charges;
  for (std::size_t i = 0; i < f.charges.size(); ++i) {
    const Charge& c = f.charges[i];
    const std::string name = "charge " + std::to_string(i);
    if (!FinitePoint(c.p, f.dim)) {
      fail("charge", name + " has a malformed point");
      continue;
    }
    if (c.d == 0) fail("charge", name + " has d = 0");
    if (Norm(c.p) >= 1.0 - kSphereTolerance) fail("charge", name + " is not in the open ball");
    if (!seen_charges.insert(c.p).second) fail("charge", name + " repeats an earlier charge point");
  }
  report.balances.assign(f.charges.size(), Rational(0));

  for (std::size_t i = 0; i < f.measure.arcs.size(); ++i) {
    const Arc& arc = f.measure.arcs[i];
    const std::string name = ArcName(i);
    if (arc.pts.size() < 2) {
      fail("arc-shape", name + " has fewer than two points");
      continue;
    }
    if (!std::all_of(arc.pts.begin(), arc.pts.end(), [&](const Point& p) { return FinitePoint(p, f.dim); })) {
      fail("arc-shape", name + " has a malformed point");
      continue;
    }
    if (arc.weight <= 0) fail("arc-weight", name + " has non-positive weight " + FormatRational(arc.weight));
    for (const Point& p : arc.pts) {
      if (Norm(p) > 1.0 + kSphereTolerance) {
        fail("arc-shape", name + " leaves the closed unit ball");
        break;
      }
    }
    const std::set<Point> distinct(arc.pts.begin(), arc.pts.end());
    if (distinct.size() != arc.pts.size()) fail("arc-injective", name + " repeats a point");
    if (!(arc.Length() > 0)) fail("arc-shape", name + " has zero length");

    const std::optional<VertexId> s = EndpointVertex(f, arc.Start());
    const std::optional<VertexId> e = EndpointVertex(f, arc.End());
    const bool start_ok = s && (*s == 0 || f.charges[*s - 1].d < 0);
    const bool end_ok = e && ((*e == 0 && s && *s == 0) || (*e > 0 && f.charges[*e - 1].d > 0));
    if (!start_ok) fail("arc-start", name + " does not start on the sphere or at a negative charge");
    if (!end_ok) {
      fail("arc-end", name + (e && *e == 0 ? " leaves through the sphere from a charge"
                                           : " does not end at a positive charge"));
    }
    if (!start_ok || !end_ok) continue;
    if (*s == 0 && *e == 0) {
      report.boundary_loop_weight += arc.weight;
      continue;
    }
    if (*s == 0) {
      report.boundary_weight += arc.weight;
    } else {
      report.balances[*s - 1] -= arc.weight;
    }
    report.balances[*e - 1] += arc.weight;
  }

  for (std::size_t i = 0; i < f.charges.size(); ++i) {
    if (report.balances[i] != f.charges[i].d) {
      fail("balance", "charge " + std::to_string(i) + " has balance " + FormatRational(report.balances[i]) +
                          " but d = " + std::to_string(f.charges[i].d));
    }
  }
  if (report.boundary_weight != 1) {
    fail("boundary-weight", "weight entering through the sphere is " + FormatRational(report.boundary_weight) +
                                ", expected 1");
  }
  return report;
}

double Mass(const ArcMeasure& m) {
  double total = 0;
  for (const Arc& arc : m.arcs) total += ToDouble(arc.weight) * arc.Length();
  return total;
}

double Circulation(const ArcMeasure& m, const Point& c) {
  double total = 0;
  for (const Arc& arc : m.arcs) {
    double along = 0;
    for (std::size_t k = 1; k < arc.pts.size(); ++k) {
      for (std::size_t i = 0; i < c.size(); ++i) along += c[i] * (arc.pts[k][i] - arc.pts[k - 1][i]);
    }
    total += ToDouble(arc.weight) * along;
  }
  return total;
}

ClassPartition PartitionClasses(const ChargedField& f) {
  ClassPartition out;
  for (std::size_t i = 0; i < f.measure.arcs.size(); ++i) {
    const Arc& arc = f.measure.arcs[i];
    const std::optional<VertexId> s = EndpointVertex(f, arc.Start());
    const std::optional<VertexId> e = EndpointVertex(f, arc.End());
    if (!s || !e) throw InvalidInput(ArcName(i) + " fits no class: an endpoint is neither a charge nor on the sphere");
    out.classes[{*s, *e}].push_back(i);
    out.weights[{*s, *e}] += arc.weight;
  }
  return out;
}

XGraph GraphFromField(const ChargedField& f) {
  const FieldReport report = ValidateField(f);
  if (!report.valid()) throw InvalidInput("invalid field: " + report.Summary());
  const ClassPartition p = PartitionClasses(f);
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  for (std::size_t i = 0; i < f.charges.size(); ++i) g.AddVertex(static_cast<VertexId>(i + 1), VertexKind::kCharge);
  for (const auto& [key, w] : p.weights) {
    if (key.first == key.second) {
      g.SetDirected(key.first, key.second, g.Weight(key.first, key.second) + w);
    } else {
      g.AddToEdge(key.first, key.second, w);
    }
  }
  return XGraph(std::move(g));
}

std::map<EdgeKey, Rational> AlphaFromFlow(const ClassPartition& p, const Flow& flow) {
  std::map<EdgeKey, Rational> alpha;
  for (const auto& [key, w] : p.weights) {
    alpha[key] = (w == 0 || key.first == key.second) ? Rational(0) : Rational(flow.At(key.first, key.second) / w);
  }
  return alpha;
}

ArcMeasure Reweight(const ChargedField& f, const std::map<EdgeKey, Rational>& alpha) {
  const ClassPartition p = PartitionClasses(f);
  ArcMeasure out;
  out.dim = f.dim;
  std::vector<const Rational*> factor(f.measure.arcs.size(), nullptr);
  for (const auto& [key, arcs] : p.classes) {
    auto it = alpha.find(key);
    if (it == alpha.end()) {
      throw InvalidInput("no reweighting factor for class (" + std::to_string(key.first) + "," +
                         std::to_string(key.second) + ")");
    }
    if (Abs(it->second) > 1) throw InvalidInput("reweighting factor " + FormatRational(it->second) + " outside [-1,1]");
    for (std::size_t i : arcs) factor[i] = &it->second;
  }
  for (std::size_t i = 0; i < f.measure.arcs.size(); ++i) {
    const Rational& a = *factor[i];
    if (a == 0) continue;
    Arc arc = f.measure.arcs[i];
    arc.weight *= Abs(a);
    if (a < 0) std::reverse(arc.pts.begin(), arc.pts.end());
    out.arcs.push_back(std::move(arc));
  }
  return out;
}

namespace {

// Arcs as edges between nodes identified by exact endpoint coordinates.
struct ArcGraph {
  std::map<Point, int> node_of;
  std::vector<Point> points;
  std::vector<int> tail, head;
  std::vector<Rational> residual;
  std::vector<double> length;
  std::vector<std::vector<std::size_t>> out;  // arc indices by tail

  int Node(const Point& p) {
    auto [it, inserted] = node_of.try_emplace(p, static_cast<int>(points.size()));
    if (inserted) {
      points.push_back(p);
      out.emplace_back();
    }
    return it->second;
  }

  std::optional<std::size_t> FirstOut(int v) const {
    for (std::size_t a : out[v]) {
      if (residual[a] > 0) return a;
    }
    return std::nullopt;
  }
};

// A directed cycle of arcs with positive residual, if any.
std::optional<std::vector<std::size_t>> FindCycle(const ArcGraph& g) {
  const int n = static_cast<int>(g.points.size());
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> via(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == g.out[v].size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t a = g.out[v][next++];
      if (g.residual[a] <= 0) continue;
      const int u = g.head[a];
      if (color[u] == 1) {
        std::vector<std::size_t> cycle{a};
        for (int w = v; w != u; w = g.tail[via[w]]) cycle.push_back(via[w]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[u] == 0) {
        color[u] = 1;
        via[u] = a;
        stack.push_back({u, 0});
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Recomposition Recompose(const ArcMeasure& m, const Point& sink) {
  ArcGraph g;
  for (const Arc& arc : m.arcs) {
    if (arc.weight <= 0) continue;
    g.tail.push_back(g.Node(arc.Start()));
    g.head.push_back(g.Node(arc.End()));
    g.residual.push_back(arc.weight);
    g.length.push_back(arc.Length());
    g.out[g.tail.back()].push_back(g.tail.size() - 1);
  }
  std::vector<const Arc*> source_arc;
  for (const Arc& arc : m.arcs) {
    if (arc.weight > 0) source_arc.push_back(&arc);
  }
  const int sink_node = g.node_of.count(sink) ? g.node_of.at(sink) : -1;

  std::vector<Rational> net(g.points.size(), Rational(0));
  for (std::size_t a = 0; a < g.tail.size(); ++a) {
    net[g.head[a]] += g.residual[a];
    net[g.tail[a]] -= g.residual[a];
  }
  for (std::size_t v = 0; v < g.points.size(); ++v) {
    if (static_cast<int>(v) == sink_node || OnSphere(g.points[v])) continue;
    if (net[v] != 0) {
      throw InvalidInput("measure is not balanced at an interior point (net inflow " + FormatRational(net[v]) + ")");
    }
  }

  Recomposition result;
  while (std::optional<std::vector<std::size_t>> cycle = FindCycle(g)) {
    Rational delta = g.residual[cycle->front()];
    double len = 0;
    for (std::size_t a : *cycle) {
      delta = std::min(delta, g.residual[a]);
      len += g.length[a];
    }
    for (std::size_t a : *cycle) g.residual[a] -= delta;
    result.cancelled_weight += delta;
    result.cancelled_mass += ToDouble(delta) * len;
    ++result.cycles_cancelled;
  }

  for (std::size_t v = 0; v < g.points.size(); ++v) {
    if (static_cast<int>(v) == sink_node || !OnSphere(g.points[v])) continue;
    while (std::optional<std::size_t> first = g.FirstOut(static_cast<int>(v))) {
      std::vector<std::size_t> path{*first};
      int at = g.head[*first];
      while (at != sink_node) {
        const std::optional<std::size_t> step = g.FirstOut(at);
        if (!step) throw InvalidInput("a path from the sphere ends away from the sink");
        path.push_back(*step);
        at = g.head[*step];
      }
      Rational delta = g.residual[path.front()];
      for (std::size_t a : path) delta = std::min(delta, g.residual[a]);
      CompositePath composite;
      composite.weight = delta;
      composite.arc_count = path.size();
      for (std::size_t a : path) {
        g.residual[a] -= delta;
        const std::vector<Point>& pts = source_arc[a]->pts;
        composite.pts.insert(composite.pts.end(), pts.begin() + (composite.pts.empty() ? 0 : 1), pts.end());
        composite.length += g.length[a];
      }
      result.paths.push_back(std::move(composite));
    }
  }
  for (std::size_t a = 0; a < g.residual.size(); ++a) {
    if (g.residual[a] > 0) throw InvalidInput("arc weight left over that lies on no path from the sphere to the sink");
  }
  return result;
}

double ChordBound(const std::vector<CompositePath>& paths, const Point& sink) {
  double total = 0;
  for (const CompositePath& p : paths) total += ToDouble(p.weight) * Distance(p.pts.front(), sink);
  return total;
}

}  // namespace ymcert
