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

#include "ymcert/flow.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "flow_network.h"
#include "ymcert/errors.h"

namespace ymcert {

Rational Flow::At(VertexId a, VertexId b) const {
  auto it = values.find({a, b});
  return it == values.end() ? Rational(0) : it->second;
}

namespace {

using internal::FlowNetwork;

std::string Name(VertexId v) { return std::to_string(v); }

std::string EdgeName(VertexId a, VertexId b) { return "(" + Name(a) + "," + Name(b) + ")"; }

// Vertices joined to `start` by edges of nonzero weight.
std::set<VertexId> SupportComponent(const WeightedGraph& g, VertexId start) {
  std::set<VertexId> seen{start};
  std::deque<VertexId> queue{start};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : g.Neighbors(u)) {
      if (v != u && g.Weight(u, v) != 0 && seen.insert(v).second) queue.push_back(v);
    }
  }
  return seen;
}

// Network of the max X-flow problem: a super source feeds the boundary edges
// pointing out of the boundary, boundary edges pointing into it drain to the
// super target, and the sink drains at most one unit. Interior edges are
// undirected with capacity |w|; edges at the sink only carry flow into it.
struct XNetwork {
  explicit XNetwork(int nodes) : net(nodes) {}
  FlowNetwork net;
  std::map<VertexId, int> node;
  std::map<VertexId, int> boundary_arc;  // y -> arc, flow measured along w's sign
  std::map<EdgeKey, int> edge_arc;       // (p,q), p<q -> arc carrying f(p,q)
  int source = 0;
  int target = 0;
  Rational outward_total = 0;
};

XNetwork BuildXNetwork(const WeightedGraph& g, VertexId boundary, VertexId sink) {
  std::vector<VertexId> others;
  for (VertexId v : g.VertexIds()) {
    if (v != boundary) others.push_back(v);
  }
  XNetwork x(static_cast<int>(others.size()) + 2);
  for (std::size_t i = 0; i < others.size(); ++i) x.node[others[i]] = static_cast<int>(i);
  x.source = static_cast<int>(others.size());
  x.target = x.source + 1;
  for (VertexId y : others) {
    const Rational b = g.Weight(boundary, y);
    if (b > 0) {
      x.boundary_arc[y] = x.net.AddArc(x.source, x.node[y], 0, b);
      x.outward_total += b;
    } else if (b < 0) {
      x.boundary_arc[y] = x.net.AddArc(x.node[y], x.target, 0, -b);
    }
  }
  x.net.AddArc(x.node[sink], x.target, 0, 1);
  for (const auto& [p, q] : g.UndirectedEdges()) {
    if (p == q || p == boundary || q == boundary) continue;
    const Rational c = Abs(g.Weight(p, q));
    if (c == 0) continue;
    Rational lower = -c, upper = c;
    if (q == sink) lower = 0;
    if (p == sink) upper = 0;
    x.edge_arc[{p, q}] = x.net.AddArc(x.node[p], x.node[q], lower, upper);
  }
  return x;
}

Flow ExtractXFlow(const WeightedGraph& g, VertexId boundary, const XNetwork& x) {
  Flow f;
  for (const auto& [key, w] : g.DirectedEdges()) {
    const auto [a, b] = key;
    Rational value = 0;
    if (a == b) {
      value = 0;
    } else if (a == boundary || b == boundary) {
      const VertexId y = a == boundary ? b : a;
      auto it = x.boundary_arc.find(y);
      if (it != x.boundary_arc.end()) {
        const Rational carried = x.net.FlowOn(it->second);
        const Rational out = g.Weight(boundary, y) > 0 ? carried : Rational(-carried);
        value = a == boundary ? out : Rational(-out);
      }
    } else {
      auto it = x.edge_arc.find({std::min(a, b), std::max(a, b)});
      if (it != x.edge_arc.end()) {
        const Rational fpq = x.net.FlowOn(it->second);
        value = a < b ? fpq : Rational(-fpq);
      }
    }
    f.values[key] = value;
  }
  for (VertexId y : g.Neighbors(boundary)) {
    if (y != boundary) f.value += f.At(boundary, y);
  }
  return f;
}

MaxFlowResult MaxXFlowImpl(const WeightedGraph& g, VertexId boundary, VertexId sink) {
  XNetwork x = BuildXNetwork(g, boundary, sink);
  MaxFlowResult result;
  result.throughput = x.net.MaxFlow(x.source, x.target);
  result.flow = ExtractXFlow(g, boundary, x);
  result.flow.sink = sink;
  result.saturating = result.throughput == x.outward_total;
  if (result.saturating) {
    for (VertexId y : g.Neighbors(boundary)) {
      if (y != boundary && result.flow.At(boundary, y) != g.Weight(boundary, y)) {
        result.saturating = false;
      }
    }
  }

  const std::vector<bool> reach = x.net.ResidualReachable(x.source);
  std::set<VertexId> near{boundary};
  for (const auto& [v, n] : x.node) {
    if (reach[n]) near.insert(v);
  }
  result.cut.near_side.assign(near.begin(), near.end());
  for (const auto& [p, q] : g.UndirectedEdges()) {
    if (p == q) continue;
    const bool pn = near.count(p) > 0, qn = near.count(q) > 0;
    if (pn == qn) continue;
    const EdgeKey oriented = pn ? EdgeKey{p, q} : EdgeKey{q, p};
    result.cut.edges.push_back(oriented);
    result.cut.value += Abs(g.Weight(oriented.first, oriented.second));
  }
  return result;
}

std::vector<VertexId> SinkCandidates(const WeightedGraph& g, VertexId boundary) {
  std::vector<std::pair<Rational, VertexId>> ranked;
  for (VertexId v : g.VertexIds()) {
    if (v == boundary) continue;
    const Rational fl = g.Flux(v);
    if (fl > 0 && IncidentSign(g, v) > 0) ranked.push_back({fl, v});
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& l, const auto& r) {
    return l.first != r.first ? l.first > r.first : l.second < r.second;
  });
  std::vector<VertexId> out;
  for (const auto& [fl, v] : ranked) out.push_back(v);
  return out;
}

Rational BoundaryWeightOf(const WeightedGraph& g) {
  Rational total = 0;
  for (const auto& [key, w] : g.DirectedEdges()) {
    if (g.Kind(key.first) == VertexKind::kBoundary) total += Abs(w);
  }
  return total;
}

// The bar construction uses integrality and the boundary balance but never
// sign coherence, so that rule is not required of its inputs.
ValidationReport StructuralViolations(ValidationReport report) {
  std::erase_if(report.violations, [](const Violation& v) { return v.rule == "sign-coherence"; });
  return report;
}

// Recursive bar X-flow construction: split along a saturated minimum cut
// until the current graph is saturated by a single max flow.
class BarSolver {
 public:
  explicit BarSolver(SolveTrace* trace) : trace_(trace) {}

  Flow Solve(const WeightedGraph& g, int depth) {
    if (trace_) trace_->max_depth = std::max(trace_->max_depth, depth);
    Flow f;
    std::vector<VertexId> interior;
    for (VertexId v : g.VertexIds()) {
      if (g.Kind(v) != VertexKind::kBoundary) interior.push_back(v);
    }
    if (interior.empty()) {
      for (const auto& [key, w] : g.DirectedEdges()) f.values[key] = key.first == key.second ? Rational(0) : w;
      return f;
    }

    const std::vector<std::set<VertexId>> components = InteriorComponents(g, interior);
    if (components.size() > 1) {
      for (const std::set<VertexId>& component : components) {
        const WeightedGraph side = Side(g, component);
        CheckSide(side, "component");
        Merge(Solve(side, depth + 1), f);
      }
      CopyBoundaryBoundary(g, f);
      return f;
    }

    internal::FlowNetwork net(static_cast<int>(interior.size()) + 2);
    std::map<VertexId, int> node;
    for (std::size_t i = 0; i < interior.size(); ++i) node[interior[i]] = static_cast<int>(i);
    const int source = static_cast<int>(interior.size());
    const int target = source + 1;
    Rational supply = 0;
    for (VertexId y : interior) {
      Rational in = 0, out = 0;
      for (VertexId a : g.Neighbors(y)) {
        if (g.Kind(a) != VertexKind::kBoundary) continue;
        const Rational w = g.Weight(a, y);
        (w > 0 ? in : out) += Abs(w);
      }
      if (in > 0) net.AddArc(source, node[y], 0, in);
      if (out > 0) net.AddArc(node[y], target, 0, out);
      supply += in;
    }
    std::map<EdgeKey, int> edge_arc;
    for (const auto& [p, q] : g.UndirectedEdges()) {
      if (p == q || !node.count(p) || !node.count(q)) continue;
      const Rational c = Abs(g.Weight(p, q));
      if (c != 0) edge_arc[{p, q}] = net.AddArc(node[p], node[q], -c, c);
    }
    const Rational moved = net.MaxFlow(source, target);
    if (moved == supply) {
      for (const auto& [key, w] : g.DirectedEdges()) {
        const auto [a, b] = key;
        if (a == b) {
          f.values[key] = 0;
        } else if (g.Kind(a) == VertexKind::kBoundary || g.Kind(b) == VertexKind::kBoundary) {
          f.values[key] = w;
        } else {
          auto it = edge_arc.find({std::min(a, b), std::max(a, b)});
          const Rational fpq = it == edge_arc.end() ? Rational(0) : net.FlowOn(it->second);
          f.values[key] = a < b ? fpq : Rational(-fpq);
        }
      }
      return f;
    }

    const std::vector<bool> reach = net.ResidualReachable(source);
    std::set<VertexId> first, second;
    for (VertexId v : interior) (reach[node[v]] ? first : second).insert(v);
    if (first.empty() || second.empty()) {
      throw InvariantViolation("bar X-flow: unsaturated max flow with a trivial cut");
    }
    if (trace_) ++trace_->bar_splits;
    const WeightedGraph g1 = Side(g, first);
    const WeightedGraph g2 = Side(g, second);
    CheckSide(g1, "cut side");
    CheckSide(g2, "cut side");
    const Flow f1 = Solve(g1, depth + 1);
    const Flow f2 = Solve(g2, depth + 1);
    for (const auto& [key, w] : g.DirectedEdges()) {
      const auto [a, b] = key;
      const bool in1 = first.count(a) || first.count(b);
      const bool in2 = second.count(a) || second.count(b);
      if (in1 && in2) {
        if (f1.At(a, b) != w || f2.At(a, b) != w) {
          throw InvariantViolation("bar X-flow: cut edge " + EdgeName(a, b) + " not saturated by both sides");
        }
        if (trace_) ++trace_->glue_checks;
        f.values[key] = w;
      } else if (in1) {
        f.values[key] = f1.At(a, b);
      } else if (in2) {
        f.values[key] = f2.At(a, b);
      }
    }
    CopyBoundaryBoundary(g, f);
    return f;
  }

 private:
  static std::vector<std::set<VertexId>> InteriorComponents(const WeightedGraph& g,
                                                            const std::vector<VertexId>& interior) {
    std::vector<std::set<VertexId>> out;
    std::set<VertexId> seen;
    for (VertexId start : interior) {
      if (seen.count(start)) continue;
      std::set<VertexId> component{start};
      std::deque<VertexId> queue{start};
      seen.insert(start);
      while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (VertexId v : g.Neighbors(u)) {
          if (v == u || g.Kind(v) == VertexKind::kBoundary || seen.count(v)) continue;
          seen.insert(v);
          component.insert(v);
          queue.push_back(v);
        }
      }
      out.push_back(std::move(component));
    }
    return out;
  }

  // Subgraph made of `inner` (as interior vertices) and every edge touching
  // it; the other endpoints of those edges become boundary vertices.
  static WeightedGraph Side(const WeightedGraph& g, const std::set<VertexId>& inner) {
    WeightedGraph side;
    std::set<VertexId> added;
    for (VertexId v : inner) {
      side.AddVertex(v, VertexKind::kCharge);
      added.insert(v);
    }
    for (const auto& [key, w] : g.DirectedEdges()) {
      const auto [a, b] = key;
      if (!inner.count(a) && !inner.count(b)) continue;
      for (VertexId v : {a, b}) {
        if (added.insert(v).second) side.AddVertex(v, VertexKind::kBoundary);
      }
      side.SetDirected(a, b, w);
    }
    return side;
  }

  static void CheckSide(const WeightedGraph& side, const char* what) {
    const ValidationReport report = StructuralViolations(ValidateBarXGraph(BarXGraph(side)));
    if (!report.valid()) {
      throw InvariantViolation(std::string("bar X-flow: ") + what + " is not a bar X-graph: " + report.Summary());
    }
    if (BoundaryWeightOf(side) >= 1) {
      throw InvariantViolation(std::string("bar X-flow: ") + what + " violates the small boundary weight bound");
    }
  }

  static void Merge(const Flow& part, Flow& into) {
    for (const auto& [key, value] : part.values) into.values[key] = value;
  }

  static void CopyBoundaryBoundary(const WeightedGraph& g, Flow& f) {
    for (const auto& [key, w] : g.DirectedEdges()) {
      if (g.Kind(key.first) == VertexKind::kBoundary && g.Kind(key.second) == VertexKind::kBoundary) {
        f.values[key] = key.first == key.second ? Rational(0) : w;
      }
    }
  }

  SolveTrace* trace_;
};

// Recursive saturating X-flow construction. Each level tries the sink
// candidates in order; a candidate is abandoned when its branch does not
// yield a saturating flow of the reduced graph.
class XSolver {
 public:
  explicit XSolver(SolveTrace* trace) : trace_(trace) {}

  std::optional<Flow> Solve(const WeightedGraph& g, VertexId boundary, int depth) {
    if (trace_) trace_->max_depth = std::max(trace_->max_depth, depth);
    if (g.VertexCount() == 2) return BaseCase(g, boundary);

    for (VertexId sink : SinkCandidates(g, boundary)) {
      MaxFlowResult r = MaxXFlowImpl(g, boundary, sink);
      if (r.saturating) {
        if (trace_) ++trace_->saturated_steps;
        return std::move(r.flow);
      }
      std::optional<Flow> found = r.flow.value == 0 ? DropComponent(g, boundary, sink, depth)
                                                    : CutAndContract(g, boundary, sink, r, depth);
      if (found) return found;
      if (trace_) ++trace_->backtracks;
    }
    return std::nullopt;
  }

 private:
  std::optional<Flow> BaseCase(const WeightedGraph& g, VertexId boundary) {
    VertexId other = boundary;
    for (VertexId v : g.VertexIds()) {
      if (v != boundary) other = v;
    }
    if (g.Weight(boundary, other) != 1) return std::nullopt;
    if (trace_) ++trace_->base_cases;
    Flow f;
    for (const auto& [key, w] : g.DirectedEdges()) f.values[key] = key.first == key.second ? Rational(0) : w;
    f.sink = other;
    f.value = 1;
    return f;
  }

  // Value zero: the sink's component does not touch the boundary and can be
  // removed without changing the boundary flux.
  std::optional<Flow> DropComponent(const WeightedGraph& g, VertexId boundary, VertexId sink, int depth) {
    const std::set<VertexId> component = SupportComponent(g, sink);
    if (component.count(boundary)) return std::nullopt;
    if (trace_) ++trace_->zero_value_steps;
    WeightedGraph reduced;
    for (const Vertex& v : g.Vertices()) {
      if (!component.count(v.id)) reduced.AddVertex(v.id, v.kind);
    }
    for (const auto& [key, w] : g.DirectedEdges()) {
      if (!component.count(key.first) && !component.count(key.second)) reduced.SetDirected(key.first, key.second, w);
    }
    std::optional<Flow> sub = Solve(reduced, boundary, depth + 1);
    if (!sub) return std::nullopt;
    for (const auto& [key, w] : g.DirectedEdges()) sub->values.try_emplace(key, 0);
    return sub;
  }

  std::optional<Flow> CutAndContract(const WeightedGraph& g, VertexId boundary, VertexId sink,
                                     const MaxFlowResult& r, int depth) {
    const std::set<VertexId> near(r.cut.near_side.begin(), r.cut.near_side.end());
    if (r.flow.value <= 0 || r.flow.value >= 1 || near.count(sink) || r.cut.value >= 1) return std::nullopt;

    CutStep step;
    step.depth = depth;
    step.sink = sink;
    step.flow_value = r.flow.value;
    for (const auto& [u, x] : r.cut.edges) {
      const Rational w = g.Weight(u, x);
      (w > 0 ? step.s_plus : step.s_minus) += Abs(w);
    }
    step.near_vertices = near.size();
    step.far_vertices = g.VertexCount() - near.size();
    if (trace_) trace_->cut_steps.push_back(step);
    // Flux of the far side is an integer and bounded by the cut value.
    if (!IsInteger(step.s_plus - step.s_minus) || step.s_plus != step.s_minus) {
      if (trace_) ++trace_->zeroflow_violations;
      throw InvariantViolation("zero-flow identity failed on cut: s+ = " + FormatRational(step.s_plus) +
                               ", s- = " + FormatRational(step.s_minus));
    }

    // Near side with the far side folded into the boundary vertex.
    WeightedGraph contracted;
    for (VertexId v : near) contracted.AddVertex(v, g.Kind(v));
    for (const auto& [key, w] : g.DirectedEdges()) {
      if (near.count(key.first) && near.count(key.second)) contracted.SetDirected(key.first, key.second, w);
    }
    for (const auto& [u, x] : r.cut.edges) {
      if (u != boundary) contracted.AddToEdge(u, boundary, g.Weight(u, x));
    }
    std::optional<Flow> inner = Solve(contracted, boundary, depth + 1);
    if (!inner) return std::nullopt;

    // Far side with the near ends of cut edges as its boundary.
    WeightedGraph far;
    for (VertexId v : g.VertexIds()) {
      if (!near.count(v)) far.AddVertex(v, VertexKind::kCharge);
    }
    for (const auto& [u, x] : r.cut.edges) {
      if (!far.HasVertex(u)) far.AddVertex(u, VertexKind::kBoundary);
    }
    for (const auto& [key, w] : g.DirectedEdges()) {
      if (!near.count(key.first) && !near.count(key.second)) far.SetDirected(key.first, key.second, w);
    }
    for (const auto& [u, x] : r.cut.edges) {
      far.SetDirected(u, x, g.Weight(u, x));
      far.SetDirected(x, u, g.Weight(x, u));
    }
    const Flow outer = BarSolver(trace_).Solve(far, depth + 1);

    Flow glued;
    glued.sink = inner->sink;
    for (const auto& [key, w] : g.DirectedEdges()) {
      const auto [a, b] = key;
      if (a == b) {
        glued.values[key] = 0;
      } else if (!near.count(a) || !near.count(b)) {
        glued.values[key] = outer.At(a, b);
      } else if (a == boundary || b == boundary) {
        glued.values[key] = w;
      } else {
        glued.values[key] = inner->At(a, b);
      }
    }
    std::map<VertexId, Rational> crossing;
    for (const auto& [u, x] : r.cut.edges) {
      if (outer.At(u, x) != g.Weight(u, x)) {
        throw InvariantViolation("gluing: cut edge " + EdgeName(u, x) + " is not saturated by the far-side flow");
      }
      if (u != boundary) crossing[u] += outer.At(u, x);
    }
    for (const auto& [u, carried] : crossing) {
      if (inner->At(u, boundary) != g.Weight(u, boundary) + carried) {
        throw InvariantViolation("gluing: contracted flow at " + Name(u) + " disagrees with the far side");
      }
    }
    if (trace_) ++trace_->glue_checks;
    for (VertexId y : g.Neighbors(boundary)) {
      if (y != boundary) glued.value += glued.At(boundary, y);
    }
    return glued;
  }

  SolveTrace* trace_;
};

void RequireValid(const ValidationReport& report, const char* what) {
  if (!report.valid()) throw InvalidInput(std::string("invalid ") + what + ": " + report.Summary());
}

}  // namespace

MaxFlowResult MaxXFlow(const XGraph& g, VertexId sink) {
  const ValidationReport report = ValidateXGraph(g);
  RequireValid(report, "X-graph");
  const auto& positive = report.partition->positive;
  if (std::find(positive.begin(), positive.end(), sink) == positive.end()) {
    throw PreconditionError("sink " + Name(sink) + " is not in V+");
  }
  return MaxXFlowImpl(g, g.Boundary(), sink);
}

VertexId DefaultSink(const XGraph& g) {
  const std::vector<VertexId> candidates = SinkCandidates(g, g.Boundary());
  if (candidates.empty()) throw InvalidInput("X-graph has no positive vertex");
  return candidates.front();
}

Flow SaturatingXFlow(const XGraph& g, SolveTrace* trace) {
  RequireValid(ValidateXGraph(g), "X-graph");
  std::optional<Flow> f = XSolver(trace).Solve(g, g.Boundary(), 0);
  if (!f) throw NoSolution("X-graph admits no saturating X-flow for any sink");
  return std::move(*f);
}

Rational BoundaryWeight(const BarXGraph& g) { return BoundaryWeightOf(g); }

Flow SaturatingBarXFlow(const BarXGraph& g, SolveTrace* trace) {
  RequireValid(StructuralViolations(ValidateBarXGraph(g)), "bar X-graph");
  const Rational weight = BoundaryWeight(g);
  if (weight >= 1) {
    throw PreconditionError("boundary weight " + FormatRational(weight) + " is not below 1");
  }
  Flow f = BarSolver(trace).Solve(g, 0);
  for (VertexId a : g.Boundary()) {
    for (VertexId y : g.Neighbors(a)) f.value += f.At(a, y);
  }
  return f;
}

namespace {

// Checks shared by X-flows and bar X-flows. `loop_at` says where a loop is
// permitted; `exempt` lists vertices without a conservation requirement.
void CheckCommon(const WeightedGraph& g, const Flow& f, const std::set<VertexId>& exempt,
                 ValidationReport& report) {
  for (const auto& [key, value] : f.values) {
    if (!g.HasEdge(key.first, key.second)) {
      report.violations.push_back({"flow-edge-set", "flow on non-edge " + EdgeName(key.first, key.second)});
    }
  }
  for (const auto& [key, w] : g.DirectedEdges()) {
    const auto [a, b] = key;
    const Rational fv = f.At(a, b);
    if (a == b) {
      if (fv < 0) report.violations.push_back({"flow-antisymmetry", "negative loop flow at " + Name(a)});
      continue;
    }
    if (a < b && fv != -f.At(b, a)) {
      report.violations.push_back({"flow-antisymmetry", "f" + EdgeName(a, b) + " != -f" + EdgeName(b, a)});
    }
    if (Abs(fv) > Abs(w)) {
      report.violations.push_back({"capacity", "|f" + EdgeName(a, b) + "| = " + FormatRational(Abs(fv)) +
                                                   " exceeds |w| = " + FormatRational(Abs(w))});
    }
  }
  for (VertexId v : g.VertexIds()) {
    if (exempt.count(v)) continue;
    Rational net = 0;
    for (VertexId a : g.Neighbors(v)) {
      if (a != v) net += f.At(a, v);
    }
    if (net != 0) {
      report.violations.push_back({"conservation", "net inflow " + FormatRational(net) + " at vertex " + Name(v)});
    }
  }
}

void CheckSignAgreement(const WeightedGraph& g, const Flow& f, VertexId v, const char* rule,
                        ValidationReport& report) {
  for (VertexId y : g.Neighbors(v)) {
    if (y == v) continue;
    const Rational fv = f.At(v, y);
    if (fv != 0 && Sign(fv) != Sign(g.Weight(v, y))) {
      report.violations.push_back({rule, "f" + EdgeName(v, y) + " has the wrong sign"});
    }
  }
}

}  // namespace

ValidationReport VerifyXFlow(const XGraph& g, const Flow& f, bool require_saturating) {
  ValidationReport report;
  const VertexId boundary = g.Boundary();
  if (!f.sink || !g.HasVertex(*f.sink) || *f.sink == boundary) {
    report.violations.push_back({"sink", "flow has no valid sink"});
    return report;
  }
  const VertexId sink = *f.sink;
  if (g.Flux(sink) <= 0 || IncidentSign(g, sink) <= 0) {
    report.violations.push_back({"sink", "sink " + Name(sink) + " is not in V+"});
  }
  CheckCommon(g, f, {boundary, sink}, report);
  CheckSignAgreement(g, f, boundary, "boundary-sign", report);
  CheckSignAgreement(g, f, sink, "sink-sign", report);
  Rational value = 0;
  for (VertexId y : g.Neighbors(boundary)) {
    if (y != boundary) value += f.At(boundary, y);
  }
  if (value != f.value) {
    report.violations.push_back({"value", "recorded value " + FormatRational(f.value) + " but edges give " +
                                              FormatRational(value)});
  }
  if (require_saturating) {
    bool saturated = value == 1;
    for (VertexId y : g.Neighbors(boundary)) {
      if (y != boundary && f.At(boundary, y) != g.Weight(boundary, y)) saturated = false;
    }
    if (!saturated) {
      report.violations.push_back({"saturation", "value " + FormatRational(value) + ", not saturating"});
    }
  }
  return report;
}

ValidationReport VerifyBarXFlow(const BarXGraph& g, const Flow& f, bool require_saturating) {
  ValidationReport report;
  const std::vector<VertexId> boundary = g.Boundary();
  CheckCommon(g, f, std::set<VertexId>(boundary.begin(), boundary.end()), report);
  for (VertexId a : boundary) {
    CheckSignAgreement(g, f, a, "boundary-sign", report);
    if (!require_saturating) continue;
    for (VertexId y : g.Neighbors(a)) {
      if (f.At(a, y) != g.Weight(a, y)) {
        report.violations.push_back({"saturation", "boundary edge " + EdgeName(a, y) + " not saturated"});
      }
    }
  }
  return report;
}

}  // namespace ymcert
