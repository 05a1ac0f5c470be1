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

#include "ymcert/certify.h"

#include <map>

#include "ymcert/errors.h"
#include "ymcert/flow.h"
#include "ymcert/sphere.h"

namespace ymcert {
namespace {

ChainLink Link(std::string name, double lhs, double rhs, double tolerance) {
  const double slack = lhs - rhs;
  return {std::move(name), lhs, rhs, slack, slack >= -tolerance};
}

Json PointJson(const Point& p) { return Json(p); }

// Start points of sphere-to-charge arcs with their total weights.
std::map<Point, Rational> FieldAtoms(const ChargedField& f) {
  std::map<Point, Rational> atoms;
  for (const Arc& a : f.measure.arcs) {
    if (OnSphere(a.Start()) && !OnSphere(a.End())) atoms[a.Start()] += a.weight;
  }
  return atoms;
}

}  // namespace

std::string FieldDigest(const ChargedField& f) { return "fnv1a64:" + Fnv1a64(FieldToJson(f).dump()); }

Certificate InvalidInputCertificate(const std::string& digest, const std::string& error, double tolerance) {
  Certificate c;
  c.digest = digest;
  c.tolerance = tolerance;
  c.verdict = "invalid-input";
  c.error = error;
  return c;
}

Certificate Certify(const ChargedField& f, const CertifyOptions& options) {
  const FieldReport report = ValidateField(f);
  if (!report.valid()) throw InvalidInput(report.Summary());

  Certificate c;
  c.digest = FieldDigest(f);
  c.tolerance = options.tolerance;
  c.dim = f.dim;
  c.charges = f.charges.size();
  c.arcs = f.measure.arcs.size();
  c.mass = Mass(f.measure);

  const XGraph g = GraphFromField(f);
  SolveTrace trace;
  Flow flow;
  try {
    flow = SaturatingXFlow(g, &trace);
  } catch (const std::exception& e) {
    throw InvariantViolation(std::string("saturating flow failed on a field graph: ") + e.what());
  }
  const ValidationReport verified = VerifyXFlow(g, flow);
  if (!verified.valid()) throw InvariantViolation("flow check failed: " + verified.Summary());
  if (flow.value != 1) throw InvariantViolation("flow value " + FormatRational(flow.value) + ", not 1");
  c.flow_value = flow.value;
  c.sink = *flow.sink;
  c.sink_point = f.charges.at(c.sink - 1).p;
  c.cut_steps = static_cast<int>(trace.cut_steps.size());
  c.zeroflow_violations = trace.zeroflow_violations;
  c.backtracks = trace.backtracks;
  if (c.zeroflow_violations != 0) throw InvariantViolation("s+ != s- in a cut step");

  const ArcMeasure reweighted = Reweight(f, AlphaFromFlow(PartitionClasses(f), flow));
  c.reweighted_mass = Mass(reweighted);

  Recomposition rec;
  try {
    rec = Recompose(reweighted, c.sink_point);
  } catch (const InvalidInput& e) {
    throw InvariantViolation(std::string("recomposition failed: ") + e.what());
  }
  c.paths = rec.paths.size();
  c.cycles_cancelled = rec.cycles_cancelled;
  c.cancelled_mass = rec.cancelled_mass;
  std::map<Point, Rational> starts;
  Rational total = 0;
  for (const CompositePath& p : rec.paths) {
    if (p.pts.back() != c.sink_point) throw InvariantViolation("recomposed path misses the sink");
    starts[p.pts.front()] += p.weight;
    total += p.weight;
    c.path_mass += ToDouble(p.weight) * p.length;
  }
  if (total != flow.value) throw InvariantViolation("recomposed weight " + FormatRational(total) + " differs from the flow value");
  if (starts != FieldAtoms(f)) throw InvariantViolation("recomposition changed the boundary starts");
  c.chord_bound = ChordBound(rec.paths, c.sink_point);

  std::vector<Point> atoms;
  std::vector<double> weights;
  Point centroid(f.dim, 0.0);
  c.antipodal = true;
  for (const auto& [x, w] : starts) {
    atoms.push_back(x);
    weights.push_back(ToDouble(w));
    c.atom_weight += w;
    for (int k = 0; k < f.dim; ++k) centroid[k] += ToDouble(w) * x[k];
    Point minus = x;
    for (double& v : minus) v = -v;
    auto it = starts.find(minus);
    if (it == starts.end() || it->second != w) c.antipodal = false;
  }
  c.atoms = atoms.size();
  c.atom_centroid_norm = Norm(centroid) / ToDouble(c.atom_weight);
  const DiscreteMinimum dm = MinimizeDiscreteChord(atoms, weights, c.sink_point);
  c.discrete_minimizer = dm.point;
  c.discrete_minimum = dm.value;

  const SphereQuadrature q = GaussProductQuadrature(f.dim, options.order);
  c.optimal_sink_bound = ChordIntegral(q, Point(f.dim, 0.0)) / SphereArea(f.dim);
  c.quadrature = q.method + " order " + std::to_string(q.order) + ", " + std::to_string(q.size()) + " nodes";

  const double tol = options.tolerance;
  c.chain = {
      Link("mass(field) >= mass(reweighted)", c.mass, c.reweighted_mass, tol),
      Link("mass(reweighted) >= sum w length(paths)", c.reweighted_mass, c.path_mass, tol),
      Link("sum w length(paths) >= chord bound at sink", c.path_mass, c.chord_bound, tol),
      Link("chord bound at sink >= min_a sum w |x - a|", c.chord_bound, c.discrete_minimum, tol),
      Link("min_a sum w |x - a| >= normalized chord integral at 0", c.discrete_minimum, c.optimal_sink_bound, tol),
  };
  for (std::size_t i = 0; i + 1 < c.chain.size(); ++i) {
    if (!c.chain[i].holds) throw InvariantViolation("chain link '" + c.chain[i].name + "' fails");
  }
  // The last link needs boundary starts that average like the uniform
  // measure; without it the certified bound is the discrete minimum.
  c.lower_bound = c.chain.back().holds ? c.optimal_sink_bound : c.discrete_minimum;
  c.tight = c.mass <= c.lower_bound + tol;
  c.verdict = c.tight ? "optimal-consistent" : "strictly-suboptimal";
  return c;
}

Json CertificateToJson(const Certificate& c) {
  Json out = {{"digest", c.digest}, {"tolerance", c.tolerance}, {"verdict", c.verdict}};
  if (c.verdict == "invalid-input") {
    out["error"] = c.error;
    return out;
  }
  out["input"] = {{"dim", c.dim}, {"charges", c.charges}, {"arcs", c.arcs}};
  out["mass"] = c.mass;
  out["flow"] = {{"value", FormatRational(c.flow_value)},
                 {"sink", c.sink},
                 {"sink_point", PointJson(c.sink_point)},
                 {"verified", true},
                 {"cut_steps", c.cut_steps},
                 {"zeroflow_violations", c.zeroflow_violations},
                 {"backtracks", c.backtracks}};
  out["reweighted_mass"] = c.reweighted_mass;
  out["recomposition"] = {{"paths", c.paths},
                          {"path_mass", c.path_mass},
                          {"cycles_cancelled", c.cycles_cancelled},
                          {"cancelled_mass", c.cancelled_mass}};
  out["chord_bound"] = c.chord_bound;
  out["sampling"] = {{"atoms", c.atoms},
                     {"total_weight", FormatRational(c.atom_weight)},
                     {"centroid_norm", c.atom_centroid_norm},
                     {"antipodal", c.antipodal}};
  out["discrete_minimum"] = {{"value", c.discrete_minimum}, {"point", PointJson(c.discrete_minimizer)}};
  out["optimal_sink_bound"] = {{"value", c.optimal_sink_bound}, {"quadrature", c.quadrature}};
  Json chain = Json::array();
  for (const ChainLink& l : c.chain) {
    chain.push_back({{"link", l.name}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"slack", l.slack}, {"holds", l.holds}});
  }
  out["chain"] = chain;
  out["exact_checks"] = {{"flow_value_is_one", c.flow_value == 1},
                         {"boundary_edges_saturated", true},
                         {"path_weight_equals_flow_value", true},
                         {"boundary_starts_preserved", true}};
  out["lower_bound"] = c.lower_bound;
  out["tight"] = c.tight;
  out["mass_minus_bound"] = c.mass - c.lower_bound;
  return out;
}

}  // namespace ymcert
