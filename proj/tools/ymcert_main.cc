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

// ymcert: certify charged fields, solve flows, evaluate the sphere bound and
// check the instanton identities. Exit codes: 0 output written, 2 invalid
// input, 3 internal invariant violation.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ymcert/certify.h"
#include "ymcert/errors.h"
#include "ymcert/flow.h"
#include "ymcert/generators.h"
#include "ymcert/instanton_check.h"
#include "ymcert/json_io.h"
#include "ymcert/sphere.h"

namespace {

using namespace ymcert;

constexpr int kExitInvalid = 2;
constexpr int kExitInvariant = 3;

void Emit(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << Dump(j);
  } else {
    WriteFile(path, Dump(j));
  }
}

Point ParsePoint(const std::string& text) {
  Point p;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      p.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("bad coordinate '" + item + "' in --sink");
    }
  }
  return p;
}

int Certify(const std::string& field_path, const std::string& report_path, double tolerance, int order) {
  ChargedField field;
  std::string digest = "fnv1a64:";
  try {
    const std::string text = ReadFile(field_path);
    digest += Fnv1a64(text);
    field = FieldFromJson(ParseJson(text));
    digest = FieldDigest(field);
    Emit(report_path, CertificateToJson(Certify(field, {tolerance, order})));
    return 0;
  } catch (const InvalidInput& e) {
    Emit(report_path, CertificateToJson(InvalidInputCertificate(digest, e.what(), tolerance)));
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
}

int SolveFlow(const std::string& graph_path, const std::string& out_path) {
  const WeightedGraph g = GraphFromJson(ParseJson(ReadFile(graph_path)));
  const std::size_t boundary = g.BoundaryIds().size();
  if (boundary == 1) {
    const XGraph x(g);
    const ValidationReport report = ValidateXGraph(x);
    if (!report.valid()) throw InvalidInput(report.Summary());
    Flow f;
    try {
      f = SaturatingXFlow(x);
    } catch (const NoSolution& e) {
      throw InvalidInput(e.what());
    }
    const ValidationReport check = VerifyXFlow(x, f);
    if (!check.valid()) throw InvariantViolation("flow check failed: " + check.Summary());
    Emit(out_path, FlowToJson(x, f));
    return 0;
  }
  const BarXGraph b(g);
  Flow f;
  try {
    f = SaturatingBarXFlow(b);
  } catch (const PreconditionError& e) {
    throw InvalidInput(e.what());
  }
  const ValidationReport check = VerifyBarXFlow(b, f);
  if (!check.valid()) throw InvariantViolation("flow check failed: " + check.Summary());
  Emit(out_path, FlowToJson(b, f));
  return 0;
}

int Bound(int dim, const std::string& sink_text, int order, const std::string& out_path) {
  const Point a = sink_text.empty() ? Point(dim, 0.0) : ParsePoint(sink_text);
  if (static_cast<int>(a.size()) != dim) throw InvalidInput("--sink needs " + std::to_string(dim) + " coordinates");
  const SphereQuadrature q = GaussProductQuadrature(dim, order);
  const double area = SphereArea(dim);
  const double value = ChordIntegral(q, a);
  const Point gradient = ChordGradient(q, a);
  Emit(out_path, {{"dim", dim},
                  {"sink", a},
                  {"order", order},
                  {"nodes", q.size()},
                  {"value", value},
                  {"normalized_value", value / area},
                  {"gradient", gradient},
                  {"area", area}});
  return 0;
}

int InstantonCheck(int order, int samples, std::uint64_t seed, const std::string& out_path) {
  const InstantonReport report = RunInstantonCheck(order, samples, seed);
  Emit(out_path, report.json);
  if (!report.passed()) {
    for (const InstantonCheckLine& l : report.checks) {
      if (!l.passed) std::cerr << "check failed: " << l.name << " = " << l.value << "\n";
    }
    return kExitInvariant;
  }
  return 0;
}

int GenExamples(const std::string& kind, std::uint64_t seed, int dim, const std::string& out_path) {
  const ChargedField f = GenerateField(kind, seed, dim);
  const FieldReport report = ValidateField(f);
  if (!report.valid()) throw InvariantViolation("generated field is invalid: " + report.Summary());
  Emit(out_path, FieldToJson(f));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flow certificates for charged fields and instanton checks"};
  app.require_subcommand(1);

  std::string field_path, report_path;
  double tolerance = 1e-9;
  int certify_order = 16;
  CLI::App* certify = app.add_subcommand("certify", "Certify a charged field");
  certify->add_option("--field", field_path, "field JSON")->required();
  certify->add_option("--report", report_path, "certificate output (default stdout)");
  certify->add_option("--tolerance", tolerance, "tolerance of the floating-point links")->capture_default_str();
  certify->add_option("--order", certify_order, "sphere rule order of the normalized bound")
      ->capture_default_str()
      ->check(CLI::Range(2, 64));

  std::string graph_path, flow_out;
  CLI::App* solve = app.add_subcommand("solve-flow", "Saturating flow of an X-graph or bar X-graph");
  solve->add_option("--graph", graph_path, "graph JSON")->required();
  solve->add_option("--out", flow_out, "flow output (default stdout)");

  int bound_dim = 5, bound_order = 32;
  std::string sink_text, bound_out;
  CLI::App* bound = app.add_subcommand("bound", "Chord integral over the unit sphere");
  bound->add_option("--dim", bound_dim, "ambient dimension")->capture_default_str()->check(CLI::Range(2, 8));
  bound->add_option("--sink", sink_text, "comma-separated sink point (default origin)");
  bound->add_option("--order", bound_order, "product rule order")->capture_default_str()->check(CLI::Range(2, 64));
  bound->add_option("--out", bound_out, "output (default stdout)");

  int inst_order = 64, samples = 100;
  std::uint64_t inst_seed = 7;
  std::string inst_out;
  CLI::App* inst = app.add_subcommand("instanton-check", "Residuals and integrals of the charge-one instanton");
  inst->add_option("--order", inst_order, "quadrature order")->capture_default_str()->check(CLI::Range(8, 256));
  inst->add_option("--samples", samples, "random sample points")->capture_default_str()->check(CLI::Range(1, 100000));
  inst->add_option("--seed", inst_seed, "sampling seed")->capture_default_str();
  inst->add_option("--out", inst_out, "output (default stdout)");

  std::string kind, gen_out;
  std::uint64_t gen_seed = 0;
  int gen_dim = 5;
  CLI::App* gen = app.add_subcommand("gen-examples", "Write a generated field");
  gen->add_option("kind", kind, "radial, detour or multi-charge-random")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--dim", gen_dim, "ambient dimension")->capture_default_str()->check(CLI::Range(2, 8));
  gen->add_option("--out", gen_out, "output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*certify) return Certify(field_path, report_path, tolerance, certify_order);
    if (*solve) return SolveFlow(graph_path, flow_out);
    if (*bound) return Bound(bound_dim, sink_text, bound_order, bound_out);
    if (*inst) return InstantonCheck(inst_order, samples, inst_seed, inst_out);
    if (*gen) return GenExamples(kind, gen_seed, gen_dim, gen_out);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitInvalid;
}
