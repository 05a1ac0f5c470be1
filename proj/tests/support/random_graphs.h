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

// Seeded generators of valid X-graphs and bar X-graphs for property tests.

#ifndef YMCERT_TESTS_SUPPORT_RANDOM_GRAPHS_H_
#define YMCERT_TESTS_SUPPORT_RANDOM_GRAPHS_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ymcert/rational.h"
#include "ymcert/xgraph.h"

namespace ymcert::testing {

inline int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Splits `total` into `parts` positive integers.
inline std::vector<int> Composition(std::mt19937_64& rng, int total, int parts) {
  std::vector<int> cuts;
  for (int k = 1; k < total; ++k) cuts.push_back(k);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> out;
  int prev = 0;
  for (int c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

// Couples source masses to sink masses in units of 1/den, each unit joining a
// random source with remaining mass to a random sink with remaining mass.
inline std::map<std::pair<int, int>, int> RandomCoupling(std::mt19937_64& rng, std::vector<int> sources,
                                                         std::vector<int> sinks) {
  std::map<std::pair<int, int>, int> units;
  int remaining = 0;
  for (int s : sources) remaining += s;
  for (; remaining > 0; --remaining) {
    std::vector<int> si, ti;
    for (int i = 0; i < static_cast<int>(sources.size()); ++i) {
      if (sources[i] > 0) si.push_back(i);
    }
    for (int j = 0; j < static_cast<int>(sinks.size()); ++j) {
      if (sinks[j] > 0) ti.push_back(j);
    }
    const int i = si[Uniform(rng, 0, static_cast<int>(si.size()) - 1)];
    const int j = ti[Uniform(rng, 0, static_cast<int>(ti.size()) - 1)];
    ++units[{i, j}];
    --sources[i];
    --sinks[j];
  }
  return units;
}

// X-graph of the kind produced from a charged field: the boundary (id 0) and
// negative charges (ids 1..) send their mass to positive charges, with
// weights that are multiples of 1/den. At most 10 vertices.
inline XGraph RandomFieldXGraph(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int npos = Uniform(rng, 1, 5);
  int nneg = Uniform(rng, 0, 4);
  std::vector<int> dneg;
  int total = 0;
  do {
    dneg.clear();
    for (int k = 0; k < nneg; ++k) dneg.push_back(Uniform(rng, 1, 2));
    total = 1;
    for (int d : dneg) total += d;
    if (total < npos) ++nneg;
  } while (total < npos);
  const std::vector<int> dpos = Composition(rng, total, npos);
  static const int kDenominators[] = {2, 3, 4, 6, 12};
  const int den = kDenominators[Uniform(rng, 0, 4)];

  std::vector<int> sources{den}, sinks;
  for (int d : dneg) sources.push_back(d * den);
  for (int d : dpos) sinks.push_back(d * den);
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  for (int v = 1; v <= nneg + npos; ++v) g.AddVertex(v, VertexKind::kCharge);
  for (const auto& [ij, count] : RandomCoupling(rng, sources, sinks)) {
    g.AddToEdge(ij.first, 1 + nneg + ij.second, Rational(count, den));
  }
  return XGraph(std::move(g));
}

// Bar X-graph whose boundary sends mass m into the interior and receives m
// back, so its boundary weight is 2m. Interior charges carry integer flux.
// With `small` the boundary weight stays below one; otherwise it is at least
// one.
inline BarXGraph RandomBarXGraph(std::uint64_t seed, bool small) {
  std::mt19937_64 rng(seed);
  static const int kDenominators[] = {4, 6, 12};
  const int den = kDenominators[Uniform(rng, 0, 2)];
  const int m = small ? Uniform(rng, 1, (den - 1) / 2) : Uniform(rng, den / 2, den);
  const int nin = std::min(m, Uniform(rng, 1, 2));   // boundary vertices feeding the interior
  const int nout = std::min(m, Uniform(rng, 1, 2));  // boundary vertices draining it
  const int nneg = Uniform(rng, 0, 3);
  int total = 0;
  std::vector<int> dneg;
  for (int k = 0; k < nneg; ++k) {
    dneg.push_back(Uniform(rng, 1, 2));
    total += dneg.back();
  }
  const int npos = total == 0 ? 0 : Uniform(rng, 1, std::min(total, 3));
  const std::vector<int> dpos = npos == 0 ? std::vector<int>{} : Composition(rng, total, npos);

  // Sources: boundary inlets, then negative charges. Sinks: positive charges,
  // then boundary outlets. Inlets and outlets share the mass m.
  std::vector<int> sources = Composition(rng, m, nin);
  const int inlets = static_cast<int>(sources.size());
  for (int d : dneg) sources.push_back(d * den);
  std::vector<int> sinks;
  for (int d : dpos) sinks.push_back(d * den);
  const std::vector<int> outlet = Composition(rng, m, nout);
  const int npos_sinks = static_cast<int>(sinks.size());
  for (int d : outlet) sinks.push_back(d);

  WeightedGraph g;
  int next = 0;
  std::vector<int> source_id, sink_id;
  for (int k = 0; k < inlets; ++k) {
    g.AddVertex(next, VertexKind::kBoundary);
    source_id.push_back(next++);
  }
  for (int k = 0; k < nneg; ++k) {
    g.AddVertex(next, VertexKind::kCharge);
    source_id.push_back(next++);
  }
  for (int k = 0; k < npos_sinks; ++k) {
    g.AddVertex(next, VertexKind::kCharge);
    sink_id.push_back(next++);
  }
  for (std::size_t k = 0; k < outlet.size(); ++k) {
    g.AddVertex(next, VertexKind::kBoundary);
    sink_id.push_back(next++);
  }
  for (const auto& [ij, count] : RandomCoupling(rng, sources, sinks)) {
    g.AddToEdge(source_id[ij.first], sink_id[ij.second], Rational(count, den));
  }
  return BarXGraph(std::move(g));
}

}  // namespace ymcert::testing

#endif  // YMCERT_TESTS_SUPPORT_RANDOM_GRAPHS_H_
