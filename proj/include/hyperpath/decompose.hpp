// Copyright 2026 The hyperpath Authors
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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

enum class SignatureKind {
  TwoDisjointDubletons,
  DubletonPlusTwoTriples,
  SingletonPlusDisjointDubleton,
  TwoDubletonsMeetingInSingleton,
  Other,
};

std::string_view to_string(SignatureKind kind);

struct SignatureClass {
  SignatureKind kind = SignatureKind::Other;
  std::string reason;  // only for Other
};

/// Classifies sg(e) over the other edges of `h`. Callers wanting the
/// residual reading pass the residual graph.
SignatureClass classify_edge_signature(const Hypergraph& h, std::size_t edge_id);
SignatureClass classify_edge_signature(const Hypergraph& h, const Incidence& inc, std::size_t edge_id);

/// One group of H_T: all edges through `center`.
struct StarGroup {
  VertexSet center;
  VertexSet leaves;
  std::vector<std::size_t> edges;
};

/// R/S/T split of a P-free graph. Edge lists hold ids into the input graph.
struct Decomposition {
  int k = 0;
  VertexSet R, S, T;
  std::vector<std::size_t> H_R, H_S, H_T;
  VertexSet peel_order;
  /// 3-graphs: vertices of the triangle components, a prefix of peel_order.
  VertexSet triangle_vertices;
  std::vector<StarGroup> stars;
  std::vector<std::string> warnings;
};

/// Requires a P^4_2-free 4-graph. Peels the lowest-labeled vertex of
/// residual degree <= 10 until none is left; S is the union of twins.
Decomposition decompose4(const Hypergraph& h);

/// Requires a P^3_3-free 3-graph. Components containing a triangle go to
/// R first, then vertices of residual degree <= 6 are peeled; S is the
/// union of twins and signature singletons.
Decomposition decompose3(const Hypergraph& h);

/// Degree threshold used while peeling: 10 for k = 4, 6 for k = 3.
std::size_t peel_threshold(int k);

/// H[V \ R] with the edge order of `h` preserved. `ids[i]` is the source id
/// of residual edge i.
struct Residual {
  Hypergraph graph;
  std::vector<std::size_t> ids;
};
Residual residual(const Hypergraph& h, const Decomposition& d);

struct InvariantCheck {
  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<VertexSet> witness;  // offending edges or vertex sets
};

struct ValidationReport {
  std::vector<InvariantCheck> checks;
  std::size_t largest_star = 0;

  bool ok() const;
  const InvariantCheck* find(std::string_view name) const;
};

/// Re-derives every structural property of `d` from `h` alone.
ValidationReport validate(const Decomposition& d, const Hypergraph& h);

/// True iff the edges of `h` can be covered by a thick clique on their
/// vertex set (every class of identical incidence has even size).
bool is_thick_clique_subgraph(const Hypergraph& h);
/// True iff `h` is a subgraph of a quasi-bipartite 3-graph.
bool is_quasi_bipartite(const Hypergraph& h);

}  // namespace hyperpath
