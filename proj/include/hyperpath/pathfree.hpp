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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

/// A loose path e_1, ..., e_l found in a hypergraph. Consecutive edges share
/// exactly one vertex (listed in `junctions`), non-consecutive edges are
/// disjoint.
struct PathWitness {
  std::vector<std::size_t> edge_ids;  // indices into the source graph
  std::vector<VertexSet> edges;
  VertexSet junctions;  // junctions[i] = edges[i] ∩ edges[i+1]
};

/// Checks the loose-path invariants of `w` against `h`: ids resolve to the
/// listed edges, linearity, and k*l - l + 1 distinct vertices.
bool is_valid_witness(const Hypergraph& h, const PathWitness& w);

/// Finds the loose path of `length` edges whose edge-id sequence is
/// lexicographically least, or nullopt if the graph is free of it. The
/// result does not depend on the OpenMP thread count.
std::optional<PathWitness> find_loose_path(const Hypergraph& h, int length);

/// For every edge, a bitmask over its vertex positions: bit j is set when
/// some other edge meets it in exactly {edge[j]}. Requires k <= 32.
std::vector<std::uint32_t> linear_partner_mask(const Hypergraph& h);

/// True iff no two edges of the 4-graph meet in exactly one vertex.
bool is_p42_free(const Hypergraph& h);

/// Three edges pairwise meeting in single, distinct vertices (6 vertices).
std::optional<std::array<std::size_t, 3>> find_triangle(const Hypergraph& h);
bool contains_triangle(const Hypergraph& h);

/// True iff the edges split into at most `max_stars` vertex-disjoint groups
/// whose edges all contain a common `center_size`-set. Isolated vertices are
/// allowed. Only (k=4, c=2) and (k=3, c=1) are accepted.
bool is_star_union(const Hypergraph& h, int max_stars, int center_size);

namespace reference {

/// O(m^2) scan for two edges meeting in exactly one vertex.
std::optional<std::pair<std::size_t, std::size_t>> find_linear_pair(const Hypergraph& h);

/// Plain backtracking over all edges in index order, no pruning beyond
/// the path invariants. Returns the same witness as find_loose_path.
std::optional<PathWitness> find_loose_path(const Hypergraph& h, int length);

/// O(m^3) triangle scan.
bool contains_triangle(const Hypergraph& h);

}  // namespace reference

}  // namespace hyperpath
