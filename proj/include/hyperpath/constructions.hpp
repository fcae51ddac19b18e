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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

/// Parameters and vertex roles of a generated graph, so callers can address
/// "center", "base", "dubleton 3", ... without knowing the label layout.
struct ConstructionSpec {
  std::string name;
  std::map<std::string, long long> params;
  std::map<std::string, VertexSet> labeling;
  std::vector<std::string> warnings;
};

struct Construction {
  Hypergraph graph;
  ConstructionSpec spec;
};

/// Thick clique on n vertices: dubletons {2i, 2i+1}, every pair of
/// dubletons is an edge. For odd n the top vertex stays isolated.
Construction thick_clique(std::size_t n);

/// (4r)-uniform thick clique: every 2r dubletons form an edge.
Construction thick_clique_general(std::size_t n, int r);

/// Complete 2-star: every {c1, c2, x, y} with x < y leaves. k = 4.
Construction two_star(std::size_t n, std::array<Vertex, 2> centers, VertexSet leaves);
/// Complete 2-star on vertices 0..leaves+1 with centers {0, 1}.
Construction complete_two_star(std::size_t leaves);

/// Complete star: every {c, x, y} with x < y leaves. k = 3.
Construction star(std::size_t n, Vertex center, VertexSet leaves);
/// Complete star on vertices 0..leaves with center 0.
Construction complete_star(std::size_t leaves);

/// All edges {x_i, y_i, z_j}; x_i = i, y_i = pairs + i, z_j = 2 * pairs + j.
Construction quasi_bipartite(std::size_t pairs, std::size_t zs);
/// quasi_bipartite with pairs * (n - 2 pairs) = floor(n^2 / 8); among the
/// maximizers the largest pair count is taken, which keeps the degree low.
Construction max_quasi_bipartite(std::size_t n);

/// All 4-subsets of {0..7} with at least three elements in {0, 1, 2, 3}.
Construction f413();

enum class GalleryGraph { H41, H42, H43 };

GalleryGraph gallery_from_name(std::string_view name);
std::string_view gallery_name(GalleryGraph g);

/// The three extremal 4-graphs built from size-`k` 2-stars:
///  H41: three 2-stars + three edges joining their centers + a disjoint F413
///       (3k + 8 vertices),
///  H42: thick clique on 10 vertices + three 2-stars whose centers are
///       dubletons {0,1}, {2,3}, {4,5} of that clique (3k + 4 vertices),
///  H43: three 2-stars + three joining edges + a disjoint complete K^4_6
///       (3k + 6 vertices).
/// k >= 6 is required; H41 below k = 100 carries a warning.
Construction gallery(GalleryGraph g, std::size_t k);

/// Subgraph of the thick clique with exactly m edges whose dubleton degrees
/// differ by at most one (Havel-Hakimi on the dubleton graph).
Construction near_regular_thick_subgraph(std::size_t n, std::size_t m);

/// Vertex-disjoint complete (2-)stars used by balanced_star_union: star i has
/// `vertices[i]` vertices (center included) and carries `edges[i]` edges.
struct StarPlan {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::size_t max_degree = 0;
};

/// Union of at most four vertex-disjoint (2-)stars with exactly m edges
/// minimizing the maximum degree. k = 4 uses 2-stars, k = 3 stars.
StarPlan star_union_plan(std::size_t n, std::size_t m, int k);
Construction balanced_star_union(std::size_t n, std::size_t m, int k);

/// Maximum edges in a P^4_2-free 4-graph on n vertices (n >= 4).
std::uint64_t h_formula(std::size_t n);
/// Maximum edges in a P^3_3-free 3-graph on n vertices (n >= 3).
std::uint64_t hhat_formula(std::size_t n);

/// Names accepted by build_construction, e.g. "thick-clique".
std::vector<std::string> construction_names();
/// Dispatches by name; `params` keys depend on the construction.
Construction build_construction(std::string_view name, const std::map<std::string, long long>& params);

}  // namespace hyperpath
