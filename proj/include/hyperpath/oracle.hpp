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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

enum class SearchMethod { Exhaustive, BranchAndBound, CliqueReduction, Sandwich };

std::string_view to_string(SearchMethod m);

/// Zero means unlimited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
};

struct SearchResult {
  std::uint64_t value = 0;
  Hypergraph witness;
  std::uint64_t nodes_explored = 0;
  double seconds = 0.0;
  SearchMethod method = SearchMethod::Exhaustive;
  /// False when a budget ran out; `value` is then only the best bound found.
  bool complete = true;
  /// deletion_distance only: the removed edges.
  std::vector<VertexSet> deleted;
};

/// Largest number of edges of a P^k_l-free k-graph on n vertices, with the
/// lexicographically least optimal edge set as witness. Supported: l = 2
/// for any k, and (k, l) = (3, 3); at most 256 candidate edges.
SearchResult max_pfree_edges(int k, int l, std::size_t n, const SearchBudget& budget = {});

/// As max_pfree_edges, restricted to graphs containing `forced` (edges of a
/// k-graph on n vertices that must be P-free themselves).
SearchResult max_pfree_edges_containing(int k, int l, std::size_t n, const std::vector<VertexSet>& forced,
                                        const SearchBudget& budget = {});

/// Least maximum degree over P^k_l-free k-graphs with n vertices and m
/// edges. Throws Infeasible when m exceeds the extremal number.
SearchResult min_max_degree(int k, int l, std::size_t n, std::size_t m, const SearchBudget& budget = {});

/// Fewest edges whose removal leaves a union of at most t vertex-disjoint
/// stars with center size c. Sizes are tried in increasing order and the
/// lexicographically least deletion set of the optimal size is returned.
SearchResult deletion_distance(const Hypergraph& h, int t, int c, const SearchBudget& budget = {});

/// Exact maximum of a P^3_2-free 3-graph on n vertices.
SearchResult p32_max_edges(std::size_t n, const SearchBudget& budget = {});
/// floor((n+1)/4) + 3 floor(n/4).
std::uint64_t p32_formula(std::size_t n);

struct PinResult {
  bool determined = false;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::string lo_source;
  std::string hi_source;
};

/// Sandwiches f^4_2(n, m) between counting lower bounds and the maximum
/// degree of explicit constructions. Needs k = 4, l = 2 and
/// m <= C(floor(n/2), 2).
PinResult pin_f_value(int k, int l, std::size_t n, std::size_t m);

namespace reference {

/// Exhaustive scan over all edge subsets (m <= 24), for cross-checking.
std::size_t max_pfree_edges_bruteforce(int k, int l, std::size_t n);

}  // namespace reference

}  // namespace hyperpath
