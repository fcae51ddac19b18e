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
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hyperpath {

using Vertex = std::uint32_t;
/// A vertex subset, always kept sorted ascending without repeats.
using VertexSet = std::vector<Vertex>;

/// Binomial coefficient; 0 when k > n.
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

/// A k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored flat (m * k vertex ids). The edge list is canonical:
/// every edge is ascending and edges are sorted lexicographically with no
/// duplicates, so equality and serialization are deterministic. Values are
/// immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Empty edge set.
  Hypergraph(int k, std::size_t n);

  /// Canonicalizes `edges`. Throws InvalidArgument on wrong arity, repeated
  /// vertex inside an edge, vertex >= n or a duplicate edge.
  static Hypergraph from_edges(int k, std::size_t n, std::vector<VertexSet> edges);

  int k() const { return k_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return k_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(k_); }
  bool empty() const { return flat_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  VertexSet edge_set(std::size_t i) const {
    auto e = edge(i);
    return {e.begin(), e.end()};
  }
  std::vector<VertexSet> edge_list() const;

  /// Index of `e` (sorted) in the canonical edge order, or m() if absent.
  std::size_t find_edge(std::span<const Vertex> e) const;
  bool contains_edge(std::span<const Vertex> e) const { return find_edge(e) != m(); }

  /// Keeps the listed edge indices (any order); vertex labels unchanged.
  Hypergraph subgraph(std::span<const std::size_t> edge_ids) const;
  /// Drops the listed edge indices; vertex labels unchanged.
  Hypergraph without_edges(std::span<const std::size_t> edge_ids) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int k_ = 0;
  std::size_t n_ = 0;
  std::vector<Vertex> flat_;
};

/// Vertex -> incident edge ids, compressed-row layout. Edge ids per vertex
/// are ascending.
class Incidence {
 public:
  explicit Incidence(const Hypergraph& h);
  std::span<const std::uint32_t> edges_of(Vertex v) const {
    return {ids_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> ids_;
};

std::size_t degree(const Hypergraph& h, Vertex v);
std::vector<std::size_t> degrees(const Hypergraph& h);
std::size_t max_degree(const Hypergraph& h);
/// Vertices contained in at least one edge.
VertexSet non_isolated(const Hypergraph& h);

/// Size of the intersection of two ascending vertex ranges.
std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet intersect(std::span<const Vertex> a, std::span<const Vertex> b);

/// Projection of the edge family onto a vertex subset: every distinct
/// nonempty S ∩ e. When S is itself an edge, that edge is skipped.
struct Signature {
  VertexSet base;
  std::vector<VertexSet> parts;  // sorted, deduplicated

  std::size_t count_of_size(std::size_t s) const;
};

Signature signature(const Hypergraph& h, std::span<const Vertex> s);
/// Same result, visiting only edges incident to `s`.
Signature signature(const Hypergraph& h, const Incidence& inc, std::span<const Vertex> s);

/// Pairs {x, y} of non-isolated vertices that no edge meets in exactly one
/// of them.
struct TwinSet {
  std::vector<std::pair<Vertex, Vertex>> pairs;  // x < y, sorted
  VertexSet covered;
  /// Classes of identical incidence with at least two members; a class with
  /// more than two members means overlapping twin pairs.
  std::vector<VertexSet> classes;
};

TwinSet twins(const Hypergraph& h);

struct Components {
  std::vector<VertexSet> parts;  // ordered by smallest vertex
  VertexSet isolated;
  /// Component index of every edge.
  std::vector<std::size_t> edge_component;
};

Components components(const Hypergraph& h);

namespace reference {
/// Quadratic pairwise twin scan, kept to cross-check twins().
TwinSet twins(const Hypergraph& h);
}  // namespace reference

/// ".hg" text format: "k n m" header then m lines of k ascending ids,
/// lexicographically sorted. Parsing accepts unsorted lines and
/// canonicalizes them.
Hypergraph parse_hg(std::istream& in);
void write_hg(std::ostream& out, const Hypergraph& h);
std::string to_hg_string(const Hypergraph& h);
Hypergraph load(const std::string& path);
void store(const Hypergraph& h, const std::string& path);

}  // namespace hyperpath
