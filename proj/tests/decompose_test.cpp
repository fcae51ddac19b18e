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

#include <gtest/gtest.h>

#include "hyperpath/constructions.hpp"
#include "hyperpath/decompose.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/pathfree.hpp"
#include "test_util.hpp"

namespace hyperpath {
namespace {

void expect_valid(const Decomposition& d, const Hypergraph& h) {
  const auto rep = validate(d, h);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

TEST(Classify, FourGraphShapes) {
  const auto tc = thick_clique(24).graph;
  EXPECT_EQ(classify_edge_signature(tc, 0).kind, SignatureKind::TwoDisjointDubletons);
  const auto st = complete_two_star(12).graph;
  EXPECT_EQ(classify_edge_signature(st, 0).kind, SignatureKind::DubletonPlusTwoTriples);
  const auto lone = Hypergraph::from_edges(4, 4, {{0, 1, 2, 3}});
  const auto other = classify_edge_signature(lone, 0);
  EXPECT_EQ(other.kind, SignatureKind::Other);
  EXPECT_FALSE(other.reason.empty());
  EXPECT_THROW(classify_edge_signature(lone, 1), InvalidArgument);
}

TEST(Classify, ThreeGraphShapes) {
  const auto q = quasi_bipartite(4, 5).graph;
  EXPECT_EQ(classify_edge_signature(q, 0).kind, SignatureKind::SingletonPlusDisjointDubleton);
  const auto s = complete_star(8).graph;
  EXPECT_EQ(classify_edge_signature(s, 0).kind, SignatureKind::TwoDubletonsMeetingInSingleton);
}

TEST(Classify, IncidenceOverloadAgrees) {
  const auto h = gallery(GalleryGraph::H42, 20).graph;
  const Incidence inc(h);
  for (std::size_t i = 0; i < h.m(); ++i) {
    EXPECT_EQ(classify_edge_signature(h, i).kind, classify_edge_signature(h, inc, i).kind);
  }
}

TEST(Decompose4, LargeThickCliqueIsAllS) {
  const auto h = thick_clique(24).graph;
  const auto d = decompose4(h);
  EXPECT_TRUE(d.R.empty());
  EXPECT_EQ(d.S.size(), 24u);
  EXPECT_TRUE(d.T.empty());
  EXPECT_EQ(d.H_S.size(), h.m());
  expect_valid(d, h);
}

TEST(Decompose4, SmallGraphPeelsAway) {
  const auto h = f413().graph;
  const auto d = decompose4(h);
  EXPECT_EQ(d.R.size(), 8u);
  EXPECT_EQ(d.H_R.size(), h.m());
  expect_valid(d, h);
}

TEST(Decompose4, TwoStarGivesOneGroup) {
  const auto h = complete_two_star(20).graph;
  const auto d = decompose4(h);
  EXPECT_EQ(d.S, (VertexSet{0, 1}));
  ASSERT_EQ(d.stars.size(), 1u);
  EXPECT_EQ(d.stars[0].center, (VertexSet{0, 1}));
  EXPECT_EQ(d.stars[0].leaves.size(), 20u);
  EXPECT_EQ(validate(d, h).largest_star, h.m());
  expect_valid(d, h);
}

TEST(Decompose4, Gallery) {
  for (auto g : {GalleryGraph::H41, GalleryGraph::H42, GalleryGraph::H43}) {
    const auto h = gallery(g, 30).graph;
    const auto d = decompose4(h);
    expect_valid(d, h);
    EXPECT_EQ(d.stars.size(), 3u) << gallery_name(g);
  }
}

TEST(Decompose4, RandomSubgraphsStayValid) {
  std::mt19937_64 rng(41);
  const auto base = gallery(GalleryGraph::H42, 24).graph;
  for (int t = 0; t < 60; ++t) {
    const auto h = testing::random_subgraph(rng, base, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const auto d = decompose4(h);
    EXPECT_TRUE(validate(d, h).ok());
    // R, S and T partition the vertex set.
    EXPECT_EQ(d.R.size() + d.S.size() + d.T.size(), h.n());
    EXPECT_EQ(d.H_R.size() + d.H_S.size() + d.H_T.size(), h.m());
  }
}

TEST(Decompose4, RejectsPath) {
  const auto h = Hypergraph::from_edges(4, 7, {{0, 1, 2, 3}, {3, 4, 5, 6}});
  EXPECT_THROW(decompose4(h), InvalidArgument);
  EXPECT_THROW(decompose4(complete_star(5).graph), InvalidArgument);
}

TEST(Decompose3, QuasiBipartiteAndStars) {
  const auto q = max_quasi_bipartite(30).graph;
  const auto dq = decompose3(q);
  expect_valid(dq, q);
  const auto s = complete_star(15).graph;
  const auto ds = decompose3(s);
  expect_valid(ds, s);
  EXPECT_EQ(ds.S, (VertexSet{0}));
  ASSERT_EQ(ds.stars.size(), 1u);
  EXPECT_EQ(ds.stars[0].edges.size(), s.m());
}

TEST(Decompose3, TriangleComponentGoesToR) {
  const auto tri = Hypergraph::from_edges(3, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
  const auto h = testing::disjoint_union(tri, complete_star(15).graph);
  const auto d = decompose3(h);
  EXPECT_EQ(d.triangle_vertices, (VertexSet{0, 1, 2, 3, 4, 5}));
  for (Vertex v = 0; v < 6; ++v) EXPECT_TRUE(std::binary_search(d.R.begin(), d.R.end(), v));
  expect_valid(d, h);
  EXPECT_THROW(decompose3(Hypergraph::from_edges(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}})), InvalidArgument);
}

TEST(Validate, CatchesBrokenPartition) {
  const auto h = complete_two_star(20).graph;
  auto d = decompose4(h);
  d.T.pop_back();
  const auto rep = validate(d, h);
  EXPECT_FALSE(rep.ok());
  ASSERT_NE(rep.find("vertex_partition"), nullptr);
  EXPECT_FALSE(rep.find("vertex_partition")->pass);
}

TEST(Validate, CatchesMisfiledEdge) {
  const auto h = complete_two_star(20).graph;
  auto d = decompose4(h);
  ASSERT_FALSE(d.H_T.empty());
  d.H_S.push_back(d.H_T.back());
  d.H_T.pop_back();
  EXPECT_FALSE(validate(d, h).ok());
}

TEST(Predicates, ThickCliqueAndQuasiBipartite) {
  EXPECT_TRUE(is_thick_clique_subgraph(near_regular_thick_subgraph(16, 20).graph));
  EXPECT_FALSE(is_thick_clique_subgraph(complete_two_star(6).graph));
  EXPECT_TRUE(is_quasi_bipartite(quasi_bipartite(3, 3).graph));
  EXPECT_FALSE(is_quasi_bipartite(complete_star(6).graph));
  EXPECT_EQ(peel_threshold(4), 10u);
  EXPECT_EQ(peel_threshold(3), 6u);
}

}  // namespace
}  // namespace hyperpath
