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

#include <omp.h>

#include "hyperpath/constructions.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/pathfree.hpp"
#include "test_util.hpp"

namespace hyperpath {
namespace {

TEST(LoosePath, TwoEdgesSharingOneVertex) {
  auto h = Hypergraph::from_edges(4, 7, {{0, 1, 2, 3}, {3, 4, 5, 6}});
  auto w = find_loose_path(h, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->edge_ids, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(w->junctions, (VertexSet{3}));
  EXPECT_TRUE(is_valid_witness(h, *w));
  EXPECT_FALSE(is_p42_free(h));
}

TEST(LoosePath, SharedPairIsNotLoose) {
  auto h = Hypergraph::from_edges(4, 6, {{0, 1, 2, 3}, {0, 1, 4, 5}});
  EXPECT_FALSE(find_loose_path(h, 2).has_value());
  EXPECT_TRUE(is_p42_free(h));
}

TEST(LoosePath, ThreeEdgePath) {
  auto h = Hypergraph::from_edges(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  auto w = find_loose_path(h, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->junctions, (VertexSet{2, 4}));
  EXPECT_TRUE(is_valid_witness(h, *w));
}

TEST(LoosePath, ClosedTriangleHasNoThreePath) {
  // e1 and e3 meet, so the sequence is not a loose path.
  auto h = Hypergraph::from_edges(3, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
  EXPECT_FALSE(find_loose_path(h, 3).has_value());
  EXPECT_TRUE(contains_triangle(h));
}

TEST(LoosePath, ExtremalExamplesAreFree) {
  EXPECT_TRUE(is_p42_free(thick_clique(10).graph));
  EXPECT_TRUE(is_p42_free(complete_two_star(12).graph));
  EXPECT_TRUE(is_p42_free(f413().graph));
  EXPECT_FALSE(find_loose_path(complete_star(8).graph, 3).has_value());
  EXPECT_FALSE(find_loose_path(max_quasi_bipartite(12).graph, 3).has_value());
  for (auto g : {GalleryGraph::H41, GalleryGraph::H42, GalleryGraph::H43}) {
    EXPECT_TRUE(is_p42_free(gallery(g, 8).graph)) << gallery_name(g);
  }
}

TEST(LoosePath, RejectsBadLength) {
  auto h = thick_clique(6).graph;
  EXPECT_THROW(find_loose_path(h, 0), InvalidArgument);
}

TEST(LoosePath, MatchesReferenceAndNaive) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 300; ++t) {
    const int k = 3 + static_cast<int>(rng() % 2);
    const int len = 2 + static_cast<int>(rng() % 2);
    auto h = testing::random_graph(rng, k, 8 + rng() % 4, rng() % 14);
    auto fast = find_loose_path(h, len);
    auto slow = reference::find_loose_path(h, len);
    ASSERT_EQ(fast.has_value(), slow.has_value());
    ASSERT_EQ(fast.has_value(), testing::naive_has_path(h, static_cast<std::size_t>(len)));
    if (fast) {
      EXPECT_EQ(fast->edge_ids, slow->edge_ids);
      EXPECT_TRUE(is_valid_witness(h, *fast));
    }
  }
}

TEST(LoosePath, P2FreeMatchesPathSearch) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    auto h = testing::random_graph(rng, 4, 8 + rng() % 3, rng() % 13);
    EXPECT_EQ(is_p42_free(h), !testing::naive_has_path(h, 2));
    EXPECT_EQ(is_p42_free(h), !reference::find_linear_pair(h).has_value());
  }
}

TEST(LoosePath, FreenessIsHereditary) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    auto h = testing::random_graph(rng, 3, 9, rng() % 20);
    if (find_loose_path(h, 3)) continue;
    auto sub = testing::random_subgraph(rng, h, 0.5);
    EXPECT_FALSE(find_loose_path(sub, 3).has_value());
  }
}

TEST(LoosePath, WitnessIndependentOfThreads) {
  std::mt19937_64 rng(9);
  const int saved = omp_get_max_threads();
  for (int t = 0; t < 40; ++t) {
    auto h = testing::random_graph(rng, 3, 14, 20 + rng() % 30);
    omp_set_num_threads(1);
    auto a = find_loose_path(h, 3);
    omp_set_num_threads(4);
    auto b = find_loose_path(h, 3);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) EXPECT_EQ(a->edge_ids, b->edge_ids);
  }
  omp_set_num_threads(saved);
}

TEST(Witness, DetectsCorruption) {
  auto h = Hypergraph::from_edges(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  auto w = *find_loose_path(h, 3);
  auto bad = w;
  bad.junctions[0] = 1;
  EXPECT_FALSE(is_valid_witness(h, bad));
  bad = w;
  std::swap(bad.edge_ids[0], bad.edge_ids[2]);
  EXPECT_FALSE(is_valid_witness(h, bad));
}

TEST(LinearPartnerMask, MatchesDefinition) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const int k = 2 + static_cast<int>(rng() % 5);
    auto h = testing::random_graph(rng, k, static_cast<std::size_t>(k) + 4, rng() % 20);
    const auto mask = linear_partner_mask(h);
    ASSERT_EQ(mask.size(), h.m());
    for (std::size_t i = 0; i < h.m(); ++i) {
      const auto e = h.edge_set(i);
      std::uint32_t want = 0;
      for (std::size_t f = 0; f < h.m(); ++f) {
        if (f == i) continue;
        const auto common = intersect(e, h.edge(f));
        if (common.size() == 1) {
          want |= 1u << (std::find(e.begin(), e.end(), common[0]) - e.begin());
        }
      }
      EXPECT_EQ(mask[i], want);
    }
  }
}

TEST(Triangle, MatchesReference) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    auto h = testing::random_graph(rng, 3, 7 + rng() % 3, rng() % 15);
    const auto tri = find_triangle(h);
    EXPECT_EQ(tri.has_value(), reference::contains_triangle(h));
    if (tri) {
      const auto [a, b, c] = *tri;
      EXPECT_EQ(intersection_size(h.edge(a), h.edge(b)), 1u);
      EXPECT_EQ(intersection_size(h.edge(b), h.edge(c)), 1u);
      EXPECT_EQ(intersection_size(h.edge(a), h.edge(c)), 1u);
      VertexSet all;
      for (auto id : {a, b, c}) all.insert(all.end(), h.edge(id).begin(), h.edge(id).end());
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      EXPECT_EQ(all.size(), 6u);
    }
  }
}

TEST(StarUnion, Examples) {
  EXPECT_TRUE(is_star_union(complete_two_star(8).graph, 1, 2));
  EXPECT_TRUE(is_star_union(Hypergraph(4, 10), 0, 2));
  EXPECT_FALSE(is_star_union(thick_clique(10).graph, 4, 2));
  EXPECT_TRUE(is_star_union(balanced_star_union(40, 60, 4).graph, 4, 2));
  EXPECT_TRUE(is_star_union(complete_star(6).graph, 1, 1));
  auto two = testing::disjoint_union(complete_two_star(4).graph, complete_two_star(4).graph);
  EXPECT_TRUE(is_star_union(two, 2, 2));
  EXPECT_FALSE(is_star_union(two, 1, 2));
  EXPECT_THROW(is_star_union(two, 2, 1), InvalidArgument);
}

}  // namespace
}  // namespace hyperpath
