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

#include "hyperpath/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "hyperpath/error.hpp"

namespace hyperpath {

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

// Calls f on every ascending r-combination of {0..n-1}.
void for_each_combination(std::size_t n, std::size_t r,
                          const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (r > n) return;
  std::vector<std::size_t> c(r);
  std::iota(c.begin(), c.end(), std::size_t{0});
  while (true) {
    f(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

VertexSet range_set(Vertex from, std::size_t count) {
  VertexSet s(count);
  std::iota(s.begin(), s.end(), from);
  return s;
}

// First `limit` edges (lex order of leaf pairs) of the star with `center`.
void add_star_edges(std::vector<VertexSet>& edges, const VertexSet& center, const VertexSet& leaves,
                    std::size_t limit = SIZE_MAX) {
  std::size_t added = 0;
  for (std::size_t a = 0; a < leaves.size() && added < limit; ++a) {
    for (std::size_t b = a + 1; b < leaves.size() && added < limit; ++b) {
      VertexSet e = center;
      e.push_back(leaves[a]);
      e.push_back(leaves[b]);
      edges.push_back(std::move(e));
      ++added;
    }
  }
}

void check_leaves(std::size_t n, const VertexSet& centers, VertexSet& leaves) {
  std::sort(leaves.begin(), leaves.end());
  if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end()) {
    throw InvalidArgument("repeated leaf");
  }
  for (auto c : centers) {
    if (c >= n) throw InvalidArgument("center out of range");
    if (std::binary_search(leaves.begin(), leaves.end(), c)) {
      throw InvalidArgument("center " + std::to_string(c) + " is also a leaf");
    }
  }
  if (!leaves.empty() && leaves.back() >= n) throw InvalidArgument("leaf out of range");
}

// Three 2-stars on k vertices starting at `base`, plus the three edges
// joining their centers.
void add_joined_two_stars(std::vector<VertexSet>& edges, ConstructionSpec& spec, std::size_t k) {
  std::array<VertexSet, 3> centers;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto b = static_cast<Vertex>(i * k);
    centers[i] = {b, b + 1};
    auto leaves = range_set(b + 2, k - 2);
    add_star_edges(edges, centers[i], leaves);
    spec.labeling["star" + str(i + 1) + ".center"] = centers[i];
    spec.labeling["star" + str(i + 1) + ".leaves"] = leaves;
  }
  VertexSet joined;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      VertexSet e = centers[i];
      e.insert(e.end(), centers[j].begin(), centers[j].end());
      edges.push_back(e);
    }
    joined.insert(joined.end(), centers[i].begin(), centers[i].end());
  }
  spec.labeling["joined centers"] = joined;
}

}  // namespace

Construction thick_clique(std::size_t n) {
  if (n < 4) throw InvalidArgument("thick clique needs n >= 4");
  Construction c = thick_clique_general(n, 1);
  c.spec.name = "thick-clique";
  c.spec.params.erase("r");
  return c;
}

Construction thick_clique_general(std::size_t n, int r) {
  if (r < 1) throw InvalidArgument("r must be >= 1");
  const auto ru = static_cast<std::size_t>(r);
  if (n < 4 * ru) throw InvalidArgument("thick clique needs n >= 4r");
  const std::size_t d = n / 2;
  std::vector<VertexSet> edges;
  edges.reserve(binom(d, 2 * ru));
  for_each_combination(d, 2 * ru, [&](const std::vector<std::size_t>& pick) {
    VertexSet e;
    for (auto p : pick) {
      e.push_back(static_cast<Vertex>(2 * p));
      e.push_back(static_cast<Vertex>(2 * p + 1));
    }
    edges.push_back(std::move(e));
  });
  Construction c{Hypergraph::from_edges(4 * r, n, std::move(edges)), {}};
  c.spec.name = "thick-clique-general";
  c.spec.params = {{"n", static_cast<long long>(n)}, {"r", r}};
  for (std::size_t i = 0; i < d; ++i) {
    c.spec.labeling["dubleton " + str(i)] = {static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1)};
  }
  if (n % 2 == 1) c.spec.labeling["isolated"] = {static_cast<Vertex>(n - 1)};
  return c;
}

Construction two_star(std::size_t n, std::array<Vertex, 2> centers, VertexSet leaves) {
  if (centers[0] == centers[1]) throw InvalidArgument("2-star centers must differ");
  VertexSet cs{std::min(centers[0], centers[1]), std::max(centers[0], centers[1])};
  check_leaves(n, cs, leaves);
  std::vector<VertexSet> edges;
  add_star_edges(edges, cs, leaves);
  Construction c{Hypergraph::from_edges(4, n, std::move(edges)), {}};
  c.spec.name = "two-star";
  c.spec.params = {{"n", static_cast<long long>(n)}, {"leaves", static_cast<long long>(leaves.size())}};
  c.spec.labeling["center"] = cs;
  c.spec.labeling["leaves"] = leaves;
  return c;
}

Construction complete_two_star(std::size_t leaves) {
  return two_star(leaves + 2, {0, 1}, range_set(2, leaves));
}

Construction star(std::size_t n, Vertex center, VertexSet leaves) {
  check_leaves(n, {center}, leaves);
  std::vector<VertexSet> edges;
  add_star_edges(edges, {center}, leaves);
  Construction c{Hypergraph::from_edges(3, n, std::move(edges)), {}};
  c.spec.name = "star";
  c.spec.params = {{"n", static_cast<long long>(n)}, {"leaves", static_cast<long long>(leaves.size())}};
  c.spec.labeling["center"] = {center};
  c.spec.labeling["leaves"] = leaves;
  return c;
}

Construction complete_star(std::size_t leaves) { return star(leaves + 1, 0, range_set(1, leaves)); }

Construction quasi_bipartite(std::size_t pairs, std::size_t zs) {
  if (pairs < 1 || zs < 1) throw InvalidArgument("quasi-bipartite graph needs at least one pair and one z");
  const std::size_t n = 2 * pairs + zs;
  std::vector<VertexSet> edges;
  edges.reserve(pairs * zs);
  for (std::size_t i = 0; i < pairs; ++i) {
    for (std::size_t j = 0; j < zs; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(pairs + i),
                       static_cast<Vertex>(2 * pairs + j)});
    }
  }
  Construction c{Hypergraph::from_edges(3, n, std::move(edges)), {}};
  c.spec.name = "quasi-bipartite";
  c.spec.params = {{"s", static_cast<long long>(pairs)}, {"t", static_cast<long long>(zs)}};
  for (std::size_t i = 0; i < pairs; ++i) {
    c.spec.labeling["x" + str(i + 1)] = {static_cast<Vertex>(i)};
    c.spec.labeling["y" + str(i + 1)] = {static_cast<Vertex>(pairs + i)};
  }
  for (std::size_t j = 0; j < zs; ++j) {
    c.spec.labeling["z" + str(j + 1)] = {static_cast<Vertex>(2 * pairs + j)};
  }
  return c;
}

Construction max_quasi_bipartite(std::size_t n) {
  if (n < 3) throw InvalidArgument("max quasi-bipartite graph needs n >= 3");
  std::size_t best_pairs = 1;
  std::size_t best = 0;
  for (std::size_t p = 1; 2 * p < n; ++p) {
    const std::size_t e = p * (n - 2 * p);
    if (e >= best) {
      best = e;
      best_pairs = p;
    }
  }
  Construction c = quasi_bipartite(best_pairs, n - 2 * best_pairs);
  c.spec.name = "max-quasi-bipartite";
  c.spec.params["n"] = static_cast<long long>(n);
  return c;
}

Construction f413() {
  std::vector<VertexSet> edges;
  for_each_combination(8, 4, [&](const std::vector<std::size_t>& pick) {
    const auto in_base = std::count_if(pick.begin(), pick.end(), [](std::size_t v) { return v < 4; });
    if (in_base >= 3) edges.push_back({static_cast<Vertex>(pick[0]), static_cast<Vertex>(pick[1]),
                                       static_cast<Vertex>(pick[2]), static_cast<Vertex>(pick[3])});
  });
  Construction c{Hypergraph::from_edges(4, 8, std::move(edges)), {}};
  c.spec.name = "f413";
  c.spec.labeling["base"] = {0, 1, 2, 3};
  c.spec.labeling["outside"] = {4, 5, 6, 7};
  return c;
}

GalleryGraph gallery_from_name(std::string_view name) {
  if (name == "H41" || name == "h41") return GalleryGraph::H41;
  if (name == "H42" || name == "h42") return GalleryGraph::H42;
  if (name == "H43" || name == "h43") return GalleryGraph::H43;
  throw InvalidArgument("unknown gallery graph '" + std::string(name) + "' (expected H41, H42 or H43)");
}

std::string_view gallery_name(GalleryGraph g) {
  switch (g) {
    case GalleryGraph::H41:
      return "H41";
    case GalleryGraph::H42:
      return "H42";
    case GalleryGraph::H43:
      return "H43";
  }
  return "";
}

Construction gallery(GalleryGraph g, std::size_t k) {
  if (k < 6) throw InvalidArgument("gallery graphs need star size k >= 6");
  Construction c;
  c.spec.name = std::string(gallery_name(g));
  c.spec.params = {{"k", static_cast<long long>(k)}};
  std::vector<VertexSet> edges;
  std::size_t n = 0;
  switch (g) {
    case GalleryGraph::H41: {
      if (k < 100) {
        c.spec.warnings.push_back("k = " + str(k) + " is below the stated range k >= 100");
      }
      n = 3 * k + 8;
      add_joined_two_stars(edges, c.spec, k);
      const auto base = static_cast<Vertex>(3 * k);
      for (const auto& e : f413().graph.edge_list()) {
        edges.push_back({e[0] + base, e[1] + base, e[2] + base, e[3] + base});
      }
      c.spec.labeling["f413.base"] = range_set(base, 4);
      c.spec.labeling["f413.outside"] = range_set(base + 4, 4);
      break;
    }
    case GalleryGraph::H42: {
      n = 3 * k + 4;
      auto clique = thick_clique(10);
      edges = clique.graph.edge_list();
      for (std::size_t d = 0; d < 5; ++d) {
        c.spec.labeling["dubleton " + str(d)] = clique.spec.labeling.at("dubleton " + str(d));
      }
      for (std::size_t i = 0; i < 3; ++i) {
        VertexSet center{static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1)};
        auto leaves = range_set(static_cast<Vertex>(10 + i * (k - 2)), k - 2);
        add_star_edges(edges, center, leaves);
        c.spec.labeling["star" + str(i + 1) + ".center"] = center;
        c.spec.labeling["star" + str(i + 1) + ".leaves"] = leaves;
      }
      break;
    }
    case GalleryGraph::H43: {
      n = 3 * k + 6;
      add_joined_two_stars(edges, c.spec, k);
      const auto base = static_cast<Vertex>(3 * k);
      for_each_combination(6, 4, [&](const std::vector<std::size_t>& pick) {
        edges.push_back({base + static_cast<Vertex>(pick[0]), base + static_cast<Vertex>(pick[1]),
                         base + static_cast<Vertex>(pick[2]), base + static_cast<Vertex>(pick[3])});
      });
      c.spec.labeling["clique"] = range_set(base, 6);
      break;
    }
  }
  c.graph = Hypergraph::from_edges(4, n, std::move(edges));
  return c;
}

Construction near_regular_thick_subgraph(std::size_t n, std::size_t m) {
  const std::size_t d = n / 2;
  if (m > binom(d, 2)) {
    throw Infeasible("m = " + str(m) + " exceeds the thick clique capacity " + str(binom(d, 2)));
  }
  // Target dubleton degrees: 2m split as evenly as possible, the extra
  // units on the lowest labels.
  std::vector<std::size_t> residual(d, 0);
  if (d > 0) {
    for (std::size_t i = 0; i < d; ++i) residual[i] = (2 * m) / d + (i < (2 * m) % d ? 1 : 0);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<char> done(d, 0);
  for (std::size_t round = 0; round < d; ++round) {
    std::size_t u = d;
    for (std::size_t i = 0; i < d; ++i) {
      if (!done[i] && (u == d || residual[i] > residual[u])) u = i;
    }
    if (u == d || residual[u] == 0) break;
    done[u] = 1;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < d; ++i) {
      if (!done[i] && residual[i] > 0) others.push_back(i);
    }
    std::stable_sort(others.begin(), others.end(),
                     [&](std::size_t a, std::size_t b) { return residual[a] > residual[b]; });
    if (others.size() < residual[u]) throw Error("degree sequence not graphical");  // cannot happen
    for (std::size_t t = 0; t < residual[u]; ++t) {
      --residual[others[t]];
      pairs.emplace_back(std::min(u, others[t]), std::max(u, others[t]));
    }
    residual[u] = 0;
  }
  std::vector<VertexSet> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    edges.push_back({static_cast<Vertex>(2 * a), static_cast<Vertex>(2 * a + 1), static_cast<Vertex>(2 * b),
                     static_cast<Vertex>(2 * b + 1)});
  }
  Construction c{Hypergraph::from_edges(4, n, std::move(edges)), {}};
  c.spec.name = "near-regular-thick";
  c.spec.params = {{"n", static_cast<long long>(n)}, {"m", static_cast<long long>(m)}};
  for (std::size_t i = 0; i < d; ++i) {
    c.spec.labeling["dubleton " + str(i)] = {static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1)};
  }
  return c;
}

namespace {

// Edges of a complete (2-)star on v vertices.
std::size_t star_capacity(std::size_t v, std::size_t center) {
  return v >= center + 2 ? static_cast<std::size_t>(binom(v - center, 2)) : 0;
}

struct Packing {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::size_t total = 0;
};

// Best packing of at most four disjoint stars holding at most `cap_edges`
// edges each. With s stars at the cap (smallest size v that reaches it),
// the rest is a convex maximization over sizes below v, so all but one of
// the remaining stars have v - 1 vertices. Every s is tried.
Packing best_packing(std::size_t n, std::size_t center, std::size_t cap_edges) {
  std::size_t v = center + 2;
  while (v <= n && star_capacity(v, center) < cap_edges) ++v;
  const std::size_t below = v - 1;
  Packing best;
  for (std::size_t s = 0; s <= 4 && s * v <= n; ++s) {
    Packing p;
    for (std::size_t i = 0; i < s; ++i) {
      p.vertices.push_back(v);
      p.edges.push_back(cap_edges);
    }
    std::size_t rest = n - s * v;
    while (p.vertices.size() < 4 && rest > 0) {
      const std::size_t size = std::min(rest, below);
      const std::size_t e = std::min(cap_edges, star_capacity(size, center));
      if (e == 0) break;
      p.vertices.push_back(size);
      p.edges.push_back(e);
      rest -= size;
    }
    p.total = std::accumulate(p.edges.begin(), p.edges.end(), std::size_t{0});
    if (p.total > best.total) best = std::move(p);
  }
  return best;
}

}  // namespace

StarPlan star_union_plan(std::size_t n, std::size_t m, int k) {
  if (k != 3 && k != 4) throw InvalidArgument("star unions are built for k = 3 or k = 4");
  const std::size_t center = static_cast<std::size_t>(k) - 2;
  const std::size_t most = star_capacity(n, center);
  if (m > most) {
    throw Infeasible("m = " + str(m) + " exceeds the largest star capacity " + str(most));
  }
  StarPlan plan;
  if (m == 0) return plan;
  std::size_t lo = 1;
  std::size_t hi = m;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (best_packing(n, center, mid).total >= m) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  Packing p = best_packing(n, center, lo);
  plan.vertices = std::move(p.vertices);
  plan.edges = std::move(p.edges);
  std::size_t excess = std::accumulate(plan.edges.begin(), plan.edges.end(), std::size_t{0}) - m;
  for (std::size_t i = plan.edges.size(); i-- > 0 && excess > 0;) {
    const std::size_t cut = std::min(excess, plan.edges[i]);
    plan.edges[i] -= cut;
    excess -= cut;
  }
  while (!plan.edges.empty() && plan.edges.back() == 0) {
    plan.edges.pop_back();
    plan.vertices.pop_back();
  }
  plan.max_degree = plan.edges.empty() ? 0 : *std::max_element(plan.edges.begin(), plan.edges.end());
  return plan;
}

Construction balanced_star_union(std::size_t n, std::size_t m, int k) {
  const StarPlan plan = star_union_plan(n, m, k);
  const std::size_t center = static_cast<std::size_t>(k) - 2;
  std::vector<VertexSet> edges;
  edges.reserve(m);
  Construction c;
  Vertex next = 0;
  for (std::size_t i = 0; i < plan.vertices.size(); ++i) {
    VertexSet cs = range_set(next, center);
    VertexSet leaves = range_set(next + static_cast<Vertex>(center), plan.vertices[i] - center);
    add_star_edges(edges, cs, leaves, plan.edges[i]);
    c.spec.labeling["star" + str(i + 1) + ".center"] = cs;
    c.spec.labeling["star" + str(i + 1) + ".leaves"] = leaves;
    next += static_cast<Vertex>(plan.vertices[i]);
  }
  c.graph = Hypergraph::from_edges(k, n, std::move(edges));
  c.spec.name = "balanced-star-union";
  c.spec.params = {{"n", static_cast<long long>(n)},
                   {"m", static_cast<long long>(m)},
                   {"k", k},
                   {"stars", static_cast<long long>(plan.vertices.size())}};
  return c;
}

std::uint64_t h_formula(std::size_t n) {
  if (n < 4) throw InvalidArgument("h(n) is defined for n >= 4");
  if (n <= 6) return binom(n, 4);
  if (n == 7) return 15;
  if (n == 8) return 17;
  return binom(n - 2, 2);
}

std::uint64_t hhat_formula(std::size_t n) {
  if (n < 3) throw InvalidArgument("hhat(n) is defined for n >= 3");
  if (n <= 6) return binom(n, 3);
  if (n == 7) return 20;
  return binom(n - 1, 2);
}

std::vector<std::string> construction_names() {
  return {"thick-clique", "thick-clique-general", "two-star", "star", "quasi-bipartite",
          "max-quasi-bipartite", "f413", "H41", "H42", "H43", "near-regular-thick",
          "balanced-star-union"};
}

namespace {

class Params {
 public:
  Params(std::string_view name, const std::map<std::string, long long>& p) : name_(name), p_(p) {}

  std::size_t size(const std::string& key) {
    used_.insert(key);
    auto it = p_.find(key);
    if (it == p_.end()) throw InvalidArgument(name_ + ": missing parameter '" + key + "'");
    if (it->second < 0) throw InvalidArgument(name_ + ": parameter '" + key + "' must be >= 0");
    return static_cast<std::size_t>(it->second);
  }

  void finish() const {
    for (const auto& [key, _] : p_) {
      if (!used_.count(key)) throw InvalidArgument(name_ + ": unknown parameter '" + key + "'");
    }
  }

 private:
  std::string name_;
  const std::map<std::string, long long>& p_;
  std::set<std::string> used_;
};

}  // namespace

Construction build_construction(std::string_view name, const std::map<std::string, long long>& params) {
  Params p(name, params);
  Construction c;
  if (name == "thick-clique") {
    c = thick_clique(p.size("n"));
  } else if (name == "thick-clique-general") {
    const auto n = p.size("n");
    c = thick_clique_general(n, static_cast<int>(p.size("r")));
  } else if (name == "two-star") {
    c = complete_two_star(p.size("leaves"));
  } else if (name == "star") {
    c = complete_star(p.size("leaves"));
  } else if (name == "quasi-bipartite") {
    const auto s = p.size("s");
    c = quasi_bipartite(s, p.size("t"));
  } else if (name == "max-quasi-bipartite") {
    c = max_quasi_bipartite(p.size("n"));
  } else if (name == "f413") {
    c = f413();
  } else if (name == "H41" || name == "H42" || name == "H43") {
    c = gallery(gallery_from_name(name), p.size("k"));
  } else if (name == "near-regular-thick") {
    const auto n = p.size("n");
    c = near_regular_thick_subgraph(n, p.size("m"));
  } else if (name == "balanced-star-union") {
    const auto n = p.size("n");
    const auto m = p.size("m");
    c = balanced_star_union(n, m, static_cast<int>(p.size("k")));
  } else {
    throw InvalidArgument("unknown construction '" + std::string(name) + "'");
  }
  p.finish();
  return c;
}

}  // namespace hyperpath
