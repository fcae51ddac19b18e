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

#include "hyperpath/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hyperpath/error.hpp"

namespace hyperpath {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

Hypergraph::Hypergraph(int k, std::size_t n) : k_(k), n_(n) {
  if (k < 1) throw InvalidArgument("uniformity must be positive");
}

Hypergraph Hypergraph::from_edges(int k, std::size_t n, std::vector<VertexSet> edges) {
  Hypergraph h(k, n);
  const auto ku = static_cast<std::size_t>(k);
  for (auto& e : edges) {
    if (e.size() != ku) {
      throw InvalidArgument("edge has " + std::to_string(e.size()) + " vertices, expected " +
                            std::to_string(k));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidArgument("edge repeats a vertex");
    }
    if (e.back() >= n) {
      throw InvalidArgument("vertex " + std::to_string(e.back()) + " out of range (n = " +
                            std::to_string(n) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidArgument("duplicate edge");
  }
  h.flat_.reserve(edges.size() * ku);
  for (const auto& e : edges) h.flat_.insert(h.flat_.end(), e.begin(), e.end());
  return h;
}

std::vector<VertexSet> Hypergraph::edge_list() const {
  std::vector<VertexSet> out;
  out.reserve(m());
  for (std::size_t i = 0; i < m(); ++i) out.push_back(edge_set(i));
  return out;
}

std::size_t Hypergraph::find_edge(std::span<const Vertex> e) const {
  if (e.size() != static_cast<std::size_t>(k_)) return m();
  std::size_t lo = 0;
  std::size_t hi = m();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto x = edge(mid);
    if (std::lexicographical_compare(x.begin(), x.end(), e.begin(), e.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < m() && std::equal(e.begin(), e.end(), edge(lo).begin())) return lo;
  return m();
}

Hypergraph Hypergraph::subgraph(std::span<const std::size_t> edge_ids) const {
  std::vector<std::size_t> ids(edge_ids.begin(), edge_ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Hypergraph h(k_, n_);
  h.flat_.reserve(ids.size() * static_cast<std::size_t>(k_));
  for (auto i : ids) {
    if (i >= m()) throw InvalidArgument("edge index out of range");
    auto e = edge(i);
    h.flat_.insert(h.flat_.end(), e.begin(), e.end());
  }
  return h;
}

Hypergraph Hypergraph::without_edges(std::span<const std::size_t> edge_ids) const {
  std::vector<char> drop(m(), 0);
  for (auto i : edge_ids) {
    if (i >= m()) throw InvalidArgument("edge index out of range");
    drop[i] = 1;
  }
  std::vector<std::size_t> keep;
  keep.reserve(m());
  for (std::size_t i = 0; i < m(); ++i) {
    if (!drop[i]) keep.push_back(i);
  }
  return subgraph(keep);
}

Incidence::Incidence(const Hypergraph& h) : offsets_(h.n() + 1, 0) {
  for (std::size_t i = 0; i < h.m(); ++i) {
    for (auto v : h.edge(i)) ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  ids_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < h.m(); ++i) {
    for (auto v : h.edge(i)) ids_[fill[v]++] = static_cast<std::uint32_t>(i);
  }
}

std::size_t degree(const Hypergraph& h, Vertex v) {
  if (v >= h.n()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  std::size_t d = 0;
  for (std::size_t i = 0; i < h.m(); ++i) {
    auto e = h.edge(i);
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  }
  return d;
}

std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.n(), 0);
  for (std::size_t i = 0; i < h.m(); ++i) {
    for (auto v : h.edge(i)) ++d[v];
  }
  return d;
}

std::size_t max_degree(const Hypergraph& h) {
  auto d = degrees(h);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

VertexSet non_isolated(const Hypergraph& h) {
  auto d = degrees(h);
  VertexSet out;
  for (Vertex v = 0; v < h.n(); ++v) {
    if (d[v] > 0) out.push_back(v);
  }
  return out;
}

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t c = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

VertexSet intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t Signature::count_of_size(std::size_t s) const {
  return static_cast<std::size_t>(
      std::count_if(parts.begin(), parts.end(), [s](const VertexSet& p) { return p.size() == s; }));
}

Signature signature(const Hypergraph& h, std::span<const Vertex> s) {
  Signature sg;
  sg.base.assign(s.begin(), s.end());
  std::sort(sg.base.begin(), sg.base.end());
  sg.base.erase(std::unique(sg.base.begin(), sg.base.end()), sg.base.end());
  for (auto v : sg.base) {
    if (v >= h.n()) throw InvalidArgument("signature base vertex out of range");
  }
  const bool base_is_edge = h.contains_edge(sg.base);
  for (std::size_t i = 0; i < h.m(); ++i) {
    auto e = h.edge(i);
    if (base_is_edge && std::equal(e.begin(), e.end(), sg.base.begin())) continue;
    auto part = intersect(sg.base, e);
    if (!part.empty()) sg.parts.push_back(std::move(part));
  }
  std::sort(sg.parts.begin(), sg.parts.end());
  sg.parts.erase(std::unique(sg.parts.begin(), sg.parts.end()), sg.parts.end());
  return sg;
}

Signature signature(const Hypergraph& h, const Incidence& inc, std::span<const Vertex> s) {
  if (s.size() > 32) return signature(h, s);
  Signature sg;
  sg.base.assign(s.begin(), s.end());
  std::sort(sg.base.begin(), sg.base.end());
  sg.base.erase(std::unique(sg.base.begin(), sg.base.end()), sg.base.end());
  for (auto v : sg.base) {
    if (v >= h.n()) throw InvalidArgument("signature base vertex out of range");
  }
  const std::size_t self = h.find_edge(sg.base);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hits;
  for (std::size_t j = 0; j < sg.base.size(); ++j) {
    for (auto e : inc.edges_of(sg.base[j])) {
      if (e != self) hits.emplace_back(e, std::uint32_t{1} << j);
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::uint32_t> masks;
  for (std::size_t i = 0; i < hits.size();) {
    std::uint32_t mask = 0;
    std::size_t j = i;
    for (; j < hits.size() && hits[j].first == hits[i].first; ++j) mask |= hits[j].second;
    masks.push_back(mask);
    i = j;
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (auto mask : masks) {
    VertexSet part;
    for (std::size_t j = 0; j < sg.base.size(); ++j) {
      if (mask >> j & 1U) part.push_back(sg.base[j]);
    }
    sg.parts.push_back(std::move(part));
  }
  std::sort(sg.parts.begin(), sg.parts.end());
  return sg;
}

namespace {

TwinSet twins_from_classes(std::vector<VertexSet> classes) {
  TwinSet t;
  for (const auto& c : classes) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) t.pairs.emplace_back(c[a], c[b]);
      t.covered.push_back(c[a]);
    }
  }
  std::sort(t.pairs.begin(), t.pairs.end());
  std::sort(t.covered.begin(), t.covered.end());
  std::sort(classes.begin(), classes.end());
  t.classes = std::move(classes);
  return t;
}

}  // namespace

// Two non-isolated vertices are twins iff their incident edge sets coincide,
// so twins are the classes of identical incidence lists.
TwinSet twins(const Hypergraph& h) {
  const Incidence inc(h);
  const auto n = static_cast<std::int64_t>(h.n());
  std::vector<std::uint64_t> key(h.n(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < n; ++v) {
    std::uint64_t x = 1469598103934665603ULL;
    for (auto e : inc.edges_of(static_cast<Vertex>(v))) {
      x ^= e + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
      x *= 1099511628211ULL;
    }
    key[static_cast<std::size_t>(v)] = x;
  }
  std::unordered_map<std::uint64_t, std::vector<Vertex>> buckets;
  for (Vertex v = 0; v < h.n(); ++v) {
    if (inc.degree(v) > 0) buckets[key[v]].push_back(v);
  }
  std::vector<VertexSet> classes;
  for (auto& [_, bucket] : buckets) {
    if (bucket.size() < 2) continue;
    // Hash collisions: split the bucket by exact incidence.
    std::vector<char> used(bucket.size(), 0);
    for (std::size_t a = 0; a < bucket.size(); ++a) {
      if (used[a]) continue;
      VertexSet cls{bucket[a]};
      auto ea = inc.edges_of(bucket[a]);
      for (std::size_t b = a + 1; b < bucket.size(); ++b) {
        auto eb = inc.edges_of(bucket[b]);
        if (!used[b] && std::equal(ea.begin(), ea.end(), eb.begin(), eb.end())) {
          used[b] = 1;
          cls.push_back(bucket[b]);
        }
      }
      if (cls.size() >= 2) classes.push_back(std::move(cls));
    }
  }
  return twins_from_classes(std::move(classes));
}

namespace reference {

TwinSet twins(const Hypergraph& h) {
  auto deg = degrees(h);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < h.n(); ++x) {
    if (deg[x] == 0) continue;
    for (Vertex y = x + 1; y < h.n(); ++y) {
      if (deg[y] == 0) continue;
      bool separated = false;
      for (std::size_t i = 0; i < h.m() && !separated; ++i) {
        auto e = h.edge(i);
        const bool hx = std::binary_search(e.begin(), e.end(), x);
        const bool hy = std::binary_search(e.begin(), e.end(), y);
        separated = hx != hy;
      }
      if (!separated) pairs.emplace_back(x, y);
    }
  }
  // Twin relation is an equivalence on non-isolated vertices; rebuild classes.
  std::vector<VertexSet> classes;
  std::vector<char> seen(h.n(), 0);
  for (auto [x, y] : pairs) {
    if (seen[x]) continue;
    VertexSet cls{x};
    for (auto [a, b] : pairs) {
      if (a == x) cls.push_back(b);
    }
    for (auto v : cls) seen[v] = 1;
    classes.push_back(std::move(cls));
  }
  return twins_from_classes(std::move(classes));
}

}  // namespace reference

Components components(const Hypergraph& h) {
  std::vector<Vertex> parent(h.n());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t i = 0; i < h.m(); ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 1; j < e.size(); ++j) {
      auto a = find(e[0]);
      auto b = find(e[j]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  auto deg = degrees(h);
  Components c;
  std::vector<std::size_t> index_of_root(h.n(), SIZE_MAX);
  for (Vertex v = 0; v < h.n(); ++v) {
    if (deg[v] == 0) {
      c.isolated.push_back(v);
      continue;
    }
    auto r = find(v);
    if (index_of_root[r] == SIZE_MAX) {
      index_of_root[r] = c.parts.size();
      c.parts.emplace_back();
    }
    c.parts[index_of_root[r]].push_back(v);
  }
  c.edge_component.resize(h.m());
  for (std::size_t i = 0; i < h.m(); ++i) c.edge_component[i] = index_of_root[find(h.edge(i)[0])];
  return c;
}

}  // namespace hyperpath
