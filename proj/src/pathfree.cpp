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

#include "hyperpath/pathfree.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>

#include "hyperpath/error.hpp"

namespace hyperpath {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Packs an ascending vertex subset of at most four ids below 65535 into one
// word; ids are shifted by one so shorter subsets never collide with longer.
std::uint64_t pack(const Vertex* ids, std::size_t len) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < len; ++i) key = (key << 16) | (ids[i] + 1);
  return key;
}

// Codegree-based kernel: the number of edges f != e with f ∩ e = {v} is
// deg(v) minus the inclusion-exclusion count of edges through v meeting
// e \ {v}. Needs every subset of every edge, so only used for k <= 4.
std::vector<std::uint32_t> partner_mask_codegree(const Hypergraph& h) {
  const std::size_t k = static_cast<std::size_t>(h.k());
  const std::size_t m = h.m();
  const std::size_t subsets = (std::size_t{1} << k) - 1 - k;  // sizes >= 2
  std::vector<std::uint64_t> keys(m * subsets);
  const auto mi = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < mi; ++i) {
    auto e = h.edge(static_cast<std::size_t>(i));
    std::size_t out = static_cast<std::size_t>(i) * subsets;
    Vertex buf[4];
    for (std::uint32_t s = 1; s < (1U << k); ++s) {
      if (std::popcount(s) < 2) continue;
      std::size_t len = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (s >> j & 1U) buf[len++] = e[j];
      }
      keys[out++] = pack(buf, len);
    }
  }
  std::sort(keys.begin(), keys.end());
  auto codeg = [&keys](std::uint64_t key) -> std::int64_t {
    auto [lo, hi] = std::equal_range(keys.begin(), keys.end(), key);
    return hi - lo;
  };
  const auto deg = degrees(h);
  std::vector<std::uint32_t> mask(m, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < mi; ++i) {
    auto e = h.edge(static_cast<std::size_t>(i));
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t meet = 0;
      for (std::uint32_t s = 1; s < (1U << k); ++s) {
        if ((s >> j & 1U) == 0 || s == (1U << j)) continue;
        Vertex buf[4];
        std::size_t len = 0;
        for (std::size_t t = 0; t < k; ++t) {
          if (s >> t & 1U) buf[len++] = e[t];
        }
        // |A| = len - 1 where A = subset without v
        meet += ((len - 1) % 2 == 1) ? codeg(pack(buf, len)) : -codeg(pack(buf, len));
      }
      if (static_cast<std::int64_t>(deg[e[j]]) - meet > 0) bits |= 1U << j;
    }
    mask[static_cast<std::size_t>(i)] = bits;
  }
  return mask;
}

// Direct scan over the incidence lists; fallback for k > 4 or huge labels.
std::vector<std::uint32_t> partner_mask_scan(const Hypergraph& h) {
  const Incidence inc(h);
  const auto mi = static_cast<std::int64_t>(h.m());
  std::vector<std::uint32_t> mask(h.m(), 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < mi; ++i) {
    auto e = h.edge(static_cast<std::size_t>(i));
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (auto f : inc.edges_of(e[j])) {
        if (static_cast<std::int64_t>(f) != i && intersection_size(e, h.edge(f)) == 1) {
          bits |= 1U << j;
          break;
        }
      }
    }
    mask[static_cast<std::size_t>(i)] = bits;
  }
  return mask;
}

PathWitness make_witness(const Hypergraph& h, const std::vector<std::size_t>& ids) {
  PathWitness w;
  w.edge_ids = ids;
  for (auto id : ids) w.edges.push_back(h.edge_set(id));
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    auto j = intersect(w.edges[i], w.edges[i + 1]);
    w.junctions.push_back(j.empty() ? Vertex{0} : j.front());
  }
  return w;
}

// Depth-first extension of a partial path in ascending edge-id order.
// cover[v] counts path edges through v; the next edge must meet the
// current path exactly in one vertex of the last edge that no earlier edge
// uses.
class PathSearch {
 public:
  PathSearch(const Hypergraph& h, const Incidence& inc, const std::vector<std::uint32_t>& mask,
             int length)
      : h_(h), inc_(inc), mask_(mask), length_(static_cast<std::size_t>(length)), cover_(h.n(), 0) {}

  bool run_from(std::size_t first) {
    path_.clear();
    push(first);
    const bool ok = extend();
    if (!ok) pop();
    return ok;
  }

  const std::vector<std::size_t>& path() const { return path_; }

 private:
  bool allowed_at(std::size_t f, std::size_t position) const {
    const auto bits = std::popcount(mask_[f]);
    if (bits == 0) return false;
    const bool interior = position > 0 && position + 1 < length_;
    return !interior || bits >= 2;
  }

  void push(std::size_t e) {
    path_.push_back(e);
    for (auto v : h_.edge(e)) ++cover_[v];
  }
  void pop() {
    for (auto v : h_.edge(path_.back())) --cover_[v];
    path_.pop_back();
  }

  bool extend() {
    if (path_.size() == length_) return true;
    const std::size_t last = path_.back();
    auto le = h_.edge(last);
    std::vector<std::size_t> cands;
    for (std::size_t j = 0; j < le.size(); ++j) {
      const Vertex v = le[j];
      if (cover_[v] != 1 || (mask_[last] >> j & 1U) == 0) continue;
      for (auto f : inc_.edges_of(v)) {
        if (!allowed_at(f, path_.size())) continue;
        bool ok = true;
        for (auto u : h_.edge(f)) {
          if (u != v && cover_[u] != 0) {
            ok = false;
            break;
          }
        }
        if (ok) cands.push_back(f);
      }
    }
    std::sort(cands.begin(), cands.end());
    for (auto f : cands) {
      push(f);
      if (extend()) return true;
      pop();
    }
    return false;
  }

  const Hypergraph& h_;
  const Incidence& inc_;
  const std::vector<std::uint32_t>& mask_;
  std::size_t length_;
  std::vector<std::uint16_t> cover_;
  std::vector<std::size_t> path_;
};

}  // namespace

bool is_valid_witness(const Hypergraph& h, const PathWitness& w) {
  const std::size_t l = w.edge_ids.size();
  if (l == 0 || w.edges.size() != l || w.junctions.size() + 1 != l) return false;
  for (std::size_t i = 0; i < l; ++i) {
    if (w.edge_ids[i] >= h.m() || h.edge_set(w.edge_ids[i]) != w.edges[i]) return false;
  }
  VertexSet all;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      auto common = intersect(w.edges[i], w.edges[j]);
      if (j == i + 1) {
        if (common.size() != 1 || common.front() != w.junctions[i]) return false;
      } else if (!common.empty()) {
        return false;
      }
    }
    all.insert(all.end(), w.edges[i].begin(), w.edges[i].end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  const std::size_t k = static_cast<std::size_t>(h.k());
  return all.size() == k * l - l + 1;
}

std::vector<std::uint32_t> linear_partner_mask(const Hypergraph& h) {
  if (h.k() > 32) throw InvalidArgument("linear_partner_mask supports k <= 32");
  if (h.k() < 2) return std::vector<std::uint32_t>(h.m(), 0);
  if (h.k() <= 4 && h.n() < 65535) return partner_mask_codegree(h);
  return partner_mask_scan(h);
}

std::optional<PathWitness> find_loose_path(const Hypergraph& h, int length) {
  if (length < 1) throw InvalidArgument("path length must be >= 1");
  if (h.m() == 0) return std::nullopt;
  if (length == 1) return make_witness(h, {0});

  const auto mask = linear_partner_mask(h);
  if (length == 2) {
    std::size_t first = kNone;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i] != 0) {
        first = i;
        break;
      }
    }
    if (first == kNone) return std::nullopt;
    // The least partner of the least active edge comes after it.
    auto e = h.edge(first);
    for (std::size_t j = first + 1; j < h.m(); ++j) {
      if (intersection_size(e, h.edge(j)) == 1) return make_witness(h, {first, j});
    }
    return std::nullopt;  // unreachable: mask promised a partner
  }

  const bool has_interior = std::any_of(mask.begin(), mask.end(),
                                        [](std::uint32_t b) { return std::popcount(b) >= 2; });
  if (!has_interior) return std::nullopt;

  const Incidence inc(h);
  std::atomic<std::size_t> best{kNone};
  std::vector<std::size_t> best_path;
  const auto mi = static_cast<std::int64_t>(h.m());
#pragma omp parallel
  {
    PathSearch search(h, inc, mask, length);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < mi; ++i) {
      const auto first = static_cast<std::size_t>(i);
      if (mask[first] == 0 || first > best.load(std::memory_order_relaxed)) continue;
      if (search.run_from(first)) {
#pragma omp critical(hyperpath_path_best)
        {
          if (first < best.load()) {
            best.store(first);
            best_path = search.path();
          }
        }
      }
    }
  }
  if (best.load() == kNone) return std::nullopt;
  return make_witness(h, best_path);
}

bool is_p42_free(const Hypergraph& h) {
  if (h.k() != 4) throw InvalidArgument("is_p42_free requires a 4-graph, got k = " + std::to_string(h.k()));
  const auto mask = linear_partner_mask(h);
  return std::none_of(mask.begin(), mask.end(), [](std::uint32_t b) { return b != 0; });
}

std::optional<std::array<std::size_t, 3>> find_triangle(const Hypergraph& h) {
  if (h.k() != 3) throw InvalidArgument("triangle detection requires a 3-graph, got k = " + std::to_string(h.k()));
  const auto mask = linear_partner_mask(h);
  const Incidence inc(h);
  std::atomic<std::size_t> best{kNone};
  std::array<std::size_t, 3> found{};
  const auto mi = static_cast<std::int64_t>(h.m());
  // e1 is the smallest id of the triangle; e2 < e3 are its two partners.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < mi; ++i) {
    const auto e1 = static_cast<std::size_t>(i);
    if (std::popcount(mask[e1]) < 2 || e1 > best.load(std::memory_order_relaxed)) continue;
    auto a = h.edge(e1);
    std::vector<std::size_t> partners;
    for (auto x : a) {
      for (auto f : inc.edges_of(x)) {
        if (f > e1 && intersection_size(a, h.edge(f)) == 1) partners.push_back(f);
      }
    }
    std::sort(partners.begin(), partners.end());
    bool done = false;
    for (std::size_t pi = 0; pi < partners.size() && !done; ++pi) {
      const std::size_t e2 = partners[pi];
      auto b = h.edge(e2);
      const Vertex x = intersect(a, b).front();
      std::size_t e3_best = kNone;
      for (auto y : b) {
        if (y == x) continue;
        for (auto f : inc.edges_of(y)) {
          if (f <= e2 || f >= e3_best) continue;
          auto c = h.edge(f);
          if (intersection_size(b, c) != 1) continue;
          auto ca = intersect(a, c);
          if (ca.size() == 1 && ca.front() != x) e3_best = f;
        }
      }
      if (e3_best != kNone) {
#pragma omp critical(hyperpath_triangle_best)
        {
          if (e1 < best.load()) {
            best.store(e1);
            found = {e1, e2, e3_best};
          }
        }
        done = true;
      }
    }
  }
  if (best.load() == kNone) return std::nullopt;
  return found;
}

bool contains_triangle(const Hypergraph& h) { return find_triangle(h).has_value(); }

bool is_star_union(const Hypergraph& h, int max_stars, int center_size) {
  if (!((center_size == 2 && h.k() == 4) || (center_size == 1 && h.k() == 3))) {
    throw InvalidArgument("star unions are defined for (k=4, c=2) and (k=3, c=1); got k = " +
                          std::to_string(h.k()) + ", c = " + std::to_string(center_size));
  }
  if (max_stars < 0) throw InvalidArgument("max_stars must be >= 0");
  if (h.m() == 0) return true;
  // Vertex-disjoint groups sharing a center are exactly the components.
  const auto comps = components(h);
  if (comps.parts.size() > static_cast<std::size_t>(max_stars)) return false;
  std::vector<VertexSet> common(comps.parts.size());
  std::vector<char> seen(comps.parts.size(), 0);
  for (std::size_t i = 0; i < h.m(); ++i) {
    const auto c = comps.edge_component[i];
    if (!seen[c]) {
      common[c] = h.edge_set(i);
      seen[c] = 1;
    } else {
      common[c] = intersect(common[c], h.edge(i));
    }
  }
  return std::all_of(common.begin(), common.end(), [center_size](const VertexSet& s) {
    return s.size() >= static_cast<std::size_t>(center_size);
  });
}

namespace reference {

std::optional<std::pair<std::size_t, std::size_t>> find_linear_pair(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.m(); ++i) {
    for (std::size_t j = i + 1; j < h.m(); ++j) {
      if (intersection_size(h.edge(i), h.edge(j)) == 1) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

namespace {

bool extend_naive(const Hypergraph& h, std::vector<std::size_t>& path, std::size_t length) {
  if (path.size() == length) return true;
  for (std::size_t f = 0; f < h.m(); ++f) {
    if (std::find(path.begin(), path.end(), f) != path.end()) continue;
    bool ok = intersection_size(h.edge(path.back()), h.edge(f)) == 1;
    for (std::size_t p = 0; ok && p + 1 < path.size(); ++p) {
      ok = intersection_size(h.edge(path[p]), h.edge(f)) == 0;
    }
    if (!ok) continue;
    path.push_back(f);
    if (extend_naive(h, path, length)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PathWitness> find_loose_path(const Hypergraph& h, int length) {
  if (length < 1) throw InvalidArgument("path length must be >= 1");
  for (std::size_t first = 0; first < h.m(); ++first) {
    std::vector<std::size_t> path{first};
    if (extend_naive(h, path, static_cast<std::size_t>(length))) return make_witness(h, path);
  }
  return std::nullopt;
}

bool contains_triangle(const Hypergraph& h) {
  if (h.k() != 3) throw InvalidArgument("triangle detection requires a 3-graph");
  for (std::size_t i = 0; i < h.m(); ++i) {
    for (std::size_t j = i + 1; j < h.m(); ++j) {
      auto ij = intersect(h.edge(i), h.edge(j));
      if (ij.size() != 1) continue;
      for (std::size_t l = j + 1; l < h.m(); ++l) {
        auto jl = intersect(h.edge(j), h.edge(l));
        auto il = intersect(h.edge(i), h.edge(l));
        if (jl.size() == 1 && il.size() == 1 && jl != ij && il != ij && jl != il) return true;
      }
    }
  }
  return false;
}

}  // namespace reference

}  // namespace hyperpath
