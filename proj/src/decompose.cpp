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

#include "hyperpath/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperpath/error.hpp"
#include "hyperpath/pathfree.hpp"

namespace hyperpath {

std::string_view to_string(SignatureKind kind) {
  switch (kind) {
    case SignatureKind::TwoDisjointDubletons:
      return "TwoDisjointDubletons";
    case SignatureKind::DubletonPlusTwoTriples:
      return "DubletonPlusTwoTriples";
    case SignatureKind::SingletonPlusDisjointDubleton:
      return "SingletonPlusDisjointDubleton";
    case SignatureKind::TwoDubletonsMeetingInSingleton:
      return "TwoDubletonsMeetingInSingleton";
    case SignatureKind::Other:
      return "Other";
  }
  return "Other";
}

namespace {

std::string describe(const std::vector<VertexSet>& parts) {
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += "{";
    for (std::size_t j = 0; j < parts[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(parts[i][j]);
    }
    s += "}";
  }
  return s + "}";
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Classes of non-isolated vertices with identical incident edge lists.
std::vector<VertexSet> incidence_classes(const Hypergraph& h) {
  const Incidence inc(h);
  std::map<std::vector<std::uint32_t>, VertexSet> groups;
  for (Vertex v = 0; v < h.n(); ++v) {
    auto es = inc.edges_of(v);
    if (es.empty()) continue;
    groups[{es.begin(), es.end()}].push_back(v);
  }
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& [_, vs] : groups) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

SignatureClass classify(const Hypergraph& h, const Signature& sg) {
  const auto& p = sg.parts;
  auto other = [&](std::string why) {
    return SignatureClass{SignatureKind::Other, why + ": " + describe(p)};
  };
  if (h.k() == 4) {
    std::vector<VertexSet> dub, tri;
    for (const auto& s : p) {
      if (s.size() == 2) dub.push_back(s);
      else if (s.size() == 3) tri.push_back(s);
      else return other("part of size " + std::to_string(s.size()));
    }
    if (dub.size() == 2 && tri.empty() && intersect(dub[0], dub[1]).empty()) {
      return {SignatureKind::TwoDisjointDubletons, {}};
    }
    if (dub.size() == 1 && tri.size() == 2 && intersect(tri[0], tri[1]) == dub[0]) {
      return {SignatureKind::DubletonPlusTwoTriples, {}};
    }
    return other("unexpected shape");
  }
  if (h.k() == 3) {
    std::vector<VertexSet> one, dub;
    for (const auto& s : p) {
      if (s.size() == 1) one.push_back(s);
      else dub.push_back(s);
    }
    if (one.size() == 1 && dub.size() == 1 && !subset_of(one[0], dub[0])) {
      return {SignatureKind::SingletonPlusDisjointDubleton, {}};
    }
    if (dub.size() == 2) {
      const auto meet = intersect(dub[0], dub[1]);
      if (meet.size() == 1 && (one.empty() || (one.size() == 1 && one[0] == meet))) {
        return {SignatureKind::TwoDubletonsMeetingInSingleton, {}};
      }
    }
    return other("unexpected shape");
  }
  return other("uniformity " + std::to_string(h.k()) + " has no signature classes");
}

}  // namespace

SignatureClass classify_edge_signature(const Hypergraph& h, std::size_t edge_id) {
  if (edge_id >= h.m()) throw InvalidArgument("edge id out of range");
  return classify(h, signature(h, h.edge(edge_id)));
}

SignatureClass classify_edge_signature(const Hypergraph& h, const Incidence& inc, std::size_t edge_id) {
  if (edge_id >= h.m()) throw InvalidArgument("edge id out of range");
  return classify(h, signature(h, inc, h.edge(edge_id)));
}

std::size_t peel_threshold(int k) { return k == 4 ? 10 : 6; }

namespace {

// Removes vertices (and their residual edges) one at a time.
class Peeler {
 public:
  explicit Peeler(const Hypergraph& h)
      : h_(h), inc_(h), alive_(h.m(), 1), removed_(h.n(), 0), deg_(h.n()) {
    for (Vertex v = 0; v < h.n(); ++v) deg_[v] = inc_.degree(v);
  }

  // Returns the surviving vertices whose degree dropped.
  VertexSet remove(Vertex v, Decomposition& d) {
    removed_[v] = 1;
    d.R.push_back(v);
    d.peel_order.push_back(v);
    VertexSet touched;
    for (auto e : inc_.edges_of(v)) {
      if (!alive_[e]) continue;
      alive_[e] = 0;
      d.H_R.push_back(e);
      for (auto u : h_.edge(e)) {
        --deg_[u];
        if (!removed_[u]) touched.push_back(u);
      }
    }
    return touched;
  }

  void peel_low_degree(std::size_t threshold, Decomposition& d) {
    std::set<Vertex> low;
    for (Vertex v = 0; v < h_.n(); ++v) {
      if (!removed_[v] && deg_[v] <= threshold) low.insert(v);
    }
    while (!low.empty()) {
      const Vertex v = *low.begin();
      low.erase(low.begin());
      for (auto u : remove(v, d)) {
        if (deg_[u] <= threshold) low.insert(u);
      }
    }
  }

  bool removed(Vertex v) const { return removed_[v] != 0; }

 private:
  const Hypergraph& h_;
  Incidence inc_;
  std::vector<char> alive_;
  std::vector<char> removed_;
  std::vector<std::size_t> deg_;
};

// Splits the residual edges into H_S / H_T and groups H_T by e ∩ S.
void finish(const Hypergraph& h, Decomposition& d, const Residual& res, VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  d.S = std::move(s);
  std::sort(d.R.begin(), d.R.end());
  std::sort(d.H_R.begin(), d.H_R.end());
  for (Vertex v = 0; v < h.n(); ++v) {
    if (!std::binary_search(d.R.begin(), d.R.end(), v) && !std::binary_search(d.S.begin(), d.S.end(), v)) {
      d.T.push_back(v);
    }
  }
  std::map<VertexSet, std::size_t> by_center;
  for (std::size_t i = 0; i < res.ids.size(); ++i) {
    const auto e = res.graph.edge(i);
    auto center = intersect(e, d.S);
    if (center.size() == e.size()) {
      d.H_S.push_back(res.ids[i]);
      continue;
    }
    d.H_T.push_back(res.ids[i]);
    auto [it, fresh] = by_center.try_emplace(center, d.stars.size());
    if (fresh) d.stars.push_back({center, {}, {}});
    auto& star = d.stars[it->second];
    star.edges.push_back(res.ids[i]);
    for (auto v : e) {
      if (!std::binary_search(center.begin(), center.end(), v)) star.leaves.push_back(v);
    }
  }
  for (auto& star : d.stars) {
    std::sort(star.leaves.begin(), star.leaves.end());
    star.leaves.erase(std::unique(star.leaves.begin(), star.leaves.end()), star.leaves.end());
  }
}

void warn_overlapping(const TwinSet& tw, Decomposition& d) {
  for (const auto& c : tw.classes) {
    if (c.size() >= 3) {
      std::string s;
      for (auto v : c) s += (s.empty() ? "" : ",") + std::to_string(v);
      d.warnings.push_back("overlapping twins {" + s + "} all placed in S");
    }
  }
}

}  // namespace

Residual residual(const Hypergraph& h, const Decomposition& d) {
  std::vector<char> in_r(h.n(), 0);
  for (auto v : d.R) in_r[v] = 1;
  Residual res;
  for (std::size_t i = 0; i < h.m(); ++i) {
    const auto e = h.edge(i);
    if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return in_r[v] != 0; })) res.ids.push_back(i);
  }
  // Canonical order of a subset of a canonical list is unchanged.
  res.graph = h.subgraph(res.ids);
  return res;
}

Decomposition decompose4(const Hypergraph& h) {
  if (h.k() != 4) throw InvalidArgument("decompose4 needs a 4-graph");
  if (!is_p42_free(h)) throw InvalidArgument("input contains a loose path of length 2");
  Decomposition d;
  d.k = 4;
  Peeler peeler(h);
  peeler.peel_low_degree(peel_threshold(4), d);
  const auto res = residual(h, d);
  const auto tw = twins(res.graph);
  warn_overlapping(tw, d);
  finish(h, d, res, tw.covered);
  return d;
}

Decomposition decompose3(const Hypergraph& h) {
  if (h.k() != 3) throw InvalidArgument("decompose3 needs a 3-graph");
  if (find_loose_path(h, 3)) throw InvalidArgument("input contains a loose path of length 3");
  Decomposition d;
  d.k = 3;
  Peeler peeler(h);
  const auto comps = components(h);
  std::vector<std::vector<std::size_t>> comp_edges(comps.parts.size());
  for (std::size_t i = 0; i < h.m(); ++i) comp_edges[comps.edge_component[i]].push_back(i);
  for (std::size_t c = 0; c < comps.parts.size(); ++c) {
    if (!contains_triangle(h.subgraph(comp_edges[c]))) continue;
    for (auto v : comps.parts[c]) {
      d.triangle_vertices.push_back(v);
      peeler.remove(v, d);
    }
  }
  peeler.peel_low_degree(peel_threshold(3), d);
  const auto res = residual(h, d);
  const auto tw = twins(res.graph);
  warn_overlapping(tw, d);
  VertexSet s = tw.covered;
  const auto masks = linear_partner_mask(res.graph);
  for (std::size_t i = 0; i < res.graph.m(); ++i) {
    const auto e = res.graph.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (masks[i] >> j & 1U) s.push_back(e[j]);
    }
  }
  finish(h, d, res, std::move(s));
  return d;
}

bool is_thick_clique_subgraph(const Hypergraph& h) {
  const auto classes = incidence_classes(h);
  return std::all_of(classes.begin(), classes.end(), [](const VertexSet& c) { return c.size() % 2 == 0; });
}

bool is_quasi_bipartite(const Hypergraph& h) {
  if (h.k() != 3) return false;
  const auto classes = incidence_classes(h);
  std::vector<std::size_t> class_size(h.n(), 0);
  for (const auto& c : classes) {
    for (auto v : c) class_size[v] = c.size();
  }
  for (std::size_t i = 0; i < h.m(); ++i) {
    const auto e = h.edge(i);
    std::size_t pair_vertices = 0;
    std::size_t z_vertices = 0;
    for (auto v : e) {
      if (class_size[v] == 3) {
        pair_vertices = 2;
        z_vertices = 1;
        break;
      }
      if (class_size[v] == 2) ++pair_vertices;
      if (class_size[v] == 1) ++z_vertices;
    }
    if (pair_vertices != 2 || z_vertices != 1) return false;
  }
  return true;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.pass; });
}

const InvariantCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ValidationReport validate(const Decomposition& d, const Hypergraph& h) {
  if (d.k != h.k()) throw InvalidArgument("decomposition and graph disagree on uniformity");
  if (d.k != 3 && d.k != 4) throw InvalidArgument("decompositions exist for k = 3 and k = 4");
  const std::size_t n = h.n();
  ValidationReport rep;
  auto add = [&rep](InvariantCheck c) { rep.checks.push_back(std::move(c)); };

  // Vertex roles; 0 = unassigned.
  std::vector<int> role(n, 0);
  {
    InvariantCheck c{"vertex_partition", true, {}, {}};
    auto mark = [&](const VertexSet& xs, int r) {
      for (auto v : xs) {
        if (v >= n) {
          c.pass = false;
          c.detail = "vertex " + std::to_string(v) + " out of range";
          continue;
        }
        if (role[v] != 0) {
          c.pass = false;
          c.witness.push_back({v});
        }
        role[v] = r;
      }
    };
    mark(d.R, 1);
    mark(d.S, 2);
    mark(d.T, 3);
    for (Vertex v = 0; v < n; ++v) {
      if (role[v] == 0) {
        c.pass = false;
        c.witness.push_back({v});
      }
    }
    if (!c.pass && c.detail.empty()) c.detail = "R, S, T overlap or miss vertices";
    add(c);
  }

  {
    InvariantCheck c{"edge_classes", true, {}, {}};
    std::vector<int> cls(h.m(), 0);
    auto mark = [&](const std::vector<std::size_t>& ids, int x) {
      for (auto i : ids) {
        if (i >= h.m() || cls[i] != 0) {
          c.pass = false;
          c.detail = "edge listed twice or out of range";
          continue;
        }
        cls[i] = x;
      }
    };
    mark(d.H_R, 1);
    mark(d.H_S, 2);
    mark(d.H_T, 3);
    for (std::size_t i = 0; i < h.m(); ++i) {
      const auto e = h.edge(i);
      bool meets_r = false;
      bool inside_s = true;
      for (auto v : e) {
        meets_r |= role[v] == 1;
        inside_s &= role[v] == 2;
      }
      const int want = meets_r ? 1 : (inside_s ? 2 : 3);
      if (cls[i] != want) {
        c.pass = false;
        c.witness.push_back(h.edge_set(i));
      }
    }
    if (!c.pass && c.detail.empty()) c.detail = "edges placed in the wrong class";
    add(c);
  }

  {
    const std::size_t factor = peel_threshold(d.k);
    InvariantCheck c{"hr_bound", d.H_R.size() <= factor * d.R.size(), {}, {}};
    c.detail = "|H_R| = " + std::to_string(d.H_R.size()) + ", bound " + std::to_string(factor * d.R.size());
    add(c);
  }

  const auto hs = h.subgraph(d.H_S);
  {
    const std::size_t s = d.S.size();
    InvariantCheck c{"hs_structure", true, {}, {}};
    if (d.k == 4) {
      c.pass = is_thick_clique_subgraph(hs) && d.H_S.size() <= binom(s / 2, 2);
      c.detail = "|H_S| = " + std::to_string(d.H_S.size()) + ", thick clique capacity " +
                 std::to_string(binom(s / 2, 2));
    } else {
      c.pass = is_quasi_bipartite(hs) && 8 * d.H_S.size() <= s * s;
      c.detail = "|H_S| = " + std::to_string(d.H_S.size()) + ", |S|^2/8 = " + std::to_string(s * s / 8.0);
    }
    if (!c.pass) {
      for (const auto& cl : incidence_classes(hs)) {
        if ((d.k == 4 && cl.size() % 2 == 1) || (d.k == 3 && cl.size() > 3)) c.witness.push_back(cl);
      }
    }
    add(c);
  }

  {
    const std::size_t csize = static_cast<std::size_t>(d.k) - 2;
    InvariantCheck c{"ht_stars", true, {}, {}};
    std::vector<char> used(n, 0);
    std::vector<char> covered(h.m(), 0);
    for (const auto& star : d.stars) {
      bool good = star.center.size() == csize;
      for (auto v : star.center) good &= v < n && role[v] == 2;
      for (auto v : star.leaves) good &= v < n && role[v] == 3;
      VertexSet all = star.center;
      all.insert(all.end(), star.leaves.begin(), star.leaves.end());
      for (auto v : all) {
        if (v < n) {
          good &= used[v] == 0;
          used[v] = 1;
        }
      }
      for (auto i : star.edges) {
        if (i >= h.m()) {
          good = false;
          continue;
        }
        const auto e = h.edge(i);
        good &= std::includes(e.begin(), e.end(), star.center.begin(), star.center.end());
        for (auto v : e) {
          good &= std::binary_search(star.center.begin(), star.center.end(), v) ||
                  std::binary_search(star.leaves.begin(), star.leaves.end(), v);
        }
        good &= covered[i] == 0;
        covered[i] = 1;
      }
      if (!good) {
        c.pass = false;
        c.witness.push_back(star.center);
      }
      rep.largest_star = std::max(rep.largest_star, star.edges.size());
    }
    for (auto i : d.H_T) {
      if (i < h.m() && !covered[i]) {
        c.pass = false;
        c.witness.push_back(h.edge_set(i));
      }
    }
    const auto cap = binom(d.T.size(), 2);
    if (d.H_T.size() > cap) c.pass = false;
    c.detail = "|H_T| = " + std::to_string(d.H_T.size()) + ", C(|T|,2) = " + std::to_string(cap) + ", " +
               std::to_string(d.stars.size()) + " stars";
    add(c);
  }

  {
    Residual res = residual(h, d);
    InvariantCheck deg{"residual_min_degree", true, {}, {}};
    const auto ds = degrees(res.graph);
    for (Vertex v = 0; v < n; ++v) {
      if (role[v] != 1 && ds[v] <= peel_threshold(d.k)) {
        deg.pass = false;
        deg.witness.push_back({v});
      }
    }
    deg.detail = "every vertex outside R has residual degree > " + std::to_string(peel_threshold(d.k));
    add(deg);

    InvariantCheck sig{"residual_signatures", true, {}, {}};
    const Incidence rinc(res.graph);
    for (std::size_t i = 0; i < res.graph.m(); ++i) {
      const auto cls = classify_edge_signature(res.graph, rinc, i);
      const bool want = d.k == 4 ? (cls.kind == SignatureKind::TwoDisjointDubletons ||
                                    cls.kind == SignatureKind::DubletonPlusTwoTriples)
                                 : (cls.kind == SignatureKind::SingletonPlusDisjointDubleton ||
                                    cls.kind == SignatureKind::TwoDubletonsMeetingInSingleton);
      if (!want) {
        sig.pass = false;
        if (sig.witness.size() < 8) sig.witness.push_back(res.graph.edge_set(i));
        if (sig.detail.empty()) sig.detail = cls.reason;
      }
    }
    add(sig);
  }
  return rep;
}

}  // namespace hyperpath
