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

#include "hyperpath/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "hyperpath/asymptotics.hpp"
#include "hyperpath/constructions.hpp"
#include "hyperpath/decompose.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/oracle.hpp"
#include "hyperpath/pathfree.hpp"

namespace hyperpath {

using nlohmann::json;

std::string to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Pass:
      return "pass";
    case CriterionStatus::Fail:
      return "fail";
    case CriterionStatus::Skipped:
      return "skipped";
  }
  return "skipped";
}

namespace {

// Collects failures; the first few are kept verbatim for the report.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (messages_.size() < 10) messages_.push_back(what);
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " checks passed";
    for (const auto& m : messages_) os << "; " << m;
    return os.str();
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> messages_;
};

std::string u(std::uint64_t x) { return std::to_string(x); }

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  auto edges = a.edge_list();
  const auto shift = static_cast<Vertex>(a.n());
  for (auto e : b.edge_list()) {
    for (auto& v : e) v += shift;
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_edges(a.k(), a.n() + b.n(), std::move(edges));
}

bool is_p33_free(const Hypergraph& h) { return !find_loose_path(h, 3).has_value(); }

SearchBudget budget_for(double remaining) { return {0, std::max(remaining, 0.001)}; }

struct Context {
  const VerifyOptions& opts;
  double remaining;
};

void p42_extremal_table(CriterionResult& r, Checks& c, const Context& ctx) {
  const std::uint64_t expected[] = {1, 5, 15, 15, 17};
  json rows = json::array();
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto res = max_pfree_edges(4, 2, n, budget_for(ctx.remaining));
    const auto want = expected[n - 4];
    c.expect(res.complete, "n=" + u(n) + " search incomplete");
    c.expect(res.value == want, "n=" + u(n) + ": got " + u(res.value) + ", expected " + u(want));
    c.expect(res.witness.m() == res.value && is_p42_free(res.witness), "n=" + u(n) + " witness invalid");
    rows.push_back({{"n", n}, {"value", res.value}, {"expected", want}, {"nodes", res.nodes_explored}});
  }
  r.data["table"] = rows;
}

void p33_extremal_table(CriterionResult& r, Checks& c, const Context& ctx) {
  const std::uint64_t expected[] = {1, 4, 10, 20, 20};
  json rows = json::array();
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto res = max_pfree_edges(3, 3, n, budget_for(ctx.remaining));
    const auto want = expected[n - 3];
    c.expect(res.complete, "n=" + u(n) + " search incomplete");
    c.expect(res.value == want, "n=" + u(n) + ": got " + u(res.value) + ", expected " + u(want));
    c.expect(res.witness.m() == res.value && is_p33_free(res.witness), "n=" + u(n) + " witness invalid");
    rows.push_back({{"n", n}, {"value", res.value}, {"expected", want}, {"nodes", res.nodes_explored}});
  }
  r.data["table"] = rows;
}

void rescaling_gap(CriterionResult& r, Checks& c, const Context&) {
  for (std::size_t n = 4; n <= 200; ++n) {
    const auto tc = thick_clique(n).graph;
    c.expect(tc.m() == binom(n / 2, 2), "thick clique n=" + u(n) + " edge count");
    c.expect(max_degree(tc) == n / 2 - 1, "thick clique n=" + u(n) + " max degree");
    c.expect(is_p42_free(tc), "thick clique n=" + u(n) + " contains a path");
    const auto qb = max_quasi_bipartite(n).graph;
    c.expect(qb.m() == n * n / 8, "quasi-bipartite n=" + u(n) + " edge count " + u(qb.m()));
    c.expect(max_degree(qb) <= (n + 1) / 2, "quasi-bipartite n=" + u(n) + " max degree");
    c.expect(is_p33_free(qb), "quasi-bipartite n=" + u(n) + " contains a path");
  }
  r.data["n_range"] = {4, 200};
}

void f413_deletion(CriterionResult& r, Checks& c, const Context& ctx) {
  const auto res = deletion_distance(f413().graph, 4, 2, budget_for(ctx.remaining));
  c.expect(res.complete, "search incomplete");
  c.expect(res.value >= 8, "deletion distance " + u(res.value) + " < 8");
  c.expect(res.value == kF413DeletionGolden, "deletion distance " + u(res.value) + " differs from golden " +
                                                 u(kF413DeletionGolden));
  c.expect(is_star_union(res.witness, 4, 2), "remaining graph is not a star union");
  r.data["value"] = res.value;
  r.data["golden"] = kF413DeletionGolden;
  r.data["deleted"] = res.deleted;
}

void sandwich(CriterionResult& r, Checks& c, const Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  json rows = json::array();
  for (std::size_t n = 7; n <= 9; ++n) {
    std::uint64_t prev = 0;
    for (std::size_t m = 0; m <= binom(n / 2, 2); ++m) {
      const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const auto res = min_max_degree(4, 2, n, m, budget_for(ctx.remaining - used));
      const auto [lo, hi] = degree_bounds(n, m);
      const std::string at = "(n=" + u(n) + ", m=" + u(m) + ")";
      c.expect(res.complete, at + " search incomplete");
      c.expect(lo <= res.value && res.value <= hi,
               at + ": " + u(res.value) + " outside [" + u(lo) + ", " + u(hi) + "]");
      c.expect(res.value >= prev, at + " decreases");
      c.expect(res.witness.m() == m && max_degree(res.witness) == res.value && is_p42_free(res.witness),
               at + " witness invalid");
      prev = res.value;
      rows.push_back({{"n", n}, {"m", m}, {"value", res.value}, {"lo", lo}, {"hi", hi}});
    }
  }
  r.data["table"] = rows;
}

void curve(CriterionResult& r, Checks& c, const Context&) {
  c.expect(f_of_x(0.2) == 0.0, "f(0.2) != 0");
  c.expect(f_of_x(1.0) == 1.0, "f(1) != 1");
  for (auto [b, piece] : {std::pair{1.0 / 3.0, 2}, std::pair{0.5, 3}}) {
    const double branch_gap = std::abs(curve_piece(piece, b) - curve_piece(piece + 1, b));
    const double step_gap = std::abs(*f_of_x(b - 1e-9) - *f_of_x(b + 1e-9));
    // One-sided limits at b are the neighbouring pieces evaluated at b. The
    // values at b -/+ 1e-9 are only reported: right of 1/2 the slope is
    // unbounded, so their gap is of order sqrt(1e-9).
    c.expect(branch_gap < 1e-12, "pieces disagree at " + std::to_string(b));
    r.data["continuity"].push_back({{"x", b}, {"branch_gap", branch_gap}, {"step_gap", step_gap}});
  }
  const auto [left, right] = jump_at_quarter();
  c.expect(left == 0.0 && std::abs(right - 1.0 / 16.0) < 1e-15, "jump at 1/4 is not (0, 1/16)");
  c.expect(!f_of_x(0.25).has_value() && !f_of_x(1, 4).has_value(), "f defined at 1/4");
  r.data["jump"] = {left, right};
}

void convergence(CriterionResult& r, Checks& c, const Context&) {
  const std::size_t n = 1000;
  const auto norm = density_normalizer(n, 4);
  for (double x : {0.30, 0.40, 0.75, 1.00}) {
    const auto m = static_cast<std::size_t>(std::llround(x * static_cast<double>(norm)));
    const auto g = balanced_star_union(n, m, 4).graph;
    const double ratio = static_cast<double>(max_degree(g)) / static_cast<double>(norm);
    const double fx = *f_of_x(x);
    const double rel = std::abs(ratio - fx) / fx;
    c.expect(g.m() == m, "x=" + std::to_string(x) + " wrong edge count");
    c.expect(rel <= 0.02, "x=" + std::to_string(x) + ": ratio " + std::to_string(ratio) + " vs f " + std::to_string(fx));
    c.expect(is_star_union(g, 4, 2) && is_p42_free(g), "x=" + std::to_string(x) + " not a free star union");
    r.data["star_unions"].push_back({{"x", x}, {"m", m}, {"ratio", ratio}, {"fx", fx}, {"relative_error", rel}});
  }
  const auto cap = binom(n / 2, 2);
  for (std::size_t i = 1; i <= 20; ++i) {
    const std::size_t m = cap * i / 20 - (i % 3);
    const auto g = near_regular_thick_subgraph(n, m).graph;
    const auto bound = (4 * m + n - 1) / n;
    c.expect(g.m() == m && max_degree(g) <= bound, "near-regular m=" + u(m) + " max degree " + u(max_degree(g)));
    if (i % 5 == 0) c.expect(is_p42_free(g), "near-regular m=" + u(m) + " contains a path");
    r.data["near_regular"].push_back({{"m", m}, {"max_degree", max_degree(g)}, {"bound", bound}});
  }
}

struct GalleryItem {
  std::string name;
  Hypergraph graph;
};

std::vector<GalleryItem> decomposition_gallery() {
  std::vector<GalleryItem> g;
  g.push_back({"thick-clique(26)", thick_clique(26).graph});
  g.push_back({"thick-clique(31)", thick_clique(31).graph});
  g.push_back({"two-star(14)", complete_two_star(14).graph});
  g.push_back({"balanced-star-union(60,800,4)", balanced_star_union(60, 800, 4).graph});
  g.push_back({"balanced-star-union(80,1500,4)", balanced_star_union(80, 1500, 4).graph});
  g.push_back({"near-regular-thick(40,150)", near_regular_thick_subgraph(40, 150).graph});
  g.push_back({"H41(100)", gallery(GalleryGraph::H41, 100).graph});
  g.push_back({"H41(20)", gallery(GalleryGraph::H41, 20).graph});
  g.push_back({"H42(20)", gallery(GalleryGraph::H42, 20).graph});
  g.push_back({"H43(20)", gallery(GalleryGraph::H43, 20).graph});
  g.push_back({"f413+thick-clique(26)", disjoint_union(f413().graph, thick_clique(26).graph)});
  g.push_back({"f413+two-star(16)", disjoint_union(f413().graph, complete_two_star(16).graph)});
  g.push_back({"quasi-bipartite(40)", max_quasi_bipartite(40).graph});
  g.push_back({"quasi-bipartite(6,9)", quasi_bipartite(6, 9).graph});
  g.push_back({"star(20)", complete_star(20).graph});
  g.push_back({"balanced-star-union(60,900,3)", balanced_star_union(60, 900, 3).graph});
  g.push_back({"triangle", Hypergraph::from_edges(3, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}})});
  g.push_back({"triangle+quasi-bipartite(30)",
               disjoint_union(Hypergraph::from_edges(3, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}),
                              max_quasi_bipartite(30).graph)});
  return g;
}

std::string failed_checks(const ValidationReport& rep) {
  std::string s;
  for (const auto& c : rep.checks) {
    if (!c.pass) s += (s.empty() ? "" : ",") + c.name;
  }
  return s;
}

void decomposition_suite(CriterionResult& r, Checks& c, const Context& ctx) {
  const auto gal = decomposition_gallery();
  for (const auto& item : gal) {
    const auto d = item.graph.k() == 4 ? decompose4(item.graph) : decompose3(item.graph);
    const auto rep = validate(d, item.graph);
    c.expect(rep.ok(), item.name + " fails " + failed_checks(rep));
    r.data["gallery"].push_back({{"name", item.name},
                                 {"m", item.graph.m()},
                                 {"R", d.R.size()},
                                 {"S", d.S.size()},
                                 {"T", d.T.size()},
                                 {"largest_star", rep.largest_star},
                                 {"ok", rep.ok()}});
  }
  // Random subgraphs of the smaller gallery members.
  std::mt19937_64 rng(ctx.opts.seed);
  std::vector<const GalleryItem*> pool;
  for (const auto& item : gal) {
    if (item.graph.m() <= 2000) pool.push_back(&item);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int failures = 0;
  for (int t = 0; t < ctx.opts.random_subgraphs; ++t) {
    const auto& src = pool[static_cast<std::size_t>(t) % pool.size()]->graph;
    const double keep = 0.3 + 0.7 * unit(rng);
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < src.m(); ++i) {
      if (unit(rng) < keep) ids.push_back(i);
    }
    const auto h = src.subgraph(ids);
    const auto d = h.k() == 4 ? decompose4(h) : decompose3(h);
    const auto rep = validate(d, h);
    if (!rep.ok()) ++failures;
    c.expect(rep.ok(), "random subgraph " + std::to_string(t) + " of " +
                           pool[static_cast<std::size_t>(t) % pool.size()]->name + " fails " + failed_checks(rep));
  }
  r.data["random_subgraphs"] = ctx.opts.random_subgraphs;
  r.data["random_failures"] = failures;
}

// Components of a P^3_2-free witness: 2-stars (a pair in every edge) or
// graphs on at most four vertices.
bool p32_component_shapes(const Hypergraph& h, std::string& why) {
  const auto comps = components(h);
  std::vector<VertexSet> common(comps.parts.size());
  std::vector<char> seen(comps.parts.size(), 0);
  for (std::size_t i = 0; i < h.m(); ++i) {
    const auto k = comps.edge_component[i];
    common[k] = seen[k] ? intersect(common[k], h.edge(i)) : h.edge_set(i);
    seen[k] = 1;
  }
  for (std::size_t k = 0; k < comps.parts.size(); ++k) {
    if (comps.parts[k].size() > 4 && common[k].size() < 2) {
      why = "component of size " + u(comps.parts[k].size()) + " is neither a 2-star nor inside K4";
      return false;
    }
  }
  return true;
}

void p32_facts(CriterionResult& r, Checks& c, const Context& ctx) {
  json rows = json::array();
  std::vector<std::string> discrepancies;
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto res = p32_max_edges(n, budget_for(ctx.remaining));
    const auto formula = p32_formula(n);
    c.expect(res.complete, "n=" + u(n) + " search incomplete");
    c.expect(res.witness.m() == res.value && !find_loose_path(res.witness, 2), "n=" + u(n) + " witness invalid");
    std::string why;
    c.expect(p32_component_shapes(res.witness, why), "n=" + u(n) + ": " + why);
    if (res.value != formula) {
      discrepancies.push_back("n=" + u(n) + ": exact " + u(res.value) + ", closed form " + u(formula));
    }
    c.expect(res.value == formula, "n=" + u(n) + ": exact " + u(res.value) + " != closed form " + u(formula));
    rows.push_back({{"n", n}, {"value", res.value}, {"formula", formula}});
  }
  r.data["table"] = rows;
  r.data["discrepancies"] = discrepancies;
}

// Random maximal connected P^3_3-free graphs grown from a triangle.
Hypergraph grow_from_triangle(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = v;
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<VertexSet> edges = {{labels[0], labels[1], labels[2]},
                                  {labels[2], labels[3], labels[4]},
                                  {labels[4], labels[5], labels[0]}};
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::vector<VertexSet> cand;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex d = b + 1; d < n; ++d) cand.push_back({a, b, d});
    }
  }
  std::shuffle(cand.begin(), cand.end(), rng);
  std::vector<char> touched(n, 0);
  for (const auto& e : edges) {
    for (auto v : e) touched[v] = 1;
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : cand) {
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
      if (!touched[e[0]] && !touched[e[1]] && !touched[e[2]]) continue;
      edges.push_back(e);
      if (find_loose_path(Hypergraph::from_edges(3, n, edges), 3)) {
        edges.pop_back();
      } else {
        for (auto v : e) touched[v] = 1;
      }
    }
  }
  return Hypergraph::from_edges(3, n, std::move(edges));
}

void triangle_bound(CriterionResult& r, Checks& c, const Context& ctx) {
  const std::vector<VertexSet> tri = {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}};
  for (std::size_t n = 6; n <= 9; ++n) {
    const auto res = max_pfree_edges_containing(3, 3, n, tri, budget_for(ctx.remaining));
    c.expect(res.complete, "n=" + u(n) + " search incomplete");
    c.expect(res.value <= 4 * n, "n=" + u(n) + ": " + u(res.value) + " edges > 4n");
    c.expect(contains_triangle(res.witness) && is_p33_free(res.witness), "n=" + u(n) + " witness invalid");
    r.data["extremal_with_triangle"].push_back({{"n", n}, {"value", res.value}, {"bound", 4 * n}});
  }
  std::mt19937_64 rng(ctx.opts.seed ^ 0x5eedU);
  std::size_t samples = 0;
  std::size_t worst = 0;
  for (std::size_t n = 6; n <= 9; ++n) {
    for (int t = 0; t < 50; ++t) {
      const auto h = grow_from_triangle(n, rng);
      const auto verts = non_isolated(h).size();
      const bool connected = components(h).parts.size() == 1;
      c.expect(connected && contains_triangle(h) && is_p33_free(h), "generator produced an invalid sample");
      c.expect(h.m() <= 4 * verts, "sample with " + u(verts) + " vertices has " + u(h.m()) + " edges");
      worst = std::max(worst, h.m());
      ++samples;
    }
  }
  r.data["random_samples"] = samples;
  r.data["random_max_edges"] = worst;
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<void(CriterionResult&, Checks&, const Context&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "p42-extremal-table", 60, p42_extremal_table},
      {2, "p33-extremal-table", 600, p33_extremal_table},
      {3, "rescaling-gap", 10, rescaling_gap},
      {4, "f413-deletion", 60, f413_deletion},
      {5, "sandwich-bounds", 300, sandwich},
      {6, "curve-checks", 1, curve},
      {7, "construction-convergence", 30, convergence},
      {8, "decomposition-suite", 120, decomposition_suite},
      {9, "p32-facts", 120, p32_facts},
      {10, "triangle-bound", 120, triangle_bound},
  };
  return list;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  std::vector<CriterionResult> out;
  for (const auto& crit : criteria()) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), crit.id) == opts.only.end()) continue;
    CriterionResult r;
    r.id = crit.id;
    r.name = crit.name;
    r.limit_seconds = crit.limit;
    const double remaining = opts.budget_seconds - elapsed();
    if (remaining <= 0) {
      r.status = CriterionStatus::Skipped;
      r.detail = "budget exhausted";
      out.push_back(std::move(r));
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Checks checks;
    try {
      crit.run(r, checks, Context{opts, remaining});
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checks.expect(r.seconds <= r.limit_seconds,
                  "took " + std::to_string(r.seconds) + " s, limit " + std::to_string(r.limit_seconds) + " s");
    r.status = checks.ok() ? CriterionStatus::Pass : CriterionStatus::Fail;
    r.detail = checks.summary();
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const std::vector<CriterionResult>& results, const VerifyOptions& opts) {
  json j;
  j["budget_seconds"] = opts.budget_seconds;
  j["seed"] = opts.seed;
  j["criteria"] = json::array();
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  for (const auto& r : results) {
    j["criteria"].push_back({{"id", r.id},
                             {"name", r.name},
                             {"status", to_string(r.status)},
                             {"seconds", r.seconds},
                             {"limit_seconds", r.limit_seconds},
                             {"detail", r.detail},
                             {"data", r.data}});
    if (r.status == CriterionStatus::Pass) ++pass;
    else if (r.status == CriterionStatus::Fail) ++fail;
    else ++skipped;
  }
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"all_passed", fail == 0 && skipped == 0}};
  return j;
}

}  // namespace hyperpath
