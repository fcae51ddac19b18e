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

#include "hyperpath/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>

#include "hyperpath/constructions.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/pathfree.hpp"
#include "search_engine.hpp"

namespace hyperpath {

std::string_view to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::Exhaustive:
      return "exhaustive";
    case SearchMethod::BranchAndBound:
      return "branch-and-bound";
    case SearchMethod::CliqueReduction:
      return "clique-reduction";
    case SearchMethod::Sandwich:
      return "sandwich";
  }
  return "";
}

namespace detail {

Problem make_problem(int k, int l, std::size_t n) {
  if (k < 2) throw InvalidArgument("uniformity must be >= 2");
  if (l != 2 && l != 3) throw InvalidArgument("exact search supports path lengths 2 and 3");
  if (l == 3 && k != 3) throw InvalidArgument("length-3 search is implemented for k = 3 only");
  if (binom(n, static_cast<std::uint64_t>(k)) > 256) {
    throw InvalidArgument("C(" + std::to_string(n) + "," + std::to_string(k) +
                          ") candidate edges exceed the search cap of 256");
  }
  Problem p;
  p.k = k;
  p.l = l;
  p.n = n;
  VertexSet cur(static_cast<std::size_t>(k));
  std::function<void(std::size_t, Vertex)> rec = [&](std::size_t pos, Vertex from) {
    if (pos == cur.size()) {
      p.cand.push_back(cur);
      return;
    }
    for (Vertex v = from; v + (cur.size() - pos) <= n; ++v) {
      cur[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  return p;
}

}  // namespace detail

namespace {

using detail::Clock;
using detail::Engine;
using detail::Problem;

template <typename F>
auto with_engine(const Problem& p, Clock& clock, F&& f) {
  const std::size_t N = p.cand.size();
  if (N <= 64) {
    Engine<1> e(p, clock);
    return f(e);
  }
  if (N <= 128) {
    Engine<2> e(p, clock);
    return f(e);
  }
  Engine<4> e(p, clock);
  return f(e);
}

Hypergraph to_graph(const Problem& p, const std::vector<std::uint32_t>& ids) {
  std::vector<VertexSet> edges;
  edges.reserve(ids.size());
  for (auto i : ids) edges.push_back(p.cand[i]);
  return Hypergraph::from_edges(p.k, p.n, std::move(edges));
}

SearchMethod method_for(int l) { return l == 2 ? SearchMethod::CliqueReduction : SearchMethod::BranchAndBound; }

// Value by parallel branch and bound, then the lexicographically least
// witness of that size by a serial ordered search.
SearchResult solve_max(const Problem& p, const SearchBudget& budget) {
  Clock clock(budget);
  SearchResult r;
  r.method = method_for(p.l);
  with_engine(p, clock, [&](auto& engine) {
    std::vector<std::uint32_t> some;
    const std::size_t value = engine.maximize(some);
    r.value = value;
    r.witness = to_graph(p, some);
    if (clock.aborted()) return 0;
    if (auto lex = engine.find(value)) r.witness = to_graph(p, *lex);
    return 0;
  });
  r.complete = !clock.aborted();
  r.nodes_explored = clock.nodes();
  r.seconds = clock.elapsed();
  return r;
}

void check_free(const Hypergraph& h, int l) {
  if (find_loose_path(h, l)) throw InvalidArgument("forced edges already contain the path");
}

}  // namespace

SearchResult max_pfree_edges(int k, int l, std::size_t n, const SearchBudget& budget) {
  if (l == 1) {
    if (k < 2) throw InvalidArgument("uniformity must be >= 2");
    SearchResult r;
    r.witness = Hypergraph(k, n);
    return r;
  }
  return solve_max(detail::make_problem(k, l, n), budget);
}

SearchResult max_pfree_edges_containing(int k, int l, std::size_t n, const std::vector<VertexSet>& forced,
                                        const SearchBudget& budget) {
  Problem p = detail::make_problem(k, l, n);
  const auto fg = Hypergraph::from_edges(k, n, forced);
  check_free(fg, l);
  for (std::size_t i = 0; i < fg.m(); ++i) {
    const auto e = fg.edge_set(i);
    p.forced.push_back(static_cast<std::size_t>(std::lower_bound(p.cand.begin(), p.cand.end(), e) - p.cand.begin()));
  }
  p.break_symmetry = false;
  return solve_max(p, budget);
}

SearchResult min_max_degree(int k, int l, std::size_t n, std::size_t m, const SearchBudget& budget) {
  Problem p = detail::make_problem(k, l, n);
  SearchResult r;
  r.method = method_for(l);
  if (m == 0) {
    r.witness = Hypergraph(k, n);
    return r;
  }
  const SearchResult mx = solve_max(p, budget);
  r.nodes_explored = mx.nodes_explored;
  if (!mx.complete) {
    r.complete = false;
    r.seconds = mx.seconds;
    return r;
  }
  if (m > mx.value) {
    throw Infeasible("m = " + std::to_string(m) + " exceeds the extremal number " + std::to_string(mx.value));
  }
  Clock clock(budget);
  const std::size_t start = std::max<std::size_t>(1, (static_cast<std::size_t>(k) * m + n - 1) / n);
  with_engine(p, clock, [&](auto& engine) {
    for (std::size_t cap = start; cap <= m; ++cap) {
      auto found = engine.find(m, cap);
      if (clock.aborted()) return 0;
      if (found) {
        r.value = cap;
        r.witness = to_graph(p, *found);
        return 0;
      }
    }
    return 0;
  });
  r.complete = !clock.aborted() && r.witness.m() == m;
  r.nodes_explored += clock.nodes();
  r.seconds = mx.seconds + clock.elapsed();
  return r;
}

SearchResult deletion_distance(const Hypergraph& h, int t, int c, const SearchBudget& budget) {
  (void)is_star_union(Hypergraph(h.k(), 0), t, c);  // validates (k, t, c)
  Clock clock(budget);
  SearchResult r;
  r.method = SearchMethod::Exhaustive;
  const std::size_t m = h.m();
  std::vector<std::size_t> best;
  bool found = false;
  for (std::size_t size = 0; size <= m && !found && !clock.aborted(); ++size) {
    if (size == 0) {
      clock.tick();
      found = is_star_union(h, t, c);
      continue;
    }
    std::atomic<std::size_t> first_hit{m};
    std::vector<std::vector<std::size_t>> hit(m);
    const auto mm = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t f = 0; f < mm; ++f) {
      const auto fu = static_cast<std::size_t>(f);
      if (fu + size > m || fu > first_hit.load()) continue;
      std::vector<std::size_t> pick(size);
      std::iota(pick.begin(), pick.end(), fu);
      while (true) {
        if (fu > first_hit.load() || !clock.tick()) break;
        if (is_star_union(h.without_edges(pick), t, c)) {
          hit[fu] = pick;
          std::size_t cur = first_hit.load();
          while (fu < cur && !first_hit.compare_exchange_weak(cur, fu)) {
          }
          break;
        }
        // Next combination with pick[0] fixed.
        std::size_t i = size;
        while (i > 1 && pick[i - 1] == m - size + (i - 1)) --i;
        if (i <= 1) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    if (first_hit.load() < m) {
      best = hit[first_hit.load()];
      found = true;
    }
  }
  r.complete = found;
  r.nodes_explored = clock.nodes();
  r.seconds = clock.elapsed();
  if (found) {
    r.value = best.size();
    r.witness = h.without_edges(best);
    for (auto i : best) r.deleted.push_back(h.edge_set(i));
  }
  return r;
}

SearchResult p32_max_edges(std::size_t n, const SearchBudget& budget) { return max_pfree_edges(3, 2, n, budget); }

std::uint64_t p32_formula(std::size_t n) { return (n + 1) / 4 + 3 * (n / 4); }

PinResult pin_f_value(int k, int l, std::size_t n, std::size_t m) {
  if (k != 4 || l != 2) throw InvalidArgument("pinning is available for k = 4, l = 2 only");
  if (n < 4) throw InvalidArgument("pinning needs n >= 4");
  const std::uint64_t cap = binom(n / 2, 2);
  if (m > cap) {
    throw InvalidArgument("m = " + std::to_string(m) + " is outside the thick clique regime (max " +
                          std::to_string(cap) + ")");
  }
  PinResult pr;
  const std::uint64_t floor_bound = 4 * m / (n - 1);
  const std::uint64_t avg_bound = (4 * m + n - 1) / n;
  if (floor_bound >= avg_bound) {
    pr.lo = floor_bound;
    pr.lo_source = "floor(4m/(n-1))";
  } else {
    pr.lo = avg_bound;
    pr.lo_source = "ceil(4m/n) (average degree)";
  }
  const auto near = near_regular_thick_subgraph(n, m);
  pr.hi = max_degree(near.graph);
  pr.hi_source = "near-regular thick subgraph";
  if (m <= binom(n - 2, 2)) {
    const auto plan = star_union_plan(n, m, 4);
    if (plan.max_degree < pr.hi) {
      pr.hi = plan.max_degree;
      pr.hi_source = "balanced star union";
    }
  }
  pr.determined = pr.lo == pr.hi;
  return pr;
}

namespace reference {

namespace {

bool is_free(const Hypergraph& h, int l) { return !reference::find_loose_path(h, l).has_value(); }

}  // namespace

std::size_t max_pfree_edges_bruteforce(int k, int l, std::size_t n) {
  const Problem p = detail::make_problem(k, l, n);
  if (p.cand.size() > 24) throw InvalidArgument("brute force is limited to 24 candidate edges");
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  // Include/exclude recursion; being P-free is hereditary so a failing
  // prefix is cut immediately.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    best = std::max(best, chosen.size());
    if (i == p.cand.size() || chosen.size() + (p.cand.size() - i) <= best) return;
    chosen.push_back(i);
    std::vector<VertexSet> edges;
    for (auto c : chosen) edges.push_back(p.cand[c]);
    if (is_free(Hypergraph::from_edges(k, n, edges), l)) rec(i + 1);
    chosen.pop_back();
    rec(i + 1);
  };
  rec(0);
  return best;
}

}  // namespace reference

}  // namespace hyperpath
