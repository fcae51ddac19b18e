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

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <vector>

#include "hyperpath/bitset.hpp"
#include "hyperpath/hypergraph.hpp"
#include "hyperpath/oracle.hpp"

namespace hyperpath::detail {

/// Candidate edges (all k-subsets in lexicographic order) and the forbidden
/// configurations among them. For l = 2 a pair of candidates meeting in one
/// vertex is forbidden; for l = 3 a triple forming a loose path is.
struct Problem {
  int k = 0;
  int l = 0;
  std::size_t n = 0;
  std::vector<VertexSet> cand;
  std::vector<std::size_t> forced;
  bool break_symmetry = true;
};

Problem make_problem(int k, int l, std::size_t n);

class Clock {
 public:
  explicit Clock(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  // Counts one node; returns false once the budget is spent.
  bool tick() {
    if (aborted_.load(std::memory_order_relaxed)) return false;
    const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_.max_nodes != 0 && n > budget_.max_nodes) {
      aborted_ = true;
      return false;
    }
    if (budget_.max_seconds > 0 && (n & 1023U) == 0 && elapsed() > budget_.max_seconds) {
      aborted_ = true;
      return false;
    }
    return true;
  }

  bool aborted() const { return aborted_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
};

template <std::size_t W>
class Engine {
 public:
  using Bits = FixedBitset<W>;
  static constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

  Engine(const Problem& p, Clock& clock) : p_(p), clock_(clock), N_(p.cand.size()) {
    ternary_ = p.l >= 3;
    vmask_.assign(p.n, Bits{});
    for (std::size_t i = 0; i < N_; ++i) {
      for (auto v : p.cand[i]) vmask_[v].set(i);
    }
    std::vector<std::vector<std::size_t>> meet(N_, std::vector<std::size_t>(N_));
    for (std::size_t i = 0; i < N_; ++i) {
      for (std::size_t j = 0; j < N_; ++j) meet[i][j] = intersection_size(p.cand[i], p.cand[j]);
    }
    if (!ternary_) {
      conflict_.assign(N_, Bits{});
      for (std::size_t i = 0; i < N_; ++i) {
        for (std::size_t j = 0; j < N_; ++j) {
          if (i != j && meet[i][j] == 1) conflict_[i].set(j);
        }
      }
    } else {
      pair_.assign(N_ * N_, Bits{});
      // {a, b, c} is a loose path with middle b when a-b and b-c meet in one
      // vertex each and a, c are disjoint.
      for (std::size_t b = 0; b < N_; ++b) {
        for (std::size_t a = 0; a < N_; ++a) {
          if (meet[a][b] != 1) continue;
          for (std::size_t c = a + 1; c < N_; ++c) {
            if (meet[b][c] != 1 || meet[a][c] != 0) continue;
            pair_[a * N_ + b].set(c);
            pair_[c * N_ + b].set(a);
            pair_[a * N_ + c].set(b);
            pair_[c * N_ + a].set(b);
            pair_[b * N_ + a].set(c);
            pair_[b * N_ + c].set(a);
          }
        }
      }
    }
  }

  /// Largest admissible set; records one optimal set in `best_set`.
  std::size_t maximize(std::vector<std::uint32_t>& best_set) {
    cap_ = kNoCap;
    State root;
    if (!make_root(root)) return 0;
    std::atomic<std::size_t> best{root.chosen.size()};
    best_set = root.chosen;
    std::mutex mu;
    std::vector<std::size_t> firsts;
    root.P.for_each([&](std::size_t x) { firsts.push_back(x); });
    const auto nf = static_cast<std::ptrdiff_t>(firsts.size());

#pragma omp parallel
    {
      std::vector<State> stack(N_ + 2);
#pragma omp for schedule(dynamic, 1)
      for (std::ptrdiff_t t = 0; t < nf; ++t) {
        const std::size_t x = firsts[static_cast<std::size_t>(t)];
        Bits rest = root.P;
        rest.clear_through(x);
        if (root.chosen.size() + 1 + rest.count() <= best.load()) continue;
        stack[0] = root;
        stack[0].P = rest;
        stack[0].P.set(x);
        if (!add(stack[0], x)) continue;
        stack[0].P.reset(x);
        grow_max(stack, 0, best, best_set, mu);
      }
    }
    return best.load();
  }

  /// Lexicographically least admissible set of exactly `target` candidates
  /// with every vertex degree <= cap.
  std::optional<std::vector<std::uint32_t>> find(std::size_t target, std::size_t cap = kNoCap) {
    cap_ = cap;
    State root;
    if (!make_root(root)) return std::nullopt;
    if (root.chosen.size() > target) return std::nullopt;
    std::vector<State> stack(N_ + 2);
    stack[0] = std::move(root);
    if (grow_find(stack, 0, target)) return stack[found_depth_].chosen;
    return std::nullopt;
  }

  const Problem& problem() const { return p_; }

 private:
  struct State {
    std::vector<std::uint32_t> chosen;
    Bits P;
    std::vector<Bits> adj;  // ternary only: pairwise conflicts induced by `chosen`
    std::vector<std::uint16_t> deg;
  };

  bool make_root(State& s) {
    s.chosen.clear();
    s.P = Bits::first_n(N_);
    s.deg.assign(p_.n, 0);
    if (ternary_) s.adj.assign(N_, Bits{});
    std::vector<std::size_t> start = p_.forced;
    if (start.empty() && p_.break_symmetry && N_ > 0) start.push_back(0);
    for (auto f : start) {
      if (!s.P.test(f) || !add(s, f)) return false;
    }
    return true;
  }

  // Adds candidate x (which must be in s.P) and removes what it excludes.
  bool add(State& s, std::size_t x) {
    if (!s.P.test(x)) return false;
    s.P.reset(x);
    if (ternary_) {
      s.P.and_not(s.adj[x]);
      s.P.for_each([&](std::size_t q) { s.adj[q] |= pair_[q * N_ + x]; });
    } else {
      s.P.and_not(conflict_[x]);
    }
    s.chosen.push_back(static_cast<std::uint32_t>(x));
    for (auto v : p_.cand[x]) {
      if (++s.deg[v] > cap_) return false;
      if (s.deg[v] == cap_) s.P.and_not(vmask_[v]);
    }
    return true;
  }

  const Bits& conflicts_of(const State& s, std::size_t q) const { return ternary_ ? s.adj[q] : conflict_[q]; }

  // Greedy partition of P into pairwise-conflicting groups; at most one
  // member of each group can still be added.
  std::size_t bound(const State& s) const {
    Bits u = s.P;
    std::size_t groups = 0;
    for (std::size_t v = u.first(); v != Bits::npos; v = u.first()) {
      u.reset(v);
      Bits q = u & conflicts_of(s, v);
      for (std::size_t w = q.first(); w != Bits::npos; w = q.first()) {
        u.reset(w);
        q.reset(w);
        q &= conflicts_of(s, w);
      }
      ++groups;
    }
    if (cap_ != kNoCap) {
      std::size_t slots = 0;
      for (auto d : s.deg) slots += cap_ - d;
      groups = std::min(groups, slots / static_cast<std::size_t>(p_.k));
    }
    return groups;
  }

  void grow_max(std::vector<State>& stack, std::size_t depth, std::atomic<std::size_t>& best,
                std::vector<std::uint32_t>& best_set, std::mutex& mu) {
    if (!clock_.tick()) return;
    const State& s = stack[depth];
    const std::size_t c = s.chosen.size();
    std::size_t b = best.load();
    while (c > b && !best.compare_exchange_weak(b, c)) {
    }
    if (c > b) {
      std::lock_guard<std::mutex> lock(mu);
      if (c >= best.load() && c > best_set.size()) best_set = s.chosen;
    }
    if (s.P.none() || c + bound(s) <= best.load()) return;
    Bits rest = s.P;
    for (std::size_t x = rest.first(); x != Bits::npos; x = rest.first()) {
      if (c + rest.count() <= best.load()) return;
      State& child = stack[depth + 1];
      child = s;
      child.P = rest;
      rest.reset(x);
      child.P.clear_through(x);
      child.P.set(x);
      if (add(child, x)) grow_max(stack, depth + 1, best, best_set, mu);
      if (clock_.aborted()) return;
    }
  }

  bool grow_find(std::vector<State>& stack, std::size_t depth, std::size_t target) {
    if (!clock_.tick()) return false;
    const State& s = stack[depth];
    const std::size_t c = s.chosen.size();
    if (c == target) {
      found_depth_ = depth;
      return true;
    }
    if (c + s.P.count() < target || c + bound(s) < target) return false;
    Bits rest = s.P;
    for (std::size_t x = rest.first(); x != Bits::npos; x = rest.first()) {
      if (c + rest.count() < target) return false;
      State& child = stack[depth + 1];
      child = s;
      child.P = rest;
      rest.reset(x);
      child.P.clear_through(x);
      child.P.set(x);
      if (add(child, x) && grow_find(stack, depth + 1, target)) return true;
      if (clock_.aborted()) return false;
    }
    return false;
  }

  const Problem& p_;
  Clock& clock_;
  std::size_t N_;
  bool ternary_ = false;
  std::size_t cap_ = kNoCap;
  std::size_t found_depth_ = 0;
  std::vector<Bits> vmask_;
  std::vector<Bits> conflict_;
  std::vector<Bits> pair_;
};

}  // namespace hyperpath::detail
