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

#include "hyperpath/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "hyperpath/constructions.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

namespace {

void check_range(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("x = " + std::to_string(x) + " is outside [0, 1]");
}

double evaluate(int branch, double x) {
  switch (branch) {
    case 1:
      return 0.0;
    case 2:
      return (1.0 + 2.0 * x + std::sqrt(std::max(0.0, 12.0 * x - 3.0))) / 24.0;
    case 3:
      return (1.0 + 3.0 * x + 2.0 * std::sqrt(std::max(0.0, 6.0 * x - 2.0))) / 18.0;
    default:
      return (x + std::sqrt(std::max(0.0, 2.0 * x - 1.0))) / 2.0;
  }
}

// Largest-degree quasi-bipartite subgraph with m edges spread evenly: edge
// t joins pair t mod p to z (t mod p + t / p) mod z.
std::uint64_t quasi_bipartite_degree(std::size_t n, std::size_t m) {
  if (n < 3) return m == 0 ? 0 : UINT64_MAX;
  std::size_t p = 1;
  std::size_t best = 0;
  for (std::size_t q = 1; 2 * q < n; ++q) {
    if (q * (n - 2 * q) >= best) {
      best = q * (n - 2 * q);
      p = q;
    }
  }
  if (m > best) return UINT64_MAX;
  const std::size_t z = n - 2 * p;
  std::vector<std::uint64_t> zdeg(z, 0);
  for (std::size_t t = 0; t < m; ++t) ++zdeg[(t % p + t / p) % z];
  const std::uint64_t pair_deg = (m + p - 1) / p;
  return std::max(pair_deg, *std::max_element(zdeg.begin(), zdeg.end()));
}

}  // namespace

int curve_branch(double x) {
  check_range(x);
  if (x < 0.25) return 1;
  if (x == 0.25) return 0;
  if (x < 1.0 / 3.0) return 2;
  if (x < 0.5) return 3;
  return 4;
}

int curve_branch(long long num, long long den) {
  if (den <= 0 || num < 0 || num > den) throw InvalidArgument("fraction must lie in [0, 1] with den > 0");
  if (4 * num < den) return 1;
  if (4 * num == den) return 0;
  if (3 * num < den) return 2;
  if (2 * num < den) return 3;
  return 4;
}

std::optional<double> f_of_x(double x) {
  const int b = curve_branch(x);
  if (b == 0) return std::nullopt;
  return evaluate(b, x);
}

std::optional<double> f_of_x(long long num, long long den) {
  const int b = curve_branch(num, den);
  if (b == 0) return std::nullopt;
  return evaluate(b, static_cast<double>(num) / static_cast<double>(den));
}

double curve_piece(int branch, double x) {
  if (branch < 1 || branch > 4) throw InvalidArgument("branch must be 1..4");
  return evaluate(branch, x);
}

std::pair<double, double> jump_at_quarter() { return {evaluate(1, 0.25), evaluate(2, 0.25)}; }

std::pair<std::uint64_t, std::uint64_t> degree_bounds(std::size_t n, std::size_t m) {
  if (n < 2) throw InvalidArgument("degree bounds need n >= 2");
  if (m > binom(n / 2, 2)) {
    throw InvalidArgument("m = " + std::to_string(m) + " exceeds C(floor(n/2), 2) = " +
                          std::to_string(binom(n / 2, 2)));
  }
  return {4 * m / (n - 1), (4 * m + n - 1) / n};
}

std::uint64_t density_normalizer(std::size_t n, int k) {
  if (k == 4) return n >= 2 ? binom(n - 2, 2) : 0;
  if (k == 3) return n >= 1 ? binom(n - 1, 2) : 0;
  throw InvalidArgument("normalizer defined for k = 3 or 4");
}

std::uint64_t construction_max_degree(std::size_t n, std::size_t m, int k) {
  if (k != 3 && k != 4) throw InvalidArgument("constructions exist for k = 3 or 4");
  if (m == 0) return 0;
  std::uint64_t best = UINT64_MAX;
  if (m <= density_normalizer(n, k)) best = star_union_plan(n, m, k).max_degree;
  if (k == 4 && m <= binom(n / 2, 2)) {
    // Dubleton degrees of the near-regular thick subgraph.
    const std::size_t d = n / 2;
    best = std::min<std::uint64_t>(best, (2 * m + d - 1) / d);
  }
  if (k == 3) best = std::min(best, quasi_bipartite_degree(n, m));
  if (best == UINT64_MAX) throw Infeasible("no construction carries m = " + std::to_string(m) + " edges");
  return best;
}

std::vector<CurvePoint> emit_curve(double x_min, double x_max, double step, std::optional<std::size_t> ub_n,
                                   int k) {
  if (!(step > 0)) throw InvalidArgument("step must be positive");
  check_range(x_min);
  check_range(x_max);
  if (x_min > x_max) throw InvalidArgument("empty range");
  if (k != 3 && k != 4) throw InvalidArgument("k must be 3 or 4");
  const auto count = static_cast<std::size_t>(std::floor((x_max - x_min) / step + 1e-9)) + 1;
  std::vector<CurvePoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double x = std::round((x_min + static_cast<double>(i) * step) * 1e12) / 1e12;
    x = std::min(x, 1.0);
    CurvePoint pt;
    pt.x = x;
    pt.branch = curve_branch(x);
    pt.fx = f_of_x(x);
    if (ub_n) {
      const auto norm = density_normalizer(*ub_n, k);
      if (norm > 0) {
        const auto m = static_cast<std::size_t>(std::llround(x * static_cast<double>(norm)));
        pt.ub_ratio = static_cast<double>(construction_max_degree(*ub_n, m, k)) / static_cast<double>(norm);
        pt.ub_n = *ub_n;
      }
    }
    out.push_back(pt);
  }
  return out;
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
  const auto old_precision = out.precision(12);
  out << "x,branch,fx,ub_ratio,ub_n\n";
  for (const auto& p : points) {
    out << p.x << ',';
    if (p.branch == 0) out << "undefined";
    else out << p.branch;
    out << ',';
    if (p.fx) out << *p.fx;
    out << ',';
    if (p.ub_ratio) out << *p.ub_ratio;
    out << ',';
    if (p.ub_n) out << *p.ub_n;
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace hyperpath
