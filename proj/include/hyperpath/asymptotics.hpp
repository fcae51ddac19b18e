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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace hyperpath {

/// Pieces of the rescaling curve: 1 on [0, 1/4), 2 on (1/4, 1/3),
/// 3 on [1/3, 1/2), 4 on [1/2, 1]. 0 marks the excluded point 1/4.
int curve_branch(double x);
/// Same, deciding breakpoints exactly for x = num / den.
int curve_branch(long long num, long long den);

/// Limit of f(n, m) / C(n-2, 2) at density x. nullopt at x = 1/4; throws
/// InvalidArgument outside [0, 1].
std::optional<double> f_of_x(double x);
std::optional<double> f_of_x(long long num, long long den);

/// The formula of piece `branch` (1..4) evaluated at any x, for checking
/// that neighbouring pieces meet at their breakpoints.
double curve_piece(int branch, double x);

/// One-sided limits of f at 1/4: (0, 1/16).
std::pair<double, double> jump_at_quarter();

/// (floor(4m/(n-1)), ceil(4m/n)) for m <= C(floor(n/2), 2).
std::pair<std::uint64_t, std::uint64_t> degree_bounds(std::size_t n, std::size_t m);

/// C(n-2, 2) for k = 4, C(n-1, 2) for k = 3.
std::uint64_t density_normalizer(std::size_t n, int k);

/// Smallest maximum degree among the explicit constructions with n
/// vertices and m edges (star unions, thick clique subgraphs for k = 4,
/// quasi-bipartite subgraphs for k = 3).
std::uint64_t construction_max_degree(std::size_t n, std::size_t m, int k);

struct CurvePoint {
  double x = 0;
  int branch = 0;
  std::optional<double> fx;
  std::optional<double> ub_ratio;
  std::optional<std::size_t> ub_n;
};

/// Grid x_min, x_min + step, ... up to x_max inclusive. The point 1/4 is
/// kept with branch 0 and no fx. With `ub_n`, every row also carries
/// construction_max_degree / normalizer at m = round(x * normalizer).
std::vector<CurvePoint> emit_curve(double x_min, double x_max, double step,
                                   std::optional<std::size_t> ub_n = std::nullopt, int k = 4);

/// Header "x,branch,fx,ub_ratio,ub_n"; missing values are empty fields and
/// the branch of x = 1/4 is written as "undefined".
void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points);

}  // namespace hyperpath
