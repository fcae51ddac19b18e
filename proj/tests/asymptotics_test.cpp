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

#include <cmath>
#include <sstream>

#include "hyperpath/asymptotics.hpp"
#include "hyperpath/error.hpp"

namespace hyperpath {
namespace {

TEST(Curve, Branches) {
  EXPECT_EQ(curve_branch(0.0), 1);
  EXPECT_EQ(curve_branch(0.2), 1);
  EXPECT_EQ(curve_branch(0.25), 0);
  EXPECT_EQ(curve_branch(0.3), 2);
  EXPECT_EQ(curve_branch(1.0 / 3.0), 3);
  EXPECT_EQ(curve_branch(0.5), 4);
  EXPECT_EQ(curve_branch(1.0), 4);
  EXPECT_EQ(curve_branch(1, 4), 0);
  EXPECT_EQ(curve_branch(1, 3), 3);
  EXPECT_EQ(curve_branch(333, 1000), 2);
  EXPECT_EQ(curve_branch(1, 2), 4);
  EXPECT_THROW(curve_branch(1.5), InvalidArgument);
  EXPECT_THROW(curve_branch(-0.1), InvalidArgument);
  EXPECT_THROW(curve_branch(3, 2), InvalidArgument);
}

TEST(Curve, FrozenValues) {
  EXPECT_EQ(*f_of_x(0.1), 0.0);
  EXPECT_FALSE(f_of_x(0.25).has_value());
  EXPECT_FALSE(f_of_x(1, 4).has_value());
  EXPECT_NEAR(*f_of_x(1, 3), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(*f_of_x(0.5), 0.25, 1e-15);
  EXPECT_NEAR(*f_of_x(1.0), 1.0, 1e-15);
  EXPECT_NEAR(*f_of_x(0.3), (1.6 + std::sqrt(0.6)) / 24.0, 1e-15);
  EXPECT_NEAR(*f_of_x(0.4), (2.2 + 2.0 * std::sqrt(0.4)) / 18.0, 1e-15);
  EXPECT_NEAR(*f_of_x(0.75), (0.75 + std::sqrt(0.5)) / 2.0, 1e-15);
}

TEST(Curve, PiecesMeetAtBreakpoints) {
  EXPECT_NEAR(curve_piece(2, 1.0 / 3.0), curve_piece(3, 1.0 / 3.0), 1e-12);
  EXPECT_NEAR(curve_piece(3, 0.5), curve_piece(4, 0.5), 1e-12);
  const auto [left, right] = jump_at_quarter();
  EXPECT_EQ(left, 0.0);
  EXPECT_NEAR(right, 1.0 / 16.0, 1e-15);
  EXPECT_THROW(curve_piece(0, 0.5), InvalidArgument);
}

TEST(Curve, NondecreasingAndBelowDiagonal) {
  double prev = 0;
  for (int i = 0; i <= 1000; ++i) {
    if (i == 250) continue;
    const double v = *f_of_x(i, 1000);
    EXPECT_GE(v, prev - 1e-15) << i;
    EXPECT_LE(v, static_cast<double>(i) / 1000.0 + 1e-15) << i;
    prev = v;
  }
}

TEST(DegreeBounds, Examples) {
  EXPECT_EQ(degree_bounds(12, 5), (std::pair<std::uint64_t, std::uint64_t>{1, 2}));
  EXPECT_EQ(degree_bounds(100, 1225), (std::pair<std::uint64_t, std::uint64_t>{49, 49}));
  EXPECT_THROW(degree_bounds(12, 16), InvalidArgument);
}

TEST(Normalizer, Values) {
  EXPECT_EQ(density_normalizer(10, 4), 28u);
  EXPECT_EQ(density_normalizer(10, 3), 36u);
  EXPECT_THROW(density_normalizer(10, 5), InvalidArgument);
}

TEST(ConstructionDegree, ApproachesCurve) {
  const std::size_t n = 400;
  const auto norm = static_cast<double>(density_normalizer(n, 4));
  for (double x : {0.3, 0.4, 0.6, 0.9, 1.0}) {
    const auto m = static_cast<std::size_t>(std::llround(x * norm));
    const double ratio = static_cast<double>(construction_max_degree(n, m, 4)) / norm;
    EXPECT_NEAR(ratio, *f_of_x(x), 0.02 * *f_of_x(x) + 1e-9) << x;
  }
  EXPECT_EQ(construction_max_degree(n, 0, 4), 0u);
}

TEST(ConstructionDegree, NeverBelowAverageDegree) {
  for (std::size_t n : {12, 17, 30}) {
    for (std::size_t m = 1; m <= density_normalizer(n, 4); m += 3) {
      EXPECT_GE(construction_max_degree(n, m, 4) * n, 4 * m) << n << " " << m;
    }
    for (std::size_t m = 1; m <= density_normalizer(n, 3); m += 3) {
      EXPECT_GE(construction_max_degree(n, m, 3) * n, 3 * m) << n << " " << m;
    }
  }
}

TEST(EmitCurve, GridAndCsv) {
  const auto pts = emit_curve(0.0, 1.0, 0.05);
  ASSERT_EQ(pts.size(), 21u);
  EXPECT_EQ(pts[5].x, 0.25);
  EXPECT_EQ(pts[5].branch, 0);
  EXPECT_FALSE(pts[5].fx.has_value());
  EXPECT_EQ(pts.back().x, 1.0);
  std::ostringstream out;
  write_curve_csv(out, pts);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,branch,fx,ub_ratio,ub_n");
  int rows = 0;
  bool saw_undefined = false;
  while (std::getline(in, line)) {
    ++rows;
    saw_undefined |= line == "0.25,undefined,,,";
  }
  EXPECT_EQ(rows, 21);
  EXPECT_TRUE(saw_undefined);
}

TEST(EmitCurve, UpperBoundColumns) {
  const auto pts = emit_curve(0.5, 1.0, 0.25, 60, 4);
  ASSERT_EQ(pts.size(), 3u);
  for (const auto& p : pts) {
    ASSERT_TRUE(p.ub_ratio.has_value());
    EXPECT_EQ(*p.ub_n, 60u);
    EXPECT_GE(*p.ub_ratio, *p.fx - 0.05);
  }
  EXPECT_THROW(emit_curve(0.0, 1.0, 0.0), InvalidArgument);
  EXPECT_THROW(emit_curve(0.6, 0.4, 0.1), InvalidArgument);
}

}  // namespace
}  // namespace hyperpath
