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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperpath/cli.hpp"
#include "hyperpath/constructions.hpp"
#include "hyperpath/hypergraph.hpp"

namespace hyperpath {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hyperpath_cli_" + name)).string();
}

TEST(Cli, ConstructWritesCanonicalHg) {
  const auto r = run({"construct", "thick-clique", "--params", "n=6"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "4 6 3\n0 1 2 3\n0 1 4 5\n2 3 4 5\n");
}

TEST(Cli, ConstructSpecJson) {
  const auto hg = temp_path("h42.hg");
  const auto spec = temp_path("h42.json");
  const auto r = run({"construct", "H42", "--params", "k=7", "--out", hg, "--spec", spec});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(load(hg), gallery(GalleryGraph::H42, 7).graph);
  std::ifstream in(spec);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("params").at("k"), 7);
  std::filesystem::remove(hg);
  std::filesystem::remove(spec);
}

TEST(Cli, ConstructErrors) {
  EXPECT_EQ(run({"construct", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"construct", "thick-clique", "--params", "n"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"construct", "thick-clique"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
}

TEST(Cli, PathfreeReportsWitness) {
  const auto hg = temp_path("path.hg");
  store(Hypergraph::from_edges(4, 7, {{0, 1, 2, 3}, {3, 4, 5, 6}}), hg);
  const auto r = run({"pathfree", "--input", hg, "--length", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.at("free").get<bool>());
  EXPECT_EQ(j.at("witness").at("edge_ids"), nlohmann::json::array({0, 1}));
  const auto fast = nlohmann::json::parse(run({"pathfree", "--input", hg, "--length", "2", "--fast"}).out);
  EXPECT_FALSE(fast.at("free").get<bool>());
  std::filesystem::remove(hg);
}

TEST(Cli, MalformedInputIsUsageError) {
  const auto hg = temp_path("bad.hg");
  std::ofstream(hg) << "4 8 1\n0 1 2\n";
  EXPECT_EQ(run({"pathfree", "--input", hg, "--length", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"pathfree", "--input", temp_path("missing.hg"), "--length", "2"}).code, cli::kExitUsage);
  std::filesystem::remove(hg);
}

TEST(Cli, DecomposeJson) {
  const auto hg = temp_path("star.hg");
  store(complete_two_star(20).graph, hg);
  const auto r = run({"decompose", "--input", hg, "--k", "4"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("valid").get<bool>());
  EXPECT_EQ(j.at("S"), nlohmann::json::array({0, 1}));
  EXPECT_EQ(j.at("largest_star"), 190);
  std::filesystem::remove(hg);
}

TEST(Cli, OracleCommands) {
  const auto a = nlohmann::json::parse(run({"oracle", "max-edges", "--k", "4", "--l", "2", "--n", "8"}).out);
  EXPECT_EQ(a.at("value"), 17);
  EXPECT_FALSE(a.contains("seconds"));
  const auto timed = run({"oracle", "max-edges", "--k", "4", "--l", "2", "--n", "6", "--timing"});
  EXPECT_TRUE(nlohmann::json::parse(timed.out).contains("seconds"));
  const auto b = nlohmann::json::parse(run({"oracle", "min-maxdeg", "--k", "4", "--l", "2", "--n", "8", "--m", "6"}).out);
  EXPECT_EQ(b.at("value"), 3);
  const auto c = nlohmann::json::parse(run({"oracle", "pin", "--k", "4", "--l", "2", "--n", "12", "--m", "5"}).out);
  EXPECT_TRUE(c.at("determined").get<bool>());
  EXPECT_EQ(c.at("value"), 2);
}

TEST(Cli, OracleDeletionDistance) {
  const auto hg = temp_path("f413.hg");
  store(f413().graph, hg);
  const auto r = run({"oracle", "deletion-dist", "--input", hg, "--t", "4", "--c", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("value"), 8);
  std::filesystem::remove(hg);
}

TEST(Cli, OracleExitCodes) {
  EXPECT_EQ(run({"oracle", "min-maxdeg", "--k", "4", "--l", "2", "--n", "8", "--m", "30"}).code,
            cli::kExitInfeasible);
  EXPECT_EQ(run({"oracle", "max-edges", "--k", "4", "--l", "2", "--n", "9", "--max-nodes", "5", "--exact"}).code,
            cli::kExitInfeasible);
  EXPECT_EQ(run({"oracle", "max-edges", "--k", "4", "--l", "2", "--n", "9", "--max-nodes", "5"}).code,
            cli::kExitOk);
  EXPECT_EQ(run({"oracle", "max-edges", "--k", "4", "--l", "5", "--n", "9"}).code, cli::kExitUsage);
}

TEST(Cli, CurveCsv) {
  const auto r = run({"curve"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 21);
  EXPECT_EQ(r.out.rfind("x,branch,fx,ub_ratio,ub_n\n", 0), 0u);
  EXPECT_EQ(run({"curve", "--step", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"curve", "--k", "5"}).code, cli::kExitUsage);
}

TEST(Cli, VerifySubset) {
  const auto path = temp_path("report.json");
  const auto r = run({"verify-all", "--only", "6,9", "--out", path});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("criteria").size(), 2u);
  EXPECT_EQ(j.at("summary").at("pass"), 2);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace hyperpath
