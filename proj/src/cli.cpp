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

#include "hyperpath/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "hyperpath/asymptotics.hpp"
#include "hyperpath/constructions.hpp"
#include "hyperpath/decompose.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/oracle.hpp"
#include "hyperpath/pathfree.hpp"
#include "hyperpath/verify.hpp"

namespace hyperpath::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::map<std::string, long long> parse_params(const std::string& text) {
  std::map<std::string, long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != val.size()) throw UsageError("parameter '" + key + "' needs an integer value");
    if (!out.emplace(key, v).second) throw UsageError("parameter '" + key + "' given twice");
  }
  return out;
}

json edges_json(const Hypergraph& h) {
  json a = json::array();
  for (std::size_t i = 0; i < h.m(); ++i) a.push_back(h.edge_set(i));
  return a;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("write failed: " + path);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  bool exact = false;
  bool timing = false;
  std::string out_path;

  void attach(CLI::App* app) {
    app->add_option("--max-nodes", max_nodes, "Search node budget (0 = unlimited)")->check(CLI::NonNegativeNumber);
    app->add_option("--max-seconds", max_seconds, "Search time budget (0 = unlimited)")->check(CLI::NonNegativeNumber);
    app->add_flag("--exact", exact, "Exit 2 unless the search completes");
    app->add_flag("--timing", timing, "Include wall-clock seconds in the output");
    app->add_option("--out", out_path, "Write the witness as .hg");
  }
  SearchBudget search() const { return {max_nodes, max_seconds}; }
};

int report_search(const SearchResult& r, const Budget& b, json j, std::ostream& out) {
  j["value"] = r.value;
  j["method"] = std::string(to_string(r.method));
  j["complete"] = r.complete;
  j["nodes_explored"] = r.nodes_explored;
  if (b.timing) j["seconds"] = r.seconds;
  if (!b.out_path.empty()) {
    store(r.witness, b.out_path);
    j["witness_path"] = b.out_path;
  } else {
    j["witness"] = edges_json(r.witness);
  }
  if (!r.deleted.empty() || j.contains("t")) j["deleted"] = r.deleted;
  emit(out, j);
  return (b.exact && !r.complete) ? kExitInfeasible : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loose-path-free hypergraphs: constructions, decompositions and exact searches", "hyperpath"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP thread cap (0 = runtime default)")->check(CLI::NonNegativeNumber);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a named construction");
  std::string c_name;
  std::string c_params;
  std::string c_out;
  std::string c_spec;
  std::string names;
  for (const auto& n : construction_names()) names += (names.empty() ? "" : ", ") + n;
  construct->add_option("name", c_name, "One of: " + names)->required();
  construct->add_option("--params", c_params, "Comma-separated key=value list");
  construct->add_option("--out", c_out, "Output .hg path (default: stdout)");
  construct->add_option("--spec", c_spec, "Write parameters and vertex roles as JSON");

  // pathfree
  auto* pathfree = app.add_subcommand("pathfree", "Look for a loose path");
  std::string p_input;
  int p_length = 0;
  bool p_fast = false;
  pathfree->add_option("--input", p_input, "Input .hg")->required();
  pathfree->add_option("--length", p_length, "Path length")->required()->check(CLI::PositiveNumber);
  pathfree->add_flag("--fast", p_fast, "Pairwise test only (length 2), no witness");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "R/S/T decomposition with validation");
  std::string d_input;
  int d_k = 0;
  decompose->add_option("--input", d_input, "Input .hg")->required();
  decompose->add_option("--k", d_k, "Uniformity (3 or 4)")->required()->check(CLI::IsMember({3, 4}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact searches and bounds");
  oracle->require_subcommand(1);
  int o_k = 0;
  int o_l = 0;
  std::size_t o_n = 0;
  std::size_t o_m = 0;
  Budget o_budget;
  auto* max_edges = oracle->add_subcommand("max-edges", "Largest P-free graph");
  max_edges->add_option("--k", o_k)->required();
  max_edges->add_option("--l", o_l)->required();
  max_edges->add_option("--n", o_n)->required();
  o_budget.attach(max_edges);
  auto* min_deg = oracle->add_subcommand("min-maxdeg", "Least maximum degree with m edges");
  min_deg->add_option("--k", o_k)->required();
  min_deg->add_option("--l", o_l)->required();
  min_deg->add_option("--n", o_n)->required();
  min_deg->add_option("--m", o_m)->required();
  o_budget.attach(min_deg);
  auto* deletion = oracle->add_subcommand("deletion-dist", "Edges to delete to reach a star union");
  std::string o_input;
  int o_t = 0;
  int o_c = 0;
  deletion->add_option("--input", o_input)->required();
  deletion->add_option("--t", o_t, "Maximum number of stars")->required();
  deletion->add_option("--c", o_c, "Center size")->required();
  o_budget.attach(deletion);
  auto* pin = oracle->add_subcommand("pin", "Sandwich f^4_2(n, m) between bounds and constructions");
  pin->add_option("--k", o_k)->required();
  pin->add_option("--l", o_l)->required();
  pin->add_option("--n", o_n)->required();
  pin->add_option("--m", o_m)->required();

  // curve
  auto* curve = app.add_subcommand("curve", "Tabulate the rescaling curve as CSV");
  double cv_from = 0;
  double cv_to = 1;
  double cv_step = 0.05;
  std::optional<std::size_t> cv_ub_n;
  int cv_k = 4;
  std::string cv_out;
  curve->add_option("--from", cv_from)->capture_default_str();
  curve->add_option("--to", cv_to)->capture_default_str();
  curve->add_option("--step", cv_step)->capture_default_str();
  curve->add_option("--ub-n", cv_ub_n, "Add construction ratios at this n");
  curve->add_option("--k", cv_k)->check(CLI::IsMember({3, 4}))->capture_default_str();
  curve->add_option("--out", cv_out, "Output CSV path (default: stdout)");

  // verify-all
  auto* verify = app.add_subcommand("verify-all", "Run every acceptance criterion");
  VerifyOptions v_opts;
  std::string v_out;
  verify->add_option("--budget", v_opts.budget_seconds, "Total seconds")->capture_default_str()->check(
      CLI::NonNegativeNumber);
  verify->add_option("--only", v_opts.only, "Criterion ids to run")->delimiter(',');
  verify->add_option("--seed", v_opts.seed)->capture_default_str();
  verify->add_option("--random-subgraphs", v_opts.random_subgraphs)->capture_default_str();
  verify->add_option("--out", v_out, "Also write the report here");

  std::vector<std::string> argv_store{"hyperpath"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (construct->parsed()) {
      const auto c = build_construction(c_name, parse_params(c_params));
      for (const auto& w : c.spec.warnings) err << "warning: " << w << '\n';
      if (c_out.empty()) {
        write_hg(out, c.graph);
      } else {
        store(c.graph, c_out);
      }
      if (!c_spec.empty()) {
        json j{{"name", c.spec.name},
               {"params", c.spec.params},
               {"labeling", c.spec.labeling},
               {"warnings", c.spec.warnings},
               {"k", c.graph.k()},
               {"n", c.graph.n()},
               {"m", c.graph.m()}};
        write_text(c_spec, j.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (pathfree->parsed()) {
      const auto h = load(p_input);
      json j{{"length", p_length}, {"k", h.k()}, {"n", h.n()}, {"m", h.m()}};
      if (p_fast) {
        if (p_length != 2) throw UsageError("--fast applies to --length 2 only");
        bool free = true;
        if (h.k() == 4) {
          free = is_p42_free(h);
        } else {
          const auto masks = linear_partner_mask(h);
          free = std::all_of(masks.begin(), masks.end(), [](std::uint32_t x) { return x == 0; });
        }
        j["free"] = free;
        j["witness"] = nullptr;
      } else {
        const auto w = find_loose_path(h, p_length);
        j["free"] = !w.has_value();
        if (w) {
          j["witness"] = {{"edge_ids", w->edge_ids}, {"edges", w->edges}, {"junctions", w->junctions}};
        } else {
          j["witness"] = nullptr;
        }
      }
      emit(out, j);
      return kExitOk;
    }

    if (decompose->parsed()) {
      const auto h = load(d_input);
      if (h.k() != d_k) {
        throw UsageError("--k " + std::to_string(d_k) + " but the input is " + std::to_string(h.k()) + "-uniform");
      }
      const auto d = d_k == 4 ? decompose4(h) : decompose3(h);
      const auto rep = validate(d, h);
      json stars = json::array();
      for (const auto& s : d.stars) {
        stars.push_back({{"center", s.center}, {"leaves", s.leaves}, {"edges", s.edges.size()}});
      }
      json checks = json::array();
      for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"witness", c.witness}});
      }
      const auto res = residual(h, d);
      const Incidence inc(res.graph);
      std::map<std::string, std::size_t> kinds;
      for (std::size_t i = 0; i < res.graph.m(); ++i) {
        ++kinds[std::string(to_string(classify_edge_signature(res.graph, inc, i).kind))];
      }
      json j{{"k", h.k()},
             {"n", h.n()},
             {"m", h.m()},
             {"R", d.R},
             {"S", d.S},
             {"T", d.T},
             {"peel_order", d.peel_order},
             {"triangle_vertices", d.triangle_vertices},
             {"class_sizes", {{"H_R", d.H_R.size()}, {"H_S", d.H_S.size()}, {"H_T", d.H_T.size()}}},
             {"stars", stars},
             {"largest_star", rep.largest_star},
             {"residual_signature_classes", kinds},
             {"invariants", checks},
             {"valid", rep.ok()},
             {"warnings", d.warnings}};
      emit(out, j);
      return kExitOk;
    }

    if (oracle->parsed()) {
      if (max_edges->parsed()) {
        const auto r = max_pfree_edges(o_k, o_l, o_n, o_budget.search());
        return report_search(r, o_budget, {{"k", o_k}, {"l", o_l}, {"n", o_n}}, out);
      }
      if (min_deg->parsed()) {
        const auto r = min_max_degree(o_k, o_l, o_n, o_m, o_budget.search());
        return report_search(r, o_budget, {{"k", o_k}, {"l", o_l}, {"n", o_n}, {"m", o_m}}, out);
      }
      if (deletion->parsed()) {
        const auto h = load(o_input);
        const auto r = deletion_distance(h, o_t, o_c, o_budget.search());
        return report_search(r, o_budget, {{"t", o_t}, {"c", o_c}, {"m", h.m()}}, out);
      }
      if (pin->parsed()) {
        const auto p = pin_f_value(o_k, o_l, o_n, o_m);
        json j{{"k", o_k}, {"l", o_l}, {"n", o_n}, {"m", o_m}, {"determined", p.determined}};
        if (p.determined) {
          j["value"] = p.lo;
        } else {
          j["interval"] = {p.lo, p.hi};
        }
        j["lo"] = p.lo;
        j["hi"] = p.hi;
        j["lo_source"] = p.lo_source;
        j["hi_source"] = p.hi_source;
        j["method"] = std::string(to_string(SearchMethod::Sandwich));
        emit(out, j);
        return kExitOk;
      }
    }

    if (curve->parsed()) {
      const auto pts = emit_curve(cv_from, cv_to, cv_step, cv_ub_n, cv_k);
      std::ostringstream csv;
      write_curve_csv(csv, pts);
      if (cv_out.empty()) {
        out << csv.str();
      } else {
        write_text(cv_out, csv.str());
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto results = run_acceptance(v_opts);
      const auto j = to_json(results, v_opts);
      emit(out, j);
      if (!v_out.empty()) write_text(v_out, j.dump(2) + "\n");
      return j["summary"]["all_passed"].get<bool>() ? kExitOk : kExitInfeasible;
    }
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperpath::cli
