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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hyperpath/error.hpp"
#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Hypergraph parse_hg(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank(line)) break;
  }
  if (lineno == 0 || blank(line)) throw FormatError("missing header");

  long long k = 0;
  long long n = 0;
  long long m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> k >> n >> m) || (hs >> extra)) {
      throw FormatError("malformed header (expected \"k n m\"): " + line);
    }
  }
  if (k < 1 || n < 0 || m < 0) throw FormatError("malformed header: negative or zero field");

  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream ls(line);
    VertexSet e;
    long long v = 0;
    while (ls >> v) {
      if (v < 0 || v >= n) {
        throw FormatError("line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                          " out of range");
      }
      e.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof()) throw FormatError("line " + std::to_string(lineno) + ": non-numeric token");
    if (static_cast<long long>(e.size()) != k) {
      throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(k) +
                        " vertices, got " + std::to_string(e.size()));
    }
    edges.push_back(std::move(e));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw FormatError("header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  }
  try {
    return Hypergraph::from_edges(static_cast<int>(k), static_cast<std::size_t>(n),
                                  std::move(edges));
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

void write_hg(std::ostream& out, const Hypergraph& h) {
  out << h.k() << ' ' << h.n() << ' ' << h.m() << '\n';
  for (std::size_t i = 0; i < h.m(); ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out << ' ';
      out << e[j];
    }
    out << '\n';
  }
}

std::string to_hg_string(const Hypergraph& h) {
  std::ostringstream os;
  write_hg(os, h);
  return os.str();
}

Hypergraph load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return parse_hg(in);
}

void store(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  write_hg(out, h);
  if (!out) throw Error("write failed: " + path);
}

}  // namespace hyperpath
