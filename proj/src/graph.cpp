/*
 * Copyright 2026 The oddcycle Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "oddcycle/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "oddcycle/error.hpp"

namespace oddcycle {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::precondition_violation: return "precondition-violation";
    case ErrorCode::construction_failure: return "construction-failure";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::size_limit: return "size-limit";
    case ErrorCode::bracket_failure: return "bracket-failure";
    case ErrorCode::not_equitable: return "not-equitable";
    case ErrorCode::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    require(e.u >= 0 && e.v >= 0 && static_cast<std::size_t>(e.u) < n && static_cast<std::size_t>(e.v) < n,
            ErrorCode::invalid_parameter,
            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for n=" + std::to_string(n));
    require(e.u != e.v, ErrorCode::invalid_parameter, "self-loop at vertex " + std::to_string(e.u));
    sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  require(dup == sorted.end(), ErrorCode::invalid_parameter,
          dup == sorted.end() ? "" : "parallel edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  GraphBuilder builder(n);
  for (const Edge& e : sorted) builder.add_edge(e.u, e.v);
  return builder.build();
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = order() == 0 ? 0 : degree(0);
  for (std::size_t v = 1; v < order(); ++v) best = std::min(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < order(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (static_cast<Vertex>(u) < v) out.push_back({static_cast<Vertex>(u), v});
    }
  }
  return out;
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  require(u >= 0 && v >= 0 && static_cast<std::size_t>(u) < n_ && static_cast<std::size_t>(v) < n_,
          ErrorCode::invalid_parameter, "edge endpoint out of range");
  require(u != v, ErrorCode::invalid_parameter, "self-loop at vertex " + std::to_string(u));
  edges_.push_back({std::min(u, v), std::max(u, v)});
  return *this;
}

GraphBuilder& GraphBuilder::add_clique(std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
  return *this;
}

GraphBuilder& GraphBuilder::add_biclique(std::span<const Vertex> left, std::span<const Vertex> right) {
  for (Vertex u : left)
    for (Vertex v : right) add_edge(u, v);
  return *this;
}

Graph GraphBuilder::build() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Graph g;
  g.offsets_.assign(n_ + 1, 0);
  for (const Edge& e : sorted) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(2 * sorted.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted edge order fills every row in ascending order: row u receives the
  // larger endpoints in order, and row v receives smaller endpoints in order
  // of u, which all precede the larger ones added later.
  for (const Edge& e : sorted) g.adjacency_[cursor[e.v]++] = e.u;
  for (const Edge& e : sorted) g.adjacency_[cursor[e.u]++] = e.v;
  return g;
}

VertexSet Bipartition::vertices() const {
  VertexSet out;
  out.reserve(covered());
  std::merge(parts[0].begin(), parts[0].end(), parts[1].begin(), parts[1].end(), std::back_inserter(out));
  return out;
}

Bipartition Bipartition::from_labels(std::vector<std::int8_t> labels) {
  Bipartition bip;
  bip.part_of = std::move(labels);
  for (std::size_t v = 0; v < bip.part_of.size(); ++v) {
    if (bip.part_of[v] >= 0) bip.parts[bip.part_of[v]].push_back(static_cast<Vertex>(v));
  }
  return bip;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& bip) {
  if (bip.part_of.size() != g.order()) return false;
  for (int side = 0; side < 2; ++side) {
    for (Vertex v : bip.parts[side]) {
      if (!bip.contains(v) || bip.part_of[v] != side) return false;
      for (Vertex w : g.neighbors(v)) {
        if (bip.contains(w) && bip.part_of[w] == side) return false;
      }
    }
  }
  std::size_t labeled = 0;
  for (auto p : bip.part_of) labeled += p >= 0 ? 1 : 0;
  return labeled == bip.covered();
}

std::vector<char> membership(std::size_t n, std::span<const Vertex> set) {
  std::vector<char> mask(n, 0);
  for (Vertex v : set) mask[v] = 1;
  return mask;
}

VertexSet all_vertices(std::size_t n) {
  VertexSet out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

bool degree_sum_identity(const Graph& g) {
  std::size_t total = 0;
  for (std::size_t v = 0; v < g.order(); ++v) total += g.degree(static_cast<Vertex>(v));
  return total == 2 * g.size();
}

}  // namespace oddcycle
