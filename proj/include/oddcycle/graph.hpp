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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace oddcycle {

using Vertex = std::int32_t;
using VertexSet = std::vector<Vertex>;  // sorted, no duplicates

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed rows with every row sorted, so neighbor
/// iteration is deterministic and adjacency tests are a binary search.
/// "Deleting" anything means building a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Strict constructor: rejects self-loops, out-of-range endpoints and
  /// repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const noexcept;

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Accumulates edges; duplicates are merged on build().
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n) {}

  std::size_t order() const noexcept { return n_; }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& add_clique(std::span<const Vertex> vertices);
  GraphBuilder& add_biclique(std::span<const Vertex> left, std::span<const Vertex> right);

  Graph build() const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// A 2-coloring of the subgraph induced by parts[0] ∪ parts[1].
/// part_of[v] is 0 or 1 for covered vertices and -1 elsewhere.
struct Bipartition {
  std::vector<std::int8_t> part_of;
  std::array<VertexSet, 2> parts;

  std::size_t covered() const noexcept { return parts[0].size() + parts[1].size(); }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < part_of.size() && part_of[v] >= 0;
  }
  VertexSet vertices() const;

  /// Builds parts from a part_of vector.
  static Bipartition from_labels(std::vector<std::int8_t> part_of);
};

/// Checks that every edge of g inside the covered set joins part 0 to part 1.
bool is_valid_bipartition(const Graph& g, const Bipartition& bip);

/// Membership mask helper: mask[v] is true iff v is in `set`.
std::vector<char> membership(std::size_t n, std::span<const Vertex> set);

VertexSet all_vertices(std::size_t n);

/// Sum of degrees equals twice the edge count; checked after constructions.
bool degree_sum_identity(const Graph& g);

}  // namespace oddcycle
