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

#include <optional>
#include <span>
#include <vector>

#include "oddcycle/graph.hpp"
#include "oddcycle/witness.hpp"

namespace oddcycle {

/// BFS 2-coloring. In every connected component the smallest label gets
/// part 0. Returns nullopt iff the (induced) graph has an odd cycle.
std::optional<Bipartition> is_bipartite(const Graph& g);
std::optional<Bipartition> is_bipartite(const Graph& g, std::span<const Vertex> restrict_to);

/// An odd cycle of the induced subgraph, or nullopt when it is bipartite.
/// The cycle comes from the first BFS coloring conflict, so it is a shortest
/// odd cycle through the BFS root of that component.
std::optional<CycleWitness> find_odd_cycle(const Graph& g, std::span<const Vertex> restrict_to);
std::optional<CycleWitness> find_odd_cycle(const Graph& g);

/// Connected components of the induced subgraph, each sorted, listed by
/// smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> restrict_to);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct BlockDecomposition {
  /// Vertex sets of maximal 2-connected subgraphs and bridges, sorted by
  /// minimum vertex. Isolated vertices belong to no block.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// blocks_of[v]: indices of the blocks containing v, ascending.
  std::vector<std::vector<int>> blocks_of;
  /// Block-cut tree: nodes 0..B-1 are blocks, B..B+C-1 are cut vertices in
  /// the order of cut_vertices. Adjacency lists are sorted.
  std::vector<std::vector<int>> tree;

  std::size_t block_count() const noexcept { return blocks.size(); }
  /// Index of the block that contains edge uv.
  int block_of_edge(Vertex u, Vertex v) const;
};

BlockDecomposition blocks(const Graph& g);

/// Connected with no cut vertex; fewer than 3 vertices is never 2-connected.
bool is_2_connected(const Graph& g);
bool is_2_connected(const Graph& g, std::span<const Vertex> restrict_to);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // child label -> parent label
  std::vector<Vertex> from_parent;  // parent label -> child label, -1 when dropped
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Graph with the given vertices deleted and the rest relabeled compactly.
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> remove);

/// Minimum degree inside the induced subgraph (0 for an empty set).
std::size_t min_degree_within(const Graph& g, std::span<const Vertex> set);

std::size_t degree_within(const Graph& g, Vertex v, const std::vector<char>& mask);

}  // namespace oddcycle
