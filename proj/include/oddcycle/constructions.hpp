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

#include <cstdint>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

/// Bipartite core plus pieces, each meeting the core in one attach vertex.
/// Labels refer to the host graph this description was built for.
struct SuspensionSpec {
  struct Piece {
    VertexSet outside;  // vertices of the piece not in the core
    Vertex attach;      // the single core vertex the piece touches
  };

  VertexSet core;
  std::vector<Piece> pieces;

  std::size_t outside_count() const;
};

/// Checks the SuspensionSpec invariants against `g`: the core induces a
/// bipartite graph, pieces are disjoint and outside the core, and every edge
/// leaving a piece lands on its attach vertex.
bool is_valid_suspension(const Graph& g, const SuspensionSpec& spec);

/// Complete r-partite graph on n vertices, parts as equal as possible with
/// the larger parts first. Part sizes are exposed for tests and quotients.
Graph turan(std::size_t n, std::size_t r);
std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r);
std::size_t turan_edge_count(std::size_t n, std::size_t r);

/// T_{n-r+1,2} with K_r glued at the lowest vertex of the part of size
/// floor((n-r+1)/2).
///
/// Labels: the bipartite block occupies 0..n-r and is labeled like
/// turan(n-r+1, 2) (larger part first). The shared vertex is the first
/// vertex of the smaller part, or vertex 0 when the parts tie. The other
/// r-1 clique vertices are n-r+1..n-1.
Graph extremal_suspension(std::size_t n, std::size_t r);
Vertex extremal_suspension_cut_vertex(std::size_t n, std::size_t r);
std::size_t extremal_suspension_edge_count(std::size_t n, std::size_t r);

/// T_{n-r+2,2} ∘ K_{r-1}: the maximizer of λ over graphs with exactly r-2
/// vertices outside a bipartite core.
Graph star_suspension_family(std::size_t n, std::size_t r);

/// C_5 blown up to independent sets of sizes 1,1,a,b,c around the cycle.
/// Vertex 0 and 1 are the singletons, then the a-, b- and c-classes.
Graph c5_blowup(std::size_t a, std::size_t b, std::size_t c);

struct GnrSample {
  Graph graph;
  SuspensionSpec spec;
};

/// Random member of G_{n,r}: a bipartite core with edge density `density`
/// repaired to be connected with minimum degree >= 2, plus at most r-2
/// outside vertices grouped into pieces hung at random core vertices.
/// `outside` fixes the outside count when >= 0.
GnrSample random_gnr_member(std::size_t n, std::size_t r, std::uint64_t seed, double density = 0.7,
                            int outside = -1);

}  // namespace oddcycle
