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
#include <optional>
#include <span>

#include "oddcycle/graph.hpp"
#include "oddcycle/witness.hpp"

namespace oddcycle {

inline constexpr std::uint64_t kDefaultCycleBudget = 10'000'000;

enum class SearchStatus { found, none, budget_exhausted };

const char* to_string(SearchStatus s) noexcept;

struct CycleSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<CycleWitness> witness;
  std::uint64_t expansions = 0;
};

/// Exact search for a cycle of the given length. A cycle lives inside one
/// block, so the search runs block by block, skips blocks that are too small
/// or bipartite (for odd lengths), and inside a block does a DFS rooted at the
/// smallest label of the cycle with distance-to-root pruning. `none` is only
/// reported when the whole space was exhausted within the budget.
CycleSearch find_cycle_exact(const Graph& g, std::size_t length, std::uint64_t budget = kDefaultCycleBudget);

/// Cycle of the given length through the edge uv (a path of length-1 edges
/// from u to v avoiding the edge itself).
CycleSearch find_cycle_through_edge(const Graph& g, Vertex u, Vertex v, std::size_t length,
                                    std::uint64_t budget = kDefaultCycleBudget);

struct PathSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<PathWitness> witness;
  std::uint64_t expansions = 0;
};

/// Path from u to v with exactly `order` vertices, all inside `allowed`
/// (a membership mask; u and v must be allowed).
PathSearch find_path_exact(const Graph& g, const std::vector<char>& allowed, Vertex u, Vertex v, std::size_t order,
                           std::uint64_t budget = kDefaultCycleBudget);

/// Greedy construction of a u-v path of order h inside the bipartite
/// subgraph covered by `bip`: extend from u by the smallest unused neighbor
/// (never v), then close through the smallest common neighbor of the last
/// vertex and v.
///
/// Requires min degree of the covered subgraph > 2/5 of its order, h >= 3 odd
/// when u, v share a part and h >= 4 even otherwise; throws
/// precondition_violation when these fail and construction_failure if a
/// choice set empties.
PathWitness greedy_bipartite_path(const Graph& g, const Bipartition& bip, Vertex u, Vertex v, std::size_t h);

/// Same construction without the degree check; used where the caller has
/// already established the hypothesis on a larger host.
std::optional<PathWitness> try_greedy_bipartite_path(const Graph& g, const Bipartition& bip, Vertex u, Vertex v,
                                                     std::size_t h, const std::vector<char>* forbidden = nullptr);

/// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

struct Circumference {
  std::size_t length = 0;  // 0 for forests
  bool exact = false;
};

/// Longest cycle: exact (exhaustive DFS) when n <= 16, otherwise a lower
/// bound from a budgeted DFS.
Circumference circumference_lower_bound(const Graph& g, std::uint64_t budget = kDefaultCycleBudget);

/// Bit L set iff the graph has a cycle of length L. Exhaustive; meant for
/// small graphs (n <= 16).
std::uint64_t cycle_length_mask(const Graph& g);

}  // namespace oddcycle
