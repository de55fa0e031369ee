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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

// ---------------------------------------------------------------------------
// Small dense graphs and canonical labeling

inline constexpr std::size_t kMaxSmallOrder = 32;

/// Bit-row graph on at most 32 vertices.
struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, kMaxSmallOrder> rows{};

  std::size_t edge_count() const;
  Graph to_graph() const;
  static SmallGraph from_graph(const Graph& g);
  bool operator==(const SmallGraph& o) const;
};

struct Canonical {
  SmallGraph form;                      // the graph relabeled canonically
  std::vector<int> position;            // vertex -> canonical label
  std::vector<std::vector<int>> generators;  // automorphisms, as vertex maps
  std::vector<int> orbit;               // orbit representative (smallest vertex) per vertex
};

/// Canonical form by equitable refinement and individualization; the form
/// is the lexicographically largest relabeled adjacency among search leaves.
/// Automorphisms found on the way generate the full group.
Canonical canonical_form(const SmallGraph& g);

std::string canonical_graph6(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

// ---------------------------------------------------------------------------
// Enumeration

/// Hereditary class filter: called with a graph whose last vertex was just
/// added to a graph already in the class; returns false to prune.
using ClassFilter = std::function<bool(const SmallGraph& g, int new_vertex)>;

/// Filter for C_L-free graphs: checks only cycles through the new vertex.
ClassFilter cycle_free_filter(std::size_t length);

struct EnumerationStats {
  std::uint64_t emitted = 0;
  std::uint64_t candidates = 0;
  std::uint64_t canon_calls = 0;
};

/// Every isomorphism class on n vertices exactly once (within the class
/// when a filter is given), by canonical augmentation one vertex at a time.
EnumerationStats enumerate_graphs(int n, const std::function<void(const SmallGraph&)>& visit,
                                  const ClassFilter& filter = nullptr);

/// Number of unlabeled graphs on n vertices by Burnside's lemma over the
/// cycle types of S_n acting on pairs. Independent of the enumerator.
std::uint64_t count_unlabeled_graphs(int n);

// ---------------------------------------------------------------------------
// Chromatic number

struct Coloring {
  std::size_t chromatic_number = 0;
  std::vector<int> colors;
};

/// Exact, by DSATUR branch and bound. n <= 40.
Coloring chromatic_number(const Graph& g);

/// Whether g has a proper coloring with at most k colors.
bool is_colorable(const Graph& g, std::size_t k);

/// DSATUR greedy: an upper bound on χ.
std::size_t greedy_color_bound(const Graph& g);

// ---------------------------------------------------------------------------
// Extremal records

struct ExtremalRecord {
  int n = 0;
  std::size_t cycle_length = 0;
  std::size_t min_chromatic = 0;  // 0: unconstrained
  std::string objective;          // "edges" or "lambda"
  double optimum = 0.0;
  std::vector<std::string> extremal;  // canonical graph6, sorted
  std::uint64_t enumerated = 0;       // graphs of the class visited
  std::uint64_t qualifying = 0;       // of those, meeting the χ constraint
  bool feasible = false;              // some graph met the constraint

  bool unique() const { return extremal.size() == 1; }
};

/// Maximum edges of C_L-free graphs on n vertices, with all maximizers.
ExtremalRecord ex_bruteforce(int n, std::size_t cycle_length);

/// Same, over C_L-free graphs with χ >= r.
ExtremalRecord ex_chromatic_bruteforce(int n, std::size_t cycle_length, std::size_t r);

/// Maximum spectral radius over C_L-free graphs with χ >= r; maximizers are
/// those within 1e-9 of the optimum.
ExtremalRecord spex_bruteforce(int n, std::size_t cycle_length, std::size_t r);

// ---------------------------------------------------------------------------
// Stochastic search

struct CounterexampleSearch {
  std::optional<Graph> counterexample;
  double target = 0.0;       // λ(T_{n-r+1,2} ∘ K_r)
  double best_lambda = 0.0;  // best feasible λ seen
  std::uint64_t flips_tried = 0;
  std::uint64_t flips_accepted = 0;
};

/// Tabu hill climbing over C_{2k+1}-free graphs with χ >= r, maximizing λ,
/// with `budget` proposed edge flips. Reports a graph beating the extremal
/// suspension by more than 1e-8 if one turns up.
CounterexampleSearch counterexample_search_spectral(std::size_t n, std::size_t k, std::size_t r,
                                                    std::uint64_t budget, std::uint64_t seed);

}  // namespace oddcycle
