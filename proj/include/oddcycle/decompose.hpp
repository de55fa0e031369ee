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
#include <string>
#include <vector>

#include "oddcycle/constructions.hpp"
#include "oddcycle/cycles.hpp"
#include "oddcycle/graph.hpp"
#include "oddcycle/witness.hpp"

namespace oddcycle {

/// k: the forbidden cycle is C_{2k+1}. r: family index. c: peeling constant;
/// 0 means "use 2k".
struct AnalysisParams {
  std::size_t k = 2;
  std::size_t r = 3;
  std::size_t c = 0;

  std::size_t peel_constant() const noexcept { return c == 0 ? 2 * k : c; }
  void validate() const;
};

// ---------------------------------------------------------------------------
// Peeling

enum class PeelMode { at_most, strictly_below };

/// Degree threshold num/den compared exactly: at_most deletes d with
/// d*den <= num, strictly_below deletes d with d*den < num.
struct Threshold {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  PeelMode mode = PeelMode::at_most;

  bool qualifies(std::size_t degree) const noexcept;
  std::string describe() const;

  /// d <= 2n/5 with n the original order.
  static Threshold two_fifths(std::size_t n) { return {2 * n, 5, PeelMode::at_most}; }
  /// d < 11c.
  static Threshold eleven_c(std::size_t c) { return {11 * c, 1, PeelMode::strictly_below}; }
};

struct PeelStep {
  Vertex vertex;
  std::size_t degree;  // degree inside the current subgraph when deleted
};

struct PeelTrace {
  Threshold threshold;
  VertexSet start;  // vertex set the peel started from
  std::vector<PeelStep> deletions;
  VertexSet survivors;
};

/// Repeatedly deletes the lowest-labeled vertex whose degree in the current
/// induced subgraph qualifies, starting from the subgraph induced by `start`
/// (the whole graph for the two-argument form). The threshold never changes
/// as vertices go.
PeelTrace peel(const Graph& g, const Threshold& threshold, std::span<const Vertex> start);
PeelTrace peel(const Graph& g, const Threshold& threshold);

/// Re-deletes in recorded order and checks every recorded degree, the
/// threshold predicate at each step, and that the survivors are stable.
bool replay(const Graph& g, const PeelTrace& trace);

// ---------------------------------------------------------------------------
// Dense bipartite pair

struct DenseReport {
  std::size_t n = 0;
  std::size_t c = 0;
  bool in_regime = false;  // e >= (n-c)^2/4 and n >= max(50c, 50k)
  std::size_t f_order = 0;
  std::size_t f_min_degree = 0;
  std::size_t gprime_order = 0;
  std::size_t gprime_min_degree = 0;
  bool f_order_ok = false;         // |F| >= n - 10c
  bool f_degree_ok = false;        // δ(F) > 2n/5
  bool gprime_order_ok = false;    // |G'| >= n - 2c
  bool gprime_degree_ok = false;   // δ(G') >= 11c
  bool f_bipartite = false;
  bool gprime_bipartite = false;
  bool f_2connected = false;
  bool gprime_2connected = false;
  std::size_t attachment_violations = 0;  // G' \ F vertices with < c neighbors across in F
  bool f_subset_of_gprime = false;

  bool all_ok() const noexcept;
};

struct DenseCertificate {
  VertexSet f;
  Bipartition f_bip;  // restriction of gprime_bip to F
  VertexSet gprime;
  Bipartition gprime_bip;
  PeelTrace gprime_trace;  // d < 11c from all of V(G)
  PeelTrace f_trace;       // d <= 2n/5 continued from the survivors of G'
  DenseReport report;
};

struct DenseExtraction {
  std::optional<DenseCertificate> certificate;
  /// Set when a peeled remnant is not bipartite.
  std::optional<CycleWitness> odd_cycle;
  std::string diagnostic;

  bool ok() const noexcept { return certificate.has_value(); }
};

DenseExtraction extract_dense_pair(const Graph& g, const AnalysisParams& p);

// ---------------------------------------------------------------------------
// k-dense verification

enum class PathRange {
  definition,  // same part 5..2k+1, across 6..2k+2
  greedy,      // same part 3..2k+1, across 4..2k+2
};

/// Orders h the path checks ask for, in increasing order.
std::vector<std::size_t> required_orders(std::size_t k, bool same_part, PathRange range = PathRange::definition);

struct KDenseMode {
  enum class Kind { exact, greedy_sampled };
  Kind kind = Kind::exact;
  std::size_t pairs = 50;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultCycleBudget;  // per path query, exact mode

  static KDenseMode exact() { return {}; }
  static KDenseMode greedy(std::size_t pairs, std::uint64_t seed) { return {Kind::greedy_sampled, pairs, seed}; }
};

struct KDenseFailure {
  Vertex u;
  Vertex v;
  std::size_t order;
  char clause;  // 'a', 'b' or 'c'
  std::string reason;
};

struct KDenseReport {
  bool bipartite = false;
  bool two_connected = false;
  /// Greedy mode only: min degree of the greedy host above 2/5 of its order.
  bool degree_hypothesis = true;
  std::size_t pairs_checked = 0;
  std::size_t paths_checked = 0;
  std::vector<KDenseFailure> failures;

  bool passed() const noexcept { return bipartite && two_connected && degree_hypothesis && failures.empty(); }
};

/// The greedy host a dense subgraph routes through: a set with minimum
/// degree above 2/5 of its order, colored consistently with the subgraph.
struct GreedyAnchor {
  VertexSet set;
  const Bipartition* bip = nullptr;
};

/// Checks the k-dense clauses for the subgraph induced by `sub` with
/// coloring `bip`. In greedy mode without an anchor the subgraph itself is
/// the greedy host; with an anchor, endpoints outside it first step into it.
KDenseReport verify_k_dense(const Graph& g, const VertexSet& sub, const Bipartition& bip, std::size_t k,
                            const KDenseMode& mode, const GreedyAnchor* anchor = nullptr);

/// u-v path of the given order inside `sub`, built greedily through the
/// anchor (or `sub` itself) avoiding `forbidden`. Falls back to nothing; the
/// caller decides whether an exact search is affordable.
std::optional<PathWitness> route_dense_path(const Graph& g, const Bipartition& bip, const GreedyAnchor& anchor,
                                            Vertex u, Vertex v, std::size_t order,
                                            const std::vector<char>* forbidden = nullptr);

// ---------------------------------------------------------------------------
// Bad paths

/// Block of g containing the 2-connected subgraph induced by `gprime`.
VertexSet containing_block(const Graph& g, const VertexSet& gprime);

/// A path whose endpoints lie in G' and whose interior avoids G' is bad when
/// its length has the wrong parity for the endpoint parts: odd between equal
/// parts, even between different parts.
bool is_bad_path(const Graph& g, const VertexSet& gprime, const Bipartition& bip, const PathWitness& path);

struct BadPathSearch {
  std::optional<PathWitness> path;
  bool block_bipartite = false;
  SearchStatus status = SearchStatus::none;
};

/// Shortest bad path for G' (ties broken toward the smallest first endpoint,
/// then the lexicographically smallest sequence found by BFS). Returns no
/// path exactly when the block containing G' is bipartite.
BadPathSearch find_bad_path(const Graph& g, const VertexSet& gprime, const Bipartition& bip,
                            std::uint64_t budget = kDefaultCycleBudget);

// ---------------------------------------------------------------------------
// Suspension-family certificates

struct GnrCertificate {
  VertexSet core;
  Bipartition core_bip;
  std::vector<SuspensionSpec::Piece> pieces;
  std::size_t outside_count = 0;
  std::vector<int> coloring;  // color per vertex
  std::size_t colors_used = 0;
};

/// Minimal number of vertices outside a bipartite core; see gnr_certificate.
std::size_t gnr_index(const Graph& g);

/// Certificate with the minimal outside count. The core of each component is
/// the largest connected group of bipartite blocks (or a single vertex when
/// the component has no bipartite block); pieces are the components of G
/// minus the core.
GnrCertificate gnr_certificate(const Graph& g);

/// gnr_certificate when its outside count is at most r-2.
std::optional<GnrCertificate> gnr_certify(const Graph& g, std::size_t r);

/// Re-checks every certificate invariant from scratch.
bool verify_gnr_certificate(const Graph& g, const GnrCertificate& cert);

struct ExtremalIsomorphism {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<Vertex> map;  // g vertex -> extremal_suspension(n, r) vertex
};

/// Structural isomorphism test against T_{n-r+1,2} ∘ K_r; the returned map
/// is verified edge by edge.
std::optional<ExtremalIsomorphism> match_extremal_suspension(const Graph& g, std::size_t r);

bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map);

// ---------------------------------------------------------------------------
// Pipeline

enum class OutcomeKind { cycle_found, gnr_member, extremal_match, undecided };

const char* to_string(OutcomeKind kind) noexcept;

struct StabilityOutcome {
  OutcomeKind kind = OutcomeKind::undecided;
  std::optional<CycleWitness> cycle;
  std::optional<GnrCertificate> gnr;
  std::optional<ExtremalIsomorphism> isomorphism;
  std::optional<DenseReport> dense;
  std::optional<PathWitness> bad_path;
  /// How the outcome was reached, one entry per pipeline stage.
  std::vector<std::string> trail;
  /// Regime flags (edge count and order hypotheses).
  bool edge_regime = false;
  bool order_regime = false;
  std::string diagnostic;
};

StabilityOutcome stability_decompose(const Graph& g, const AnalysisParams& p,
                                     std::uint64_t budget = kDefaultCycleBudget);

}  // namespace oddcycle
