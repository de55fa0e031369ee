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

#include "oddcycle/cycles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

#include "oddcycle/error.hpp"
#include "oddcycle/structure.hpp"

namespace oddcycle {
namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// BFS distances from `source` over vertices with allowed[v] set.
std::vector<int> distances_from(const Graph& g, Vertex source, const std::vector<char>& allowed) {
  std::vector<int> dist(g.order(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (allowed[w] && dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Budgeted DFS for a cycle of `length` in h whose smallest vertex is `root`.
SearchStatus cycle_from_root(const Graph& h, Vertex root, std::size_t length, std::uint64_t& budget,
                             std::uint64_t& expansions, std::vector<Vertex>& out) {
  const std::size_t n = h.order();
  std::vector<char> allowed(n, 0);
  for (std::size_t v = static_cast<std::size_t>(root); v < n; ++v) allowed[v] = 1;
  std::vector<int> dist = distances_from(h, root, allowed);

  std::vector<Vertex> path{root};
  std::vector<char> on_path(n, 0);
  on_path[root] = 1;
  std::vector<std::size_t> cursor{0};
  while (!path.empty()) {
    Vertex cur = path.back();
    if (path.size() == length) {
      if (h.adjacent(cur, root)) {
        out = path;
        return SearchStatus::found;
      }
      on_path[cur] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    auto nbrs = h.neighbors(cur);
    std::size_t& next = cursor.back();
    bool pushed = false;
    while (next < nbrs.size()) {
      Vertex w = nbrs[next++];
      if (w <= root || on_path[w] || dist[w] == kUnreached) continue;
      if (static_cast<std::size_t>(dist[w]) > length - path.size()) continue;
      if (budget == 0) return SearchStatus::budget_exhausted;
      --budget;
      ++expansions;
      on_path[w] = 1;
      path.push_back(w);
      cursor.push_back(0);
      pushed = true;
      break;
    }
    if (!pushed) {
      on_path[cur] = 0;
      path.pop_back();
      cursor.pop_back();
    }
  }
  return SearchStatus::none;
}

}  // namespace

const char* to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

CycleSearch find_cycle_exact(const Graph& g, std::size_t length, std::uint64_t budget) {
  require(length >= 3, ErrorCode::invalid_parameter, "find_cycle_exact: length must be >= 3");
  CycleSearch result;
  const auto decomposition = blocks(g);
  bool exhausted = false;
  for (const VertexSet& block : decomposition.blocks) {
    if (block.size() < length) continue;
    if (length % 2 == 1 && is_bipartite(g, block)) continue;
    auto sub = induced_subgraph(g, block);
    for (std::size_t root = 0; root + length <= sub.graph.order(); ++root) {
      std::vector<Vertex> cycle;
      SearchStatus s = cycle_from_root(sub.graph, static_cast<Vertex>(root), length, budget, result.expansions, cycle);
      if (s == SearchStatus::found) {
        CycleWitness w;
        for (Vertex v : cycle) w.vertices.push_back(sub.to_parent[v]);
        result.status = SearchStatus::found;
        result.witness = std::move(w);
        return result;
      }
      if (s == SearchStatus::budget_exhausted) {
        exhausted = true;
        break;
      }
    }
    if (exhausted) break;
  }
  result.status = exhausted ? SearchStatus::budget_exhausted : SearchStatus::none;
  return result;
}

PathSearch find_path_exact(const Graph& g, const std::vector<char>& allowed, Vertex u, Vertex v, std::size_t order,
                           std::uint64_t budget) {
  PathSearch result;
  if (!allowed[u] || !allowed[v] || order == 0) return result;
  if (order == 1 || u == v) {
    if (order == 1 && u == v) {
      result.status = SearchStatus::found;
      result.witness = PathWitness{{u}};
    }
    return result;
  }
  std::vector<int> dist = distances_from(g, v, allowed);
  if (dist[u] == kUnreached || static_cast<std::size_t>(dist[u]) > order - 1) return result;

  std::vector<Vertex> path{u};
  std::vector<char> on_path(g.order(), 0);
  on_path[u] = 1;
  std::vector<std::size_t> cursor{0};
  while (!path.empty()) {
    Vertex cur = path.back();
    if (path.size() == order) {
      if (cur == v) {
        result.status = SearchStatus::found;
        result.witness = PathWitness{path};
        return result;
      }
    } else {
      auto nbrs = g.neighbors(cur);
      std::size_t& next = cursor.back();
      bool pushed = false;
      while (next < nbrs.size()) {
        Vertex w = nbrs[next++];
        if (!allowed[w] || on_path[w] || dist[w] == kUnreached) continue;
        const std::size_t after = path.size() + 1;  // vertices once w is added
        if (w == v && after != order) continue;
        if (static_cast<std::size_t>(dist[w]) > order - after) continue;
        if (budget == 0) {
          result.status = SearchStatus::budget_exhausted;
          return result;
        }
        --budget;
        ++result.expansions;
        on_path[w] = 1;
        path.push_back(w);
        cursor.push_back(0);
        pushed = true;
        break;
      }
      if (pushed) continue;
    }
    on_path[cur] = 0;
    path.pop_back();
    cursor.pop_back();
  }
  return result;
}

CycleSearch find_cycle_through_edge(const Graph& g, Vertex u, Vertex v, std::size_t length, std::uint64_t budget) {
  require(length >= 3, ErrorCode::invalid_parameter, "find_cycle_through_edge: length must be >= 3");
  CycleSearch result;
  if (!g.adjacent(u, v)) return result;
  std::vector<char> allowed(g.order(), 1);
  auto path = find_path_exact(g, allowed, u, v, length, budget);
  result.expansions = path.expansions;
  result.status = path.status;
  if (path.witness) result.witness = CycleWitness{path.witness->vertices};
  return result;
}

std::optional<PathWitness> try_greedy_bipartite_path(const Graph& g, const Bipartition& bip, Vertex u, Vertex v,
                                                     std::size_t h, const std::vector<char>* forbidden) {
  if (h < 3 || u == v || !bip.contains(u) || !bip.contains(v)) return std::nullopt;
  std::vector<char> used(g.order(), 0);
  if (forbidden != nullptr) used = *forbidden;
  used[u] = 1;
  used[v] = 1;
  std::vector<Vertex> path{u};
  while (path.size() + 2 < h) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(path.back())) {
      if (bip.contains(w) && !used[w]) {
        next = w;
        break;
      }
    }
    if (next < 0) return std::nullopt;
    used[next] = 1;
    path.push_back(next);
  }
  // Close through the smallest common neighbor of the last vertex and v.
  auto a = g.neighbors(path.back());
  auto b = g.neighbors(v);
  Vertex bridge = -1;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      if (bip.contains(a[i]) && !used[a[i]]) {
        bridge = a[i];
        break;
      }
      ++i;
      ++j;
    }
  }
  if (bridge < 0) return std::nullopt;
  path.push_back(bridge);
  path.push_back(v);
  return PathWitness{std::move(path)};
}

PathWitness greedy_bipartite_path(const Graph& g, const Bipartition& bip, Vertex u, Vertex v, std::size_t h) {
  require(bip.contains(u) && bip.contains(v) && u != v, ErrorCode::precondition_violation,
          "greedy_bipartite_path: endpoints must be distinct covered vertices");
  const bool same = bip.part_of[u] == bip.part_of[v];
  require(same ? (h >= 3 && h % 2 == 1) : (h >= 4 && h % 2 == 0), ErrorCode::precondition_violation,
          "greedy_bipartite_path: order " + std::to_string(h) + " has the wrong parity for the endpoint parts");
  const VertexSet covered = bip.vertices();
  const std::size_t delta = min_degree_within(g, covered);
  require(5 * delta > 2 * covered.size(), ErrorCode::precondition_violation,
          "greedy_bipartite_path: min degree " + std::to_string(delta) + " is not above 2n/5 for n=" +
              std::to_string(covered.size()));
  auto path = try_greedy_bipartite_path(g, bip, u, v, h);
  require(path.has_value(), ErrorCode::construction_failure,
          "greedy_bipartite_path: choice set emptied for u=" + std::to_string(u) + " v=" + std::to_string(v) +
              " h=" + std::to_string(h));
  return *path;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::deque<Vertex> queue;
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.assign(1, static_cast<Vertex>(root));
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (2 * static_cast<std::size_t>(dist[x]) + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          best = std::min(best, static_cast<std::size_t>(dist[x] + dist[y] + 1));
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

namespace {

// Bit L set iff a cycle of length L exists; subset DP rooted at the smallest
// cycle vertex. `rows` are adjacency bitmasks.
std::uint64_t cycle_lengths_dp(const std::vector<std::uint32_t>& rows) {
  const int n = static_cast<int>(rows.size());
  std::uint64_t lengths = 0;
  std::vector<std::uint32_t> reach;
  for (int s = 0; s + 2 < n; ++s) {
    const int width = n - s - 1;  // vertices s+1..n-1 mapped to bits 0..width-1
    auto local = [&](std::uint32_t mask) { return mask >> (s + 1); };
    reach.assign(std::size_t{1} << width, 0);
    std::uint32_t start = local(rows[s]);
    for (std::uint32_t b = start; b; b &= b - 1) {
      int w = std::countr_zero(b);
      reach[std::size_t{1} << w] |= 1u << w;
    }
    for (std::size_t mask = 1; mask < reach.size(); ++mask) {
      std::uint32_t ends = reach[mask];
      if (!ends) continue;
      const int size = std::popcount(static_cast<std::uint32_t>(mask));
      if (size >= 2 && (ends & start)) lengths |= std::uint64_t{1} << (size + 1);
      for (std::uint32_t e = ends; e; e &= e - 1) {
        int v = std::countr_zero(e);
        std::uint32_t out = local(rows[v + s + 1]) & ~static_cast<std::uint32_t>(mask);
        for (std::uint32_t b = out; b; b &= b - 1) {
          int w = std::countr_zero(b);
          reach[mask | (std::size_t{1} << w)] |= 1u << w;
        }
      }
    }
  }
  return lengths;
}

std::vector<std::uint32_t> bit_rows(const Graph& g) {
  std::vector<std::uint32_t> rows(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) rows[v] |= 1u << w;
  return rows;
}

}  // namespace

std::uint64_t cycle_length_mask(const Graph& g) {
  require(g.order() <= 24, ErrorCode::size_limit, "cycle_length_mask supports n <= 24");
  return cycle_lengths_dp(bit_rows(g));
}

Circumference circumference_lower_bound(const Graph& g, std::uint64_t budget) {
  Circumference out;
  if (g.order() <= 16) {
    std::uint64_t mask = cycle_length_mask(g);
    out.length = mask == 0 ? 0 : static_cast<std::size_t>(63 - std::countl_zero(mask));
    out.exact = true;
    return out;
  }
  // Budgeted DFS: longest closing path found from each root.
  const std::size_t n = g.order();
  std::vector<char> on_path(n, 0);
  for (std::size_t root = 0; root < n && budget > 0; ++root) {
    std::vector<Vertex> path{static_cast<Vertex>(root)};
    std::vector<std::size_t> cursor{0};
    on_path[root] = 1;
    while (!path.empty() && budget > 0) {
      Vertex cur = path.back();
      if (path.size() >= 3 && g.adjacent(cur, static_cast<Vertex>(root))) out.length = std::max(out.length, path.size());
      auto nbrs = g.neighbors(cur);
      std::size_t& next = cursor.back();
      bool pushed = false;
      while (next < nbrs.size()) {
        Vertex w = nbrs[next++];
        if (w <= static_cast<Vertex>(root) || on_path[w]) continue;
        --budget;
        on_path[w] = 1;
        path.push_back(w);
        cursor.push_back(0);
        pushed = true;
        break;
      }
      if (!pushed) {
        on_path[cur] = 0;
        path.pop_back();
        cursor.pop_back();
      }
    }
    for (Vertex v : path) on_path[v] = 0;
    if (out.length == n) break;
  }
  out.exact = false;
  return out;
}

}  // namespace oddcycle
