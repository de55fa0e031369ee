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

#include "oddcycle/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "oddcycle/error.hpp"
#include "oddcycle/structure.hpp"

namespace oddcycle {

std::size_t SuspensionSpec::outside_count() const {
  std::size_t t = 0;
  for (const auto& p : pieces) t += p.outside.size();
  return t;
}

bool is_valid_suspension(const Graph& g, const SuspensionSpec& spec) {
  const std::size_t n = g.order();
  std::vector<int> owner(n, -2);  // -2 unassigned, -1 core, i piece index
  for (Vertex v : spec.core) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || owner[v] != -2) return false;
    owner[v] = -1;
  }
  for (std::size_t i = 0; i < spec.pieces.size(); ++i) {
    const auto& piece = spec.pieces[i];
    if (piece.attach < 0 || static_cast<std::size_t>(piece.attach) >= n || owner[piece.attach] != -1) return false;
    for (Vertex v : piece.outside) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || owner[v] != -2) return false;
      owner[v] = static_cast<int>(i);
    }
  }
  if (spec.core.size() + spec.outside_count() != n) return false;
  if (!is_bipartite(g, spec.core)) return false;
  for (std::size_t i = 0; i < spec.pieces.size(); ++i) {
    for (Vertex v : spec.pieces[i].outside) {
      for (Vertex w : g.neighbors(v)) {
        if (owner[w] == static_cast<int>(i)) continue;
        if (w == spec.pieces[i].attach) continue;
        return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r) {
  require(r >= 1 && r <= n, ErrorCode::invalid_parameter,
          "turan: need 1 <= r <= n (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

std::size_t turan_edge_count(std::size_t n, std::size_t r) {
  std::size_t total = n * (n - 1) / 2;
  for (std::size_t s : turan_part_sizes(n, r)) total -= s * (s - 1) / 2;
  return total;
}

Graph turan(std::size_t n, std::size_t r) {
  auto sizes = turan_part_sizes(n, r);
  std::vector<std::size_t> part(n);
  std::size_t v = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < sizes[i]; ++j) part[v++] = i;
  GraphBuilder builder(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (part[a] != part[b]) builder.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return builder.build();
}

Vertex extremal_suspension_cut_vertex(std::size_t n, std::size_t r) {
  require(r >= 2 && n >= r + 2, ErrorCode::invalid_parameter,
          "extremal_suspension: need r >= 2 and n >= r + 2 (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  const std::size_t core = n - r + 1;
  return core % 2 == 0 ? 0 : static_cast<Vertex>((core + 1) / 2);
}

std::size_t extremal_suspension_edge_count(std::size_t n, std::size_t r) {
  const std::size_t core = n - r + 1;
  return core * core / 4 + r * (r - 1) / 2;
}

Graph extremal_suspension(std::size_t n, std::size_t r) {
  const Vertex cut = extremal_suspension_cut_vertex(n, r);
  const std::size_t core = n - r + 1;
  const std::size_t big = (core + 1) / 2;
  GraphBuilder builder(n);
  for (std::size_t a = 0; a < big; ++a)
    for (std::size_t b = big; b < core; ++b) builder.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  VertexSet clique{cut};
  for (std::size_t v = core; v < n; ++v) clique.push_back(static_cast<Vertex>(v));
  builder.add_clique(clique);
  return builder.build();
}

Graph star_suspension_family(std::size_t n, std::size_t r) {
  require(r >= 3 && n >= r + 2, ErrorCode::invalid_parameter,
          "star_suspension_family: need r >= 3 and n >= r + 2 (n=" + std::to_string(n) + ", r=" +
              std::to_string(r) + ")");
  return extremal_suspension(n, r - 1);
}

Graph c5_blowup(std::size_t a, std::size_t b, std::size_t c) {
  require(a >= 1 && b >= 1 && c >= 1, ErrorCode::invalid_parameter, "c5_blowup: class sizes must be >= 1");
  const std::size_t n = 2 + a + b + c;
  std::vector<VertexSet> cls(5);
  cls[0] = {0};
  cls[1] = {1};
  Vertex next = 2;
  for (std::size_t i = 0; i < a; ++i) cls[2].push_back(next++);
  for (std::size_t i = 0; i < b; ++i) cls[3].push_back(next++);
  for (std::size_t i = 0; i < c; ++i) cls[4].push_back(next++);
  GraphBuilder builder(n);
  for (int i = 0; i < 5; ++i) builder.add_biclique(cls[i], cls[(i + 1) % 5]);
  return builder.build();
}

GnrSample random_gnr_member(std::size_t n, std::size_t r, std::uint64_t seed, double density, int outside) {
  require(r >= 3 && r <= n, ErrorCode::invalid_parameter,
          "random_gnr_member: need 3 <= r <= n (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  require(density > 0.0 && density <= 1.0, ErrorCode::invalid_parameter, "random_gnr_member: density in (0,1]");
  require(outside < 0 || static_cast<std::size_t>(outside) <= r - 2, ErrorCode::invalid_parameter,
          "random_gnr_member: outside count exceeds r-2");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::bernoulli_distribution coin(density);
  std::bernoulli_distribution half(0.5);

  const std::size_t t = outside >= 0 ? static_cast<std::size_t>(outside) : uniform(0, r - 2);
  const std::size_t core_n = n - t;

  // Work in "raw" labels 0..n-1 (core first), relabel randomly at the end.
  std::vector<int> side(core_n);
  {
    std::vector<std::size_t> perm(core_n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < core_n; ++i) side[perm[i]] = i < (core_n + 1) / 2 ? 0 : 1;
  }
  std::array<std::vector<Vertex>, 2> by_side;
  for (std::size_t v = 0; v < core_n; ++v) by_side[side[v]].push_back(static_cast<Vertex>(v));

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  auto connect = [&adj](std::size_t u, std::size_t v) { adj[u][v] = adj[v][u] = 1; };
  for (Vertex u : by_side[0])
    for (Vertex v : by_side[1])
      if (coin(rng)) connect(u, v);

  // Minimum degree repair: 2, or the opposite part size if smaller.
  for (std::size_t v = 0; v < core_n; ++v) {
    const auto& other = by_side[1 - side[v]];
    const std::size_t want = std::min<std::size_t>(2, other.size());
    auto degree = [&]() {
      std::size_t d = 0;
      for (Vertex w : other) d += adj[v][w];
      return d;
    };
    while (degree() < want) connect(v, other[uniform(0, other.size() - 1)]);
  }
  // Connectivity repair: hook every component onto the first one.
  while (true) {
    std::vector<int> comp(core_n, -1);
    int count = 0;
    for (std::size_t s = 0; s < core_n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = count;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < core_n; ++w) {
          if (adj[v][w] && comp[w] < 0) {
            comp[w] = count;
            stack.push_back(w);
          }
        }
      }
      ++count;
    }
    if (count <= 1) break;
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < core_n; ++v)
      if (comp[v] == 1) members.push_back(v);
    const std::size_t x = members[uniform(0, members.size() - 1)];
    std::vector<std::size_t> targets;
    for (Vertex w : by_side[1 - side[x]])
      if (comp[w] == 0) targets.push_back(static_cast<std::size_t>(w));
    require(!targets.empty(), ErrorCode::construction_failure, "random_gnr_member: cannot connect core");
    connect(x, targets[uniform(0, targets.size() - 1)]);
  }

  // Pieces: random composition of t into nonempty groups.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t v = core_n; v < n; ++v) {
    if (groups.empty() || half(rng)) groups.emplace_back();
    groups.back().push_back(v);
  }
  std::vector<std::size_t> attaches;
  for (const auto& grp : groups) {
    const std::size_t attach = uniform(0, core_n - 1);
    attaches.push_back(attach);
    for (std::size_t i = 1; i < grp.size(); ++i) connect(grp[i], grp[uniform(0, i - 1)]);
    for (std::size_t i = 0; i < grp.size(); ++i)
      for (std::size_t j = i + 1; j < grp.size(); ++j)
        if (half(rng)) connect(grp[i], grp[j]);
    connect(attach, grp[uniform(0, grp.size() - 1)]);
    for (std::size_t v : grp)
      if (half(rng)) connect(attach, v);
  }

  std::vector<Vertex> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);

  GraphBuilder builder(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (adj[u][v]) builder.add_edge(relabel[u], relabel[v]);

  GnrSample sample{builder.build(), {}};
  for (std::size_t v = 0; v < core_n; ++v) sample.spec.core.push_back(relabel[v]);
  std::sort(sample.spec.core.begin(), sample.spec.core.end());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    SuspensionSpec::Piece piece;
    for (std::size_t v : groups[i]) piece.outside.push_back(relabel[v]);
    std::sort(piece.outside.begin(), piece.outside.end());
    piece.attach = relabel[attaches[i]];
    sample.spec.pieces.push_back(std::move(piece));
  }
  return sample;
}

}  // namespace oddcycle
