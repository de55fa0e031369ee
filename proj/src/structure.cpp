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

#include "oddcycle/structure.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "oddcycle/error.hpp"

namespace oddcycle {
namespace {

struct ColoringOutcome {
  std::vector<std::int8_t> color;
  std::vector<Vertex> parent;
  std::vector<int> depth;
  std::optional<Edge> conflict;
};

ColoringOutcome bfs_coloring(const Graph& g, std::span<const Vertex> keep, bool stop_on_conflict) {
  const std::size_t n = g.order();
  std::vector<char> in = membership(n, keep);
  ColoringOutcome out;
  out.color.assign(n, -1);
  out.parent.assign(n, -1);
  out.depth.assign(n, 0);
  VertexSet order(keep.begin(), keep.end());
  std::sort(order.begin(), order.end());
  std::deque<Vertex> queue;
  for (Vertex root : order) {
    if (out.color[root] >= 0) continue;
    out.color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (!in[w]) continue;
        if (out.color[w] < 0) {
          out.color[w] = static_cast<std::int8_t>(1 - out.color[v]);
          out.parent[w] = v;
          out.depth[w] = out.depth[v] + 1;
          queue.push_back(w);
        } else if (out.color[w] == out.color[v] && !out.conflict) {
          out.conflict = Edge{v, w};
          if (stop_on_conflict) return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

bool verify_cycle(const Graph& g, const CycleWitness& w, std::size_t length) {
  const auto& c = w.vertices;
  if (c.size() != length || length < 3) return false;
  std::vector<Vertex> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : c) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) return false;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

bool verify_path(const Graph& g, const PathWitness& w) {
  const auto& p = w.vertices;
  if (p.empty()) return false;
  for (Vertex v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) return false;
  }
  std::vector<Vertex> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.adjacent(p[i], p[i + 1])) return false;
  }
  return true;
}

std::optional<Bipartition> is_bipartite(const Graph& g, std::span<const Vertex> restrict_to) {
  auto outcome = bfs_coloring(g, restrict_to, true);
  if (outcome.conflict) return std::nullopt;
  return Bipartition::from_labels(std::move(outcome.color));
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  VertexSet all = all_vertices(g.order());
  return is_bipartite(g, all);
}

std::optional<CycleWitness> find_odd_cycle(const Graph& g, std::span<const Vertex> restrict_to) {
  auto outcome = bfs_coloring(g, restrict_to, true);
  if (!outcome.conflict) return std::nullopt;
  Vertex x = outcome.conflict->u;
  Vertex y = outcome.conflict->v;
  std::vector<Vertex> left{x};
  std::vector<Vertex> right{y};
  while (x != y) {
    if (outcome.depth[x] >= outcome.depth[y]) {
      x = outcome.parent[x];
      left.push_back(x);
    } else {
      y = outcome.parent[y];
      right.push_back(y);
    }
  }
  // left ends at the common ancestor, right ends with it too.
  right.pop_back();
  CycleWitness w;
  w.vertices.assign(left.rbegin(), left.rend());
  // w: lca .. x ; then y .. (child of lca on y side)
  std::vector<Vertex> tail(right.begin(), right.end());
  w.vertices.insert(w.vertices.end(), tail.begin(), tail.end());
  return w;
}

std::optional<CycleWitness> find_odd_cycle(const Graph& g) {
  VertexSet all = all_vertices(g.order());
  return find_odd_cycle(g, all);
}

std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> restrict_to) {
  std::vector<char> in = membership(g.order(), restrict_to);
  std::vector<char> seen(g.order(), 0);
  VertexSet order(restrict_to.begin(), restrict_to.end());
  std::sort(order.begin(), order.end());
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root : order) {
    if (seen[root]) continue;
    VertexSet comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  VertexSet all = all_vertices(g.order());
  return connected_components(g, all);
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

int BlockDecomposition::block_of_edge(Vertex u, Vertex v) const {
  const auto& a = blocks_of[u];
  const auto& b = blocks_of[v];
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return a[i];
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return -1;
}

BlockDecomposition blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<VertexSet> found;
  std::vector<Edge> edge_stack;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] >= 0 || g.degree(static_cast<Vertex>(root)) == 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({static_cast<Vertex>(root), -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          edge_stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (low[done.v] >= disc[up.v]) {
        VertexSet block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == up.v && e.v == done.v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        found.push_back(std::move(block));
      }
    }
  }

  std::sort(found.begin(), found.end());  // lexicographic: by minimum vertex first
  BlockDecomposition d;
  d.blocks = std::move(found);
  d.blocks_of.assign(n, {});
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    for (Vertex v : d.blocks[b]) d.blocks_of[v].push_back(static_cast<int>(b));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (d.blocks_of[v].size() > 1) d.cut_vertices.push_back(static_cast<Vertex>(v));
  }
  const std::size_t nb = d.blocks.size();
  d.tree.assign(nb + d.cut_vertices.size(), {});
  for (std::size_t c = 0; c < d.cut_vertices.size(); ++c) {
    for (int b : d.blocks_of[d.cut_vertices[c]]) {
      d.tree[b].push_back(static_cast<int>(nb + c));
      d.tree[nb + c].push_back(b);
    }
  }
  for (auto& row : d.tree) std::sort(row.begin(), row.end());
  return d;
}

bool is_2_connected(const Graph& g, std::span<const Vertex> restrict_to) {
  if (restrict_to.size() < 3) return false;
  auto sub = induced_subgraph(g, restrict_to);
  if (!is_connected(sub.graph)) return false;
  auto d = blocks(sub.graph);
  return d.blocks.size() == 1 && d.cut_vertices.empty();
}

bool is_2_connected(const Graph& g) {
  VertexSet all = all_vertices(g.order());
  return is_2_connected(g, all);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.to_parent.assign(keep.begin(), keep.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
  out.from_parent.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    Vertex v = out.to_parent[i];
    require(v >= 0 && static_cast<std::size_t>(v) < g.order(), ErrorCode::invalid_parameter,
            "induced_subgraph: vertex out of range");
    out.from_parent[v] = static_cast<Vertex>(i);
  }
  GraphBuilder builder(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(out.to_parent[i])) {
      Vertex j = out.from_parent[w];
      if (j > static_cast<Vertex>(i)) builder.add_edge(static_cast<Vertex>(i), j);
    }
  }
  out.graph = builder.build();
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> remove) {
  std::vector<char> gone = membership(g.order(), remove);
  VertexSet keep;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!gone[v]) keep.push_back(static_cast<Vertex>(v));
  }
  return induced_subgraph(g, keep);
}

std::size_t degree_within(const Graph& g, Vertex v, const std::vector<char>& mask) {
  std::size_t d = 0;
  for (Vertex w : g.neighbors(v)) d += mask[w] ? 1 : 0;
  return d;
}

std::size_t min_degree_within(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) return 0;
  std::vector<char> mask = membership(g.order(), set);
  std::size_t best = g.order();
  for (Vertex v : set) best = std::min(best, degree_within(g, v, mask));
  return best;
}

}  // namespace oddcycle
