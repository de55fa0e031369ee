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

#include "oddcycle/decompose.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "oddcycle/error.hpp"
#include "oddcycle/structure.hpp"

namespace oddcycle {
namespace {

std::string str(std::size_t x) { return std::to_string(x); }

bool bipartition_matches(const Graph& g, const VertexSet& set, const Bipartition& bip) {
  for (Vertex v : set)
    if (!bip.contains(v)) return false;
  auto mask = membership(g.order(), set);
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v))
      if (mask[w] && bip.part_of[v] == bip.part_of[w]) return false;
  return true;
}

Bipartition restrict_bipartition(const Bipartition& bip, const VertexSet& set) {
  std::vector<std::int8_t> labels(bip.part_of.size(), -1);
  for (Vertex v : set) labels[v] = bip.part_of[v];
  return Bipartition::from_labels(std::move(labels));
}

}  // namespace

void AnalysisParams::validate() const {
  require(k >= 2, ErrorCode::invalid_parameter, "k must be >= 2");
  require(r >= 2, ErrorCode::invalid_parameter, "r must be >= 2");
  require(peel_constant() >= 2, ErrorCode::invalid_parameter, "c must be >= 2");
}

// ---------------------------------------------------------------------------
// Peeling

bool Threshold::qualifies(std::size_t degree) const noexcept {
  const std::uint64_t lhs = static_cast<std::uint64_t>(degree) * den;
  return mode == PeelMode::at_most ? lhs <= num : lhs < num;
}

std::string Threshold::describe() const {
  std::string bound = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  return (mode == PeelMode::at_most ? "d <= " : "d < ") + bound;
}

PeelTrace peel(const Graph& g, const Threshold& threshold, std::span<const Vertex> start) {
  PeelTrace trace;
  trace.threshold = threshold;
  trace.start.assign(start.begin(), start.end());
  std::sort(trace.start.begin(), trace.start.end());

  auto alive = membership(g.order(), trace.start);
  std::vector<std::size_t> deg(g.order(), 0);
  std::vector<char> queued(g.order(), 0);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v : trace.start) {
    deg[v] = degree_within(g, v, alive);
    if (threshold.qualifies(deg[v])) {
      queued[v] = 1;
      ready.push(v);
    }
  }
  // Degrees only fall, so a qualifying vertex stays qualifying and the heap
  // top is always the lowest qualifying label.
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    trace.deletions.push_back({v, deg[v]});
    alive[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (!alive[w]) continue;
      --deg[w];
      if (!queued[w] && threshold.qualifies(deg[w])) {
        queued[w] = 1;
        ready.push(w);
      }
    }
  }
  for (Vertex v : trace.start)
    if (alive[v]) trace.survivors.push_back(v);
  return trace;
}

PeelTrace peel(const Graph& g, const Threshold& threshold) {
  VertexSet all = all_vertices(g.order());
  return peel(g, threshold, all);
}

bool replay(const Graph& g, const PeelTrace& trace) {
  auto alive = membership(g.order(), trace.start);
  for (const PeelStep& step : trace.deletions) {
    if (step.vertex < 0 || static_cast<std::size_t>(step.vertex) >= g.order() || !alive[step.vertex]) return false;
    const std::size_t d = degree_within(g, step.vertex, alive);
    if (d != step.degree || !trace.threshold.qualifies(d)) return false;
    // The recorded vertex must be the lowest qualifying one.
    for (Vertex v : trace.start) {
      if (v >= step.vertex) break;
      if (alive[v] && trace.threshold.qualifies(degree_within(g, v, alive))) return false;
    }
    alive[step.vertex] = 0;
  }
  VertexSet remaining;
  for (Vertex v : trace.start)
    if (alive[v]) remaining.push_back(v);
  if (remaining != trace.survivors) return false;
  for (Vertex v : remaining)
    if (trace.threshold.qualifies(degree_within(g, v, alive))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Dense bipartite pair

bool DenseReport::all_ok() const noexcept {
  return f_order_ok && f_degree_ok && gprime_order_ok && gprime_degree_ok && f_bipartite && gprime_bipartite &&
         f_2connected && gprime_2connected && attachment_violations == 0 && f_subset_of_gprime;
}

DenseExtraction extract_dense_pair(const Graph& g, const AnalysisParams& p) {
  p.validate();
  const std::size_t n = g.order();
  const std::size_t c = p.peel_constant();
  DenseExtraction out;
  DenseCertificate cert;
  DenseReport& rep = cert.report;
  rep.n = n;
  rep.c = c;
  rep.in_regime = n >= 50 * c && n >= 50 * p.k && n >= c && 4 * g.size() >= (n - c) * (n - c);

  // G' first, then F by continuing the 2n/5 peel from G'. Peeling to a fixed
  // threshold has a unique end result, so this F is the same set a direct
  // 2n/5 peel of G gives, and F ⊆ G' holds by construction.
  cert.gprime_trace = peel(g, Threshold::eleven_c(c));
  cert.f_trace = peel(g, Threshold::two_fifths(n), cert.gprime_trace.survivors);
  cert.gprime = cert.gprime_trace.survivors;
  cert.f = cert.f_trace.survivors;

  if (auto odd = find_odd_cycle(g, cert.f)) {
    out.odd_cycle = std::move(odd);
    out.diagnostic = "F is not bipartite";
    return out;
  }
  auto gbip = is_bipartite(g, cert.gprime);
  if (!gbip) {
    out.odd_cycle = find_odd_cycle(g, cert.gprime);
    out.diagnostic = "G' is not bipartite";
    return out;
  }
  cert.gprime_bip = std::move(*gbip);
  cert.f_bip = restrict_bipartition(cert.gprime_bip, cert.f);

  rep.f_order = cert.f.size();
  rep.gprime_order = cert.gprime.size();
  rep.f_min_degree = min_degree_within(g, cert.f);
  rep.gprime_min_degree = min_degree_within(g, cert.gprime);
  rep.f_order_ok = rep.f_order + 10 * c >= n;
  rep.f_degree_ok = !cert.f.empty() && 5 * rep.f_min_degree > 2 * n;
  rep.gprime_order_ok = rep.gprime_order + 2 * c >= n;
  rep.gprime_degree_ok = !cert.gprime.empty() && rep.gprime_min_degree >= 11 * c;
  rep.f_bipartite = bipartition_matches(g, cert.f, cert.f_bip);
  rep.gprime_bipartite = bipartition_matches(g, cert.gprime, cert.gprime_bip);
  rep.f_2connected = is_2_connected(g, cert.f);
  rep.gprime_2connected = is_2_connected(g, cert.gprime);
  rep.f_subset_of_gprime = std::includes(cert.gprime.begin(), cert.gprime.end(), cert.f.begin(), cert.f.end());

  // Every vertex of G' \ F should see at least c vertices of F, all on the
  // opposite side; that is what places it in V_1 or V_2.
  auto in_f = membership(n, cert.f);
  for (Vertex v : cert.gprime) {
    if (in_f[v]) continue;
    if (degree_within(g, v, in_f) < c) ++rep.attachment_violations;
  }
  if (cert.gprime.empty()) out.diagnostic = "G' is empty";
  out.certificate = std::move(cert);
  return out;
}

// ---------------------------------------------------------------------------
// k-dense verification

std::vector<std::size_t> required_orders(std::size_t k, bool same_part, PathRange range) {
  std::vector<std::size_t> orders;
  const std::size_t lowest = same_part ? (range == PathRange::definition ? 5 : 3)
                                       : (range == PathRange::definition ? 6 : 4);
  const std::size_t highest = same_part ? 2 * k + 1 : 2 * k + 2;
  for (std::size_t h = lowest; h <= highest; h += 2) orders.push_back(h);
  return orders;
}

std::optional<PathWitness> route_dense_path(const Graph& g, const Bipartition& bip, const GreedyAnchor& anchor,
                                            Vertex u, Vertex v, std::size_t order,
                                            const std::vector<char>* forbidden) {
  if (u == v || order < 2 || anchor.bip == nullptr) return std::nullopt;
  auto host = membership(g.order(), anchor.set);
  std::vector<char> used = forbidden != nullptr ? *forbidden : std::vector<char>(g.order(), 0);
  used[u] = 1;
  used[v] = 1;

  auto step_in = [&](Vertex from) -> Vertex {
    for (Vertex w : g.neighbors(from))
      if (host[w] && !used[w] && anchor.bip->contains(w) && bip.contains(w)) return w;
    return -1;
  };
  std::vector<Vertex> head{u};
  std::vector<Vertex> tail{v};
  if (!host[u]) {
    Vertex w = step_in(u);
    if (w < 0) return std::nullopt;
    used[w] = 1;
    head.push_back(w);
  }
  if (!host[v]) {
    Vertex w = step_in(v);
    if (w < 0) return std::nullopt;
    used[w] = 1;
    tail.push_back(w);
  }
  const std::size_t steps = (head.size() - 1) + (tail.size() - 1);
  if (order < steps + 2) return std::nullopt;
  const std::size_t inner_order = order - steps;
  const Vertex a = head.back();
  const Vertex b = tail.back();

  std::vector<Vertex> middle;
  if (inner_order == 2) {
    if (!g.adjacent(a, b)) return std::nullopt;
    middle = {a, b};
  } else {
    auto inner = try_greedy_bipartite_path(g, *anchor.bip, a, b, inner_order, &used);
    if (!inner) return std::nullopt;
    middle = std::move(inner->vertices);
  }
  PathWitness path;
  path.vertices.assign(head.begin(), head.end() - 1);
  path.vertices.insert(path.vertices.end(), middle.begin(), middle.end());
  path.vertices.insert(path.vertices.end(), tail.rbegin() + 1, tail.rend());
  return path;
}

KDenseReport verify_k_dense(const Graph& g, const VertexSet& sub, const Bipartition& bip, std::size_t k,
                            const KDenseMode& mode, const GreedyAnchor* anchor) {
  KDenseReport rep;
  rep.bipartite = bipartition_matches(g, sub, bip);
  rep.two_connected = is_2_connected(g, sub);
  if (!rep.bipartite || sub.size() < 2) return rep;
  auto in_sub = membership(g.order(), sub);

  auto check_pair = [&](Vertex u, Vertex v, auto&& find) {
    const bool same = bip.part_of[u] == bip.part_of[v];
    ++rep.pairs_checked;
    for (std::size_t h : required_orders(k, same)) {
      ++rep.paths_checked;
      std::string reason;
      std::optional<PathWitness> path = find(u, v, h, reason);
      bool ok = path && path->order() == h && path->vertices.front() == u && path->vertices.back() == v &&
                verify_path(g, *path) &&
                std::all_of(path->vertices.begin(), path->vertices.end(), [&](Vertex x) { return in_sub[x] != 0; });
      if (!ok) rep.failures.push_back({u, v, h, same ? 'b' : 'c', reason.empty() ? "invalid path" : reason});
    }
  };

  if (mode.kind == KDenseMode::Kind::exact) {
    auto find = [&](Vertex u, Vertex v, std::size_t h, std::string& reason) -> std::optional<PathWitness> {
      auto s = find_path_exact(g, in_sub, u, v, h, mode.budget);
      if (s.status == SearchStatus::budget_exhausted) reason = "budget exhausted";
      if (s.status == SearchStatus::none) reason = "no path of this order";
      return s.witness;
    };
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j) check_pair(sub[i], sub[j], find);
    return rep;
  }

  GreedyAnchor self{sub, &bip};
  const GreedyAnchor& host = anchor != nullptr ? *anchor : self;
  rep.degree_hypothesis = !host.set.empty() && 5 * min_degree_within(g, host.set) > 2 * host.set.size();
  auto find = [&](Vertex u, Vertex v, std::size_t h, std::string& reason) -> std::optional<PathWitness> {
    auto path = route_dense_path(g, bip, host, u, v, h);
    if (!path) reason = "greedy choice set emptied";
    return path;
  };
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<std::size_t> pick(0, sub.size() - 1);
  for (std::size_t i = 0; i < mode.pairs; ++i) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    while (b == a) b = pick(rng);
    check_pair(sub[a], sub[b], find);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bad paths

VertexSet containing_block(const Graph& g, const VertexSet& gprime) {
  auto in = membership(g.order(), gprime);
  for (Vertex u : gprime)
    for (Vertex w : g.neighbors(u))
      if (in[w]) {
        auto d = blocks(g);
        return d.blocks[d.block_of_edge(u, w)];
      }
  return {};
}

bool is_bad_path(const Graph& g, const VertexSet& gprime, const Bipartition& bip, const PathWitness& path) {
  if (path.order() < 3 || !verify_path(g, path)) return false;
  auto in = membership(g.order(), gprime);
  const Vertex u = path.vertices.front();
  const Vertex v = path.vertices.back();
  if (!in[u] || !in[v] || !bip.contains(u) || !bip.contains(v)) return false;
  for (std::size_t i = 1; i + 1 < path.order(); ++i)
    if (in[path.vertices[i]]) return false;
  return (bip.part_of[u] + bip.part_of[v] + path.length()) % 2 == 1;
}

BadPathSearch find_bad_path(const Graph& g, const VertexSet& gprime, const Bipartition& bip, std::uint64_t budget) {
  require(bipartition_matches(g, gprime, bip), ErrorCode::precondition_violation,
          "find_bad_path: G' is not properly 2-colored by the given bipartition");
  require(is_2_connected(g, gprime), ErrorCode::precondition_violation, "find_bad_path: G' is not 2-connected");

  BadPathSearch result;
  const VertexSet block = containing_block(g, gprime);
  result.block_bipartite = is_bipartite(g, block).has_value();
  if (result.block_bipartite) return result;

  const std::size_t n = g.order();
  auto in_g = membership(n, gprime);
  std::vector<char> outside(n, 0);
  std::size_t outside_count = 0;
  for (Vertex x : block)
    if (!in_g[x]) {
      outside[x] = 1;
      ++outside_count;
    }
  auto bad_end = [&](Vertex u, Vertex y, std::size_t length) {
    return y != u && (bip.part_of[u] + bip.part_of[y] + length) % 2 == 1;
  };

  // Shortest bad walk per source by BFS over (vertex, parity) states. It is a
  // lower bound for bad paths from that source and, when simple, a path.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> walk_bound(n, kInf);
  std::size_t best = kInf;
  std::optional<PathWitness> best_walk;
  std::vector<int> dist(2 * n);
  std::vector<int> parent(2 * n);
  for (Vertex u : gprime) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue;
    for (Vertex x : g.neighbors(u))
      if (outside[x]) {
        int s = 2 * x + 1;
        dist[s] = 1;
        parent[s] = -1;
        queue.push_back(s);
      }
    int hit_state = -1;
    Vertex hit_end = -1;
    while (!queue.empty() && hit_state < 0) {
      int s = queue.front();
      queue.pop_front();
      Vertex x = s / 2;
      for (Vertex y : g.neighbors(x)) {
        if (in_g[y]) {
          if (bad_end(u, y, static_cast<std::size_t>(dist[s]) + 1)) {
            hit_state = s;
            hit_end = y;
            break;
          }
        } else if (outside[y]) {
          int t = 2 * y + (dist[s] + 1) % 2;
          if (dist[t] < 0) {
            dist[t] = dist[s] + 1;
            parent[t] = s;
            queue.push_back(t);
          }
        }
      }
    }
    if (hit_state < 0) continue;
    const std::size_t length = static_cast<std::size_t>(dist[hit_state]) + 1;
    walk_bound[u] = length;
    if (length < best) {
      best = length;
      PathWitness walk;
      walk.vertices.push_back(hit_end);
      for (int s = hit_state; s >= 0; s = parent[s]) walk.vertices.push_back(s / 2);
      walk.vertices.push_back(u);
      std::reverse(walk.vertices.begin(), walk.vertices.end());
      best_walk = std::move(walk);
    }
  }
  if (!best_walk) {
    result.status = SearchStatus::none;
    return result;
  }
  {
    VertexSet seen = best_walk->vertices;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) == seen.end()) {
      result.path = std::move(best_walk);
      result.status = SearchStatus::found;
      return result;
    }
  }

  // The shortest walk repeats a vertex. Deepen over exact path lengths with
  // a DFS whose interior stays outside G', pruned by distance back to G'.
  std::vector<int> to_g(n, -1);
  {
    std::deque<Vertex> queue;
    for (Vertex x : block)
      if (outside[x])
        for (Vertex y : g.neighbors(x))
          if (in_g[y]) {
            to_g[x] = 1;
            queue.push_back(x);
            break;
          }
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x))
        if (outside[y] && to_g[y] < 0) {
          to_g[y] = to_g[x] + 1;
          queue.push_back(y);
        }
    }
  }
  std::vector<char> on_path(n, 0);
  for (std::size_t length = best; length <= outside_count + 1; ++length) {
    for (Vertex u : gprime) {
      if (walk_bound[u] > length) continue;
      std::vector<Vertex> path{u};
      std::vector<std::size_t> cursor{0};
      on_path[u] = 1;
      bool found = false;
      while (!path.empty() && !found) {
        Vertex cur = path.back();
        const std::size_t edges = path.size() - 1;
        auto nbrs = g.neighbors(cur);
        std::size_t& next = cursor.back();
        bool pushed = false;
        if (edges + 1 == length && path.size() > 1) {
          for (; next < nbrs.size(); ++next) {
            Vertex y = nbrs[next];
            if (in_g[y] && bad_end(u, y, length)) {
              path.push_back(y);
              found = true;
              break;
            }
          }
          if (found) break;
        } else if (edges + 1 < length) {
          while (next < nbrs.size()) {
            Vertex w = nbrs[next++];
            if (!outside[w] || on_path[w] || to_g[w] < 0) continue;
            if (static_cast<std::size_t>(to_g[w]) > length - edges - 1) continue;
            if (budget == 0) {
              result.status = SearchStatus::budget_exhausted;
              for (Vertex x : path) on_path[x] = 0;
              return result;
            }
            --budget;
            on_path[w] = 1;
            path.push_back(w);
            cursor.push_back(0);
            pushed = true;
            break;
          }
        }
        if (pushed) continue;
        on_path[cur] = 0;
        path.pop_back();
        cursor.pop_back();
      }
      for (Vertex x : path) on_path[x] = 0;
      if (found) {
        result.path = PathWitness{path};
        result.status = SearchStatus::found;
        require(is_bad_path(g, gprime, bip, *result.path), ErrorCode::construction_failure,
                "find_bad_path: produced path fails the parity check");
        return result;
      }
    }
  }
  result.status = SearchStatus::none;
  return result;
}

// ---------------------------------------------------------------------------
// Suspension-family certificates

GnrCertificate gnr_certificate(const Graph& g) {
  const std::size_t n = g.order();
  GnrCertificate cert;
  const auto d = blocks(g);
  const std::size_t nb = d.block_count();

  std::vector<char> bip_block(nb, 0);
  for (std::size_t b = 0; b < nb; ++b) bip_block[b] = is_bipartite(g, d.blocks[b]).has_value();

  // Groups of bipartite blocks glued at shared cut vertices.
  std::vector<std::size_t> root(nb);
  std::iota(root.begin(), root.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return root[x] == x ? x : root[x] = find(root[x]);
  };
  for (std::size_t v = 0; v < n; ++v) {
    int first = -1;
    for (int b : d.blocks_of[v]) {
      if (!bip_block[b]) continue;
      if (first < 0) {
        first = b;
      } else {
        root[find(b)] = find(first);
      }
    }
  }
  std::vector<VertexSet> group_vertices(nb);
  for (std::size_t b = 0; b < nb; ++b)
    if (bip_block[b]) {
      auto& gv = group_vertices[find(b)];
      gv.insert(gv.end(), d.blocks[b].begin(), d.blocks[b].end());
    }
  for (auto& gv : group_vertices) {
    std::sort(gv.begin(), gv.end());
    gv.erase(std::unique(gv.begin(), gv.end()), gv.end());
  }

  std::vector<int> component_of(n, -1);
  const auto components = connected_components(g);
  for (std::size_t i = 0; i < components.size(); ++i)
    for (Vertex v : components[i]) component_of[v] = static_cast<int>(i);

  // Per component keep the largest group; ties go to the group whose blocks
  // come first.
  std::vector<int> chosen(components.size(), -1);
  for (std::size_t b = 0; b < nb; ++b) {
    if (!bip_block[b] || find(b) != b) continue;
    const int comp = component_of[group_vertices[b].front()];
    if (chosen[comp] < 0 || group_vertices[b].size() > group_vertices[chosen[comp]].size())
      chosen[comp] = static_cast<int>(b);
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (chosen[i] >= 0) {
      cert.core.insert(cert.core.end(), group_vertices[chosen[i]].begin(), group_vertices[chosen[i]].end());
    } else {
      cert.core.push_back(components[i].front());
    }
  }
  std::sort(cert.core.begin(), cert.core.end());
  auto core_bip = is_bipartite(g, cert.core);
  require(core_bip.has_value(), ErrorCode::construction_failure, "gnr_certificate: chosen core is not bipartite");
  cert.core_bip = std::move(*core_bip);

  auto in_core = membership(n, cert.core);
  VertexSet rest;
  for (std::size_t v = 0; v < n; ++v)
    if (!in_core[v]) rest.push_back(static_cast<Vertex>(v));
  for (VertexSet& piece : connected_components(g, rest)) {
    Vertex attach = -1;
    for (Vertex v : piece)
      for (Vertex w : g.neighbors(v))
        if (in_core[w]) {
          require(attach < 0 || attach == w, ErrorCode::construction_failure,
                  "gnr_certificate: a piece touches the core at two vertices");
          attach = w;
        }
    require(attach >= 0, ErrorCode::construction_failure, "gnr_certificate: a piece does not touch the core");
    cert.outside_count += piece.size();
    cert.pieces.push_back({std::move(piece), attach});
  }

  // 2-color the core, then give each piece the palette {0, 1} plus
  // |outside| - 1 fresh colors. A piece vertex has at most |outside| colored
  // neighbors, so greedy never runs out.
  cert.coloring.assign(n, -1);
  for (Vertex v : cert.core) cert.coloring[v] = cert.core_bip.part_of[v];
  int fresh = 2;
  for (const auto& piece : cert.pieces) {
    std::vector<int> palette{0, 1};
    for (std::size_t i = 1; i < piece.outside.size(); ++i) palette.push_back(fresh++);
    for (Vertex v : piece.outside) {
      std::set<int> taken;
      for (Vertex w : g.neighbors(v))
        if (cert.coloring[w] >= 0) taken.insert(cert.coloring[w]);
      for (int col : palette)
        if (!taken.count(col)) {
          cert.coloring[v] = col;
          break;
        }
      require(cert.coloring[v] >= 0, ErrorCode::construction_failure, "gnr_certificate: piece palette exhausted");
    }
  }
  std::set<int> used(cert.coloring.begin(), cert.coloring.end());
  cert.colors_used = used.size();
  return cert;
}

std::size_t gnr_index(const Graph& g) { return gnr_certificate(g).outside_count; }

std::optional<GnrCertificate> gnr_certify(const Graph& g, std::size_t r) {
  auto cert = gnr_certificate(g);
  if (r < 2 || cert.outside_count + 2 > r) return std::nullopt;
  return cert;
}

bool verify_gnr_certificate(const Graph& g, const GnrCertificate& cert) {
  const std::size_t n = g.order();
  if (!std::is_sorted(cert.core.begin(), cert.core.end())) return false;
  if (!bipartition_matches(g, cert.core, cert.core_bip) || cert.core_bip.covered() != cert.core.size()) return false;
  std::vector<int> owner(n, -1);
  for (Vertex v : cert.core) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || owner[v] != -1) return false;
    owner[v] = -2;
  }
  std::size_t outside = 0;
  for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
    for (Vertex v : cert.pieces[i].outside) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || owner[v] != -1) return false;
      owner[v] = static_cast<int>(i);
    }
    outside += cert.pieces[i].outside.size();
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
  if (outside != cert.outside_count) return false;
  for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
    const auto& piece = cert.pieces[i];
    if (piece.attach < 0 || static_cast<std::size_t>(piece.attach) >= n || owner[piece.attach] != -2) return false;
    if (connected_components(g, piece.outside).size() != 1) return false;
    bool touches = false;
    for (Vertex v : piece.outside)
      for (Vertex w : g.neighbors(v)) {
        if (owner[w] == static_cast<int>(i)) continue;
        if (w != piece.attach) return false;
        touches = true;
      }
    if (!touches) return false;
  }
  if (cert.coloring.size() != n) return false;
  for (const Edge& e : g.edges())
    if (cert.coloring[e.u] == cert.coloring[e.v] || cert.coloring[e.u] < 0) return false;
  std::set<int> used(cert.coloring.begin(), cert.coloring.end());
  if (used.count(-1) || used.size() != cert.colors_used) return false;
  return cert.colors_used <= std::max<std::size_t>(2, cert.outside_count + 1);
}

bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  if (g.order() != h.order() || g.size() != h.size() || map.size() != g.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (Vertex x : map) {
    if (x < 0 || static_cast<std::size_t>(x) >= h.order() || hit[x]) return false;
    hit[x] = 1;
  }
  for (const Edge& e : g.edges())
    if (!h.adjacent(map[e.u], map[e.v])) return false;
  return true;
}

std::optional<ExtremalIsomorphism> match_extremal_suspension(const Graph& g, std::size_t r) {
  const std::size_t n = g.order();
  if (r < 2 || n < r + 2 || g.size() != extremal_suspension_edge_count(n, r)) return std::nullopt;
  const auto d = blocks(g);
  if (d.block_count() != 2 || d.cut_vertices.size() != 1) return std::nullopt;
  const std::size_t big_n = n - r + 1;
  const Vertex cut = d.cut_vertices.front();

  auto edges_within = [&](const VertexSet& set) {
    auto mask = membership(n, set);
    std::size_t twice = 0;
    for (Vertex v : set) twice += degree_within(g, v, mask);
    return twice / 2;
  };
  for (int clique_index = 0; clique_index < 2; ++clique_index) {
    const VertexSet& clique = d.blocks[clique_index];
    const VertexSet& core = d.blocks[1 - clique_index];
    if (clique.size() != r || core.size() != big_n) continue;
    if (edges_within(clique) != r * (r - 1) / 2) continue;
    auto bip = is_bipartite(g, core);
    if (!bip) continue;
    const std::size_t hi = (big_n + 1) / 2;
    const std::size_t lo = big_n / 2;
    if (edges_within(core) != hi * lo) continue;
    int larger = bip->parts[0].size() >= bip->parts[1].size() ? 0 : 1;
    if (bip->parts[larger].size() != hi) continue;
    // With equal parts the clique sits on the first part of the template.
    if (hi == lo) larger = bip->part_of[cut];
    if (hi != lo && bip->part_of[cut] == larger) continue;

    std::vector<Vertex> map(n, -1);
    auto place = [&](const VertexSet& part, Vertex first) {
      Vertex next = first;
      if (std::binary_search(part.begin(), part.end(), cut)) map[cut] = next++;
      for (Vertex v : part)
        if (v != cut) map[v] = next++;
    };
    place(bip->parts[larger], 0);
    place(bip->parts[1 - larger], static_cast<Vertex>(hi));
    Vertex next = static_cast<Vertex>(big_n);
    for (Vertex v : clique)
      if (v != cut) map[v] = next++;
    ExtremalIsomorphism iso{n, r, std::move(map)};
    if (verify_isomorphism(g, extremal_suspension(n, r), iso.map)) return iso;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Pipeline

const char* to_string(OutcomeKind kind) noexcept {
  switch (kind) {
    case OutcomeKind::cycle_found: return "CycleFound";
    case OutcomeKind::gnr_member: return "GnrMember";
    case OutcomeKind::extremal_match: return "ExtremalMatch";
    case OutcomeKind::undecided: return "Undecided";
  }
  return "Unknown";
}

StabilityOutcome stability_decompose(const Graph& g, const AnalysisParams& p, std::uint64_t budget) {
  p.validate();
  require(p.r >= 3 && p.r <= 2 * p.k, ErrorCode::invalid_parameter, "stability_decompose needs 3 <= r <= 2k");
  const std::size_t n = g.order();
  const std::size_t length = 2 * p.k + 1;
  StabilityOutcome out;
  if (n + 1 >= p.r) {
    const std::size_t side = n + 1 - p.r;
    out.edge_regime = g.size() >= side * side / 4 + p.r * (p.r - 1) / 2;
  }
  out.order_regime = n >= 100 * p.k;

  auto found_cycle = [&](CycleWitness cycle, const std::string& how) {
    require(verify_cycle(g, cycle, length), ErrorCode::construction_failure,
            "stability_decompose: cycle witness failed verification");
    out.kind = OutcomeKind::cycle_found;
    out.cycle = std::move(cycle);
    out.trail.push_back(how);
    return out;
  };

  auto certify = [&]() -> StabilityOutcome {
    GnrCertificate cert = gnr_certificate(g);
    out.trail.push_back("core-of-blocks certificate: outside count " + str(cert.outside_count));
    if (cert.outside_count + 2 <= p.r) {
      out.kind = OutcomeKind::gnr_member;
      out.gnr = std::move(cert);
      return out;
    }
    if (cert.outside_count + 1 == p.r) {
      if (auto iso = match_extremal_suspension(g, p.r)) {
        out.kind = OutcomeKind::extremal_match;
        out.isomorphism = std::move(iso);
        out.gnr = std::move(cert);
        return out;
      }
      out.trail.push_back("outside count r-1 but not isomorphic to the extremal suspension");
    }
    auto search = find_cycle_exact(g, length, budget);
    if (search.status == SearchStatus::found) return found_cycle(*search.witness, "exact cycle search");
    out.trail.push_back(std::string("exact cycle search: ") + to_string(search.status));
    out.kind = OutcomeKind::undecided;
    out.diagnostic = "outside count " + str(cert.outside_count) + " exceeds r-2 = " + str(p.r - 2) +
                     " and no C_" + str(length) + " was produced";
    return out;
  };

  DenseExtraction ext = extract_dense_pair(g, p);
  if (!ext.ok()) {
    out.trail.push_back("dense pair: " + ext.diagnostic);
    if (ext.odd_cycle) {
      const auto& cyc = ext.odd_cycle->vertices;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Vertex a = cyc[i];
        Vertex b = cyc[(i + 1) % cyc.size()];
        auto s = find_cycle_through_edge(g, a, b, length, budget);
        if (s.status == SearchStatus::found)
          return found_cycle(*s.witness, "cycle through an edge of the odd cycle in the peeled remnant");
      }
      out.trail.push_back("no C_" + str(length) + " through the remnant's odd cycle");
    }
    return certify();
  }
  const DenseCertificate& cert = *ext.certificate;
  out.dense = cert.report;
  if (cert.gprime.empty() || !is_2_connected(g, cert.gprime)) {
    out.trail.push_back(cert.gprime.empty() ? "G' is empty" : "G' is not 2-connected");
    return certify();
  }
  const VertexSet block = containing_block(g, cert.gprime);
  if (is_bipartite(g, block)) {
    out.trail.push_back("block containing G' is bipartite");
    return certify();
  }
  out.trail.push_back("block containing G' is not bipartite");
  BadPathSearch bad = find_bad_path(g, cert.gprime, cert.gprime_bip, budget);
  if (!bad.path) {
    out.trail.push_back(std::string("bad path search: ") + to_string(bad.status));
    return certify();
  }
  out.bad_path = bad.path;
  const auto& bp = bad.path->vertices;
  const std::size_t h = bp.size();
  out.trail.push_back("shortest bad path of order " + str(h));
  if (h + 1 <= 2 * p.k + 1) {
    const std::size_t closing = 2 * p.k + 3 - h;
    std::vector<char> forbidden(n, 0);
    for (std::size_t i = 1; i + 1 < h; ++i) forbidden[bp[i]] = 1;
    GreedyAnchor anchor{cert.f, &cert.f_bip};
    auto q = route_dense_path(g, cert.gprime_bip, anchor, bp.back(), bp.front(), closing, &forbidden);
    if (!q) {
      auto mask = membership(n, cert.gprime);
      q = find_path_exact(g, mask, bp.back(), bp.front(), closing, budget).witness;
    }
    if (q) {
      CycleWitness cycle{bp};
      cycle.vertices.insert(cycle.vertices.end(), q->vertices.begin() + 1, q->vertices.end() - 1);
      if (verify_cycle(g, cycle, length)) return found_cycle(cycle, "bad path closed through G'");
    }
    out.trail.push_back("no closing path of order " + str(closing) + " through G'");
  } else {
    out.trail.push_back("bad path too long to close into C_" + str(length));
  }
  return certify();
}

}  // namespace oddcycle
