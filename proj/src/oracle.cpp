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

#include "oddcycle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>

#include "oddcycle/constructions.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/io.hpp"
#include "oddcycle/spectral.hpp"

namespace oddcycle {
namespace {

inline std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

template <class F>
void for_bits(std::uint32_t mask, F&& f) {
  for (; mask; mask &= mask - 1) f(std::countr_zero(mask));
}

// ---------------------------------------------------------------------------
// Canonical labeling

using Cells = std::vector<std::uint32_t>;  // ordered partition, one bitmask per cell

// Splits cells by neighbor counts into every other cell until nothing
// changes. Everything depends only on cell positions and counts, so the
// result commutes with relabeling.
void refine(const SmallGraph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const std::uint32_t splitter = cells[s];
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::uint32_t cell = cells[i];
        if (std::popcount(cell) == 1) continue;
        std::array<std::uint32_t, kMaxSmallOrder + 1> by_count{};
        int lo = 64, hi = -1;
        for_bits(cell, [&](int v) {
          int c = std::popcount(g.rows[v] & splitter);
          by_count[c] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) continue;
        Cells pieces;
        for (int c = lo; c <= hi; ++c)
          if (by_count[c]) pieces.push_back(by_count[c]);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
        i += pieces.size() - 1;
        changed = true;
      }
    }
  }
}

bool rows_less(const SmallGraph& a, const SmallGraph& b) {
  for (int i = 0; i < a.n; ++i)
    if (a.rows[i] != b.rows[i]) return a.rows[i] < b.rows[i];
  return false;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& lab) {
  std::array<int, kMaxSmallOrder> pos{};
  for (int i = 0; i < g.n; ++i) pos[lab[i]] = i;
  SmallGraph h;
  h.n = g.n;
  for (int i = 0; i < g.n; ++i) {
    std::uint32_t row = 0;
    for_bits(g.rows[lab[i]], [&](int w) { row |= bit(pos[w]); });
    h.rows[i] = row;
  }
  return h;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class CanonSearch {
 public:
  explicit CanonSearch(const SmallGraph& g) : g_(g) {}

  Canonical run() {
    Cells cells;
    if (g_.n > 0) cells.push_back(g_.n == 32 ? ~std::uint32_t{0} : bit(g_.n) - 1);
    std::vector<int> prefix;
    dfs(cells, prefix);

    Canonical out;
    out.form = best_;
    out.position.assign(g_.n, 0);
    for (int i = 0; i < g_.n; ++i) out.position[best_lab_[i]] = i;
    out.generators = gens_;
    UnionFind uf(g_.n);
    for (const auto& gamma : gens_)
      for (int v = 0; v < g_.n; ++v) uf.unite(v, gamma[v]);
    out.orbit.resize(g_.n);
    for (int v = 0; v < g_.n; ++v) out.orbit[v] = uf.find(v);
    return out;
  }

 private:
  void leaf(const Cells& cells) {
    std::vector<int> lab(g_.n);
    for (int i = 0; i < g_.n; ++i) lab[i] = std::countr_zero(cells[i]);
    SmallGraph h = relabel(g_, lab);
    if (!have_first_) {
      have_first_ = true;
      first_ = best_ = h;
      first_lab_ = best_lab_ = lab;
      return;
    }
    if (h == first_) {
      add_automorphism(first_lab_, lab);
    } else if (h == best_) {
      add_automorphism(best_lab_, lab);
    } else if (rows_less(best_, h)) {
      best_ = h;
      best_lab_ = lab;
    }
  }

  void add_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(g_.n);
    for (int i = 0; i < g_.n; ++i) gamma[from[i]] = to[i];
    bool identity = true;
    for (int v = 0; v < g_.n; ++v) identity = identity && gamma[v] == v;
    if (!identity) gens_.push_back(std::move(gamma));
  }

  // Orbit representative of v under the automorphisms found so far that fix
  // every vertex of the prefix.
  std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) const {
    UnionFind uf(g_.n);
    for (const auto& gamma : gens_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < g_.n; ++v) uf.unite(v, gamma[v]);
    }
    std::vector<int> rep(g_.n);
    for (int v = 0; v < g_.n; ++v) rep[v] = uf.find(v);
    return rep;
  }

  void dfs(Cells cells, std::vector<int>& prefix) {
    refine(g_, cells);
    if (static_cast<int>(cells.size()) == g_.n) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (std::popcount(cells[target]) == 1) ++target;
    const std::uint32_t cell = cells[target];
    std::vector<int> tried;
    for_bits(cell, [&](int v) {
      if (!tried.empty()) {
        auto rep = stabilizer_orbits(prefix);
        for (int w : tried)
          if (rep[w] == rep[v]) return;
      }
      tried.push_back(v);
      Cells child = cells;
      child[target] = cell & ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
      prefix.push_back(v);
      dfs(std::move(child), prefix);
      prefix.pop_back();
    });
  }

  const SmallGraph& g_;
  bool have_first_ = false;
  SmallGraph first_, best_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<std::vector<int>> gens_;
};

// Cycle of the given length through vertex v.
bool has_cycle_through(const SmallGraph& g, int v, std::size_t length) {
  if (static_cast<std::size_t>(g.n) < length) return false;
  const std::uint32_t home = g.rows[v];
  if (std::popcount(home) < 2) return false;
  // Paths v, p1, ..., p_{L-1} with p_{L-1} adjacent to v; p1 < p_{L-1}
  // halves the work since each cycle is seen in both directions.
  std::function<bool(int, std::uint32_t, std::size_t, int)> walk = [&](int cur, std::uint32_t used,
                                                                        std::size_t order, int first) -> bool {
    if (order == length) return (home & bit(cur)) && cur > first;
    bool hit = false;
    for_bits(g.rows[cur] & ~used, [&](int w) {
      if (!hit) hit = walk(w, used | bit(w), order + 1, first);
    });
    return hit;
  };
  bool hit = false;
  for_bits(home, [&](int p1) {
    if (!hit) hit = walk(p1, bit(v) | bit(p1), 2, p1);
  });
  return hit;
}

int vertex_invariant(const SmallGraph& g, int v) {
  int sum = 0;
  for_bits(g.rows[v], [&](int w) { sum += std::popcount(g.rows[w]); });
  return std::popcount(g.rows[v]) * 4096 + sum;
}

class Enumerator {
 public:
  Enumerator(int n, const std::function<void(const SmallGraph&)>& visit, const ClassFilter& filter)
      : n_(n), visit_(visit), filter_(filter) {}

  EnumerationStats run() {
    SmallGraph g;
    g.n = 1;
    if (n_ == 1) {
      if (!filter_ || filter_(g, 0)) emit(g);
      return stats_;
    }
    if (filter_ && !filter_(g, 0)) return stats_;
    extend(g, {});
    return stats_;
  }

 private:
  void emit(const SmallGraph& g) {
    ++stats_.emitted;
    visit_(g);
  }

  void extend(const SmallGraph& g, const std::vector<std::vector<int>>& gens) {
    const int k = g.n;
    const std::uint32_t count = std::uint32_t{1} << k;
    std::vector<char> seen(count, 0);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < count; ++s) {
      if (seen[s]) continue;
      // s is the smallest member of its orbit under Aut(g).
      seen[s] = 1;
      stack.assign(1, s);
      while (!stack.empty()) {
        std::uint32_t t = stack.back();
        stack.pop_back();
        for (const auto& gamma : gens) {
          std::uint32_t image = 0;
          for_bits(t, [&](int v) { image |= bit(gamma[v]); });
          if (!seen[image]) {
            seen[image] = 1;
            stack.push_back(image);
          }
        }
      }
      try_child(g, s);
    }
  }

  void try_child(const SmallGraph& g, std::uint32_t attach) {
    const int k = g.n;
    SmallGraph h = g;
    h.n = k + 1;
    h.rows[k] = attach;
    for_bits(attach, [&](int v) { h.rows[v] |= bit(k); });
    ++stats_.candidates;
    if (filter_ && !filter_(h, k)) return;

    // The canonical deletion vertex: largest invariant, ties broken by the
    // smallest canonical label. Accept iff the new vertex is in its orbit.
    std::array<int, kMaxSmallOrder> inv{};
    int top = -1;
    for (int v = 0; v <= k; ++v) {
      inv[v] = vertex_invariant(h, v);
      top = std::max(top, inv[v]);
    }
    if (inv[k] < top) return;
    int ties = 0;
    for (int v = 0; v <= k; ++v) ties += inv[v] == top;
    const bool last = k + 1 == n_;
    if (ties == 1 && last) {
      emit(h);
      return;
    }
    ++stats_.canon_calls;
    Canonical c = canonical_form(h);
    if (ties > 1) {
      int chosen = -1;
      for (int v = 0; v <= k; ++v)
        if (inv[v] == top && (chosen < 0 || c.position[v] < c.position[chosen])) chosen = v;
      if (c.orbit[chosen] != c.orbit[k]) return;
    }
    if (last) {
      emit(h);
    } else {
      extend(h, c.generators);
    }
  }

  int n_;
  const std::function<void(const SmallGraph&)>& visit_;
  const ClassFilter& filter_;
  EnumerationStats stats_;
};

// ---------------------------------------------------------------------------
// Coloring

struct ColorSearch {
  int n;
  std::vector<std::uint64_t> adj;
  std::vector<int> color;
  std::vector<int> best_color;
  int best = 0;
  int target = 0;  // stop once a coloring with <= target colors exists
  bool done = false;

  explicit ColorSearch(const Graph& g) : n(static_cast<int>(g.order())), adj(g.order(), 0), color(g.order(), -1) {
    for (const Edge& e : g.edges()) {
      adj[e.u] |= std::uint64_t{1} << e.v;
      adj[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  std::uint64_t neighbor_colors(int v) const {
    std::uint64_t m = 0;
    for (std::uint64_t b = adj[v]; b; b &= b - 1) {
      int w = std::countr_zero(b);
      if (color[w] >= 0) m |= std::uint64_t{1} << color[w];
    }
    return m;
  }

  int pick() const {
    int chosen = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      int sat = std::popcount(neighbor_colors(v));
      int deg = 0;
      for (std::uint64_t b = adj[v]; b; b &= b - 1)
        if (color[std::countr_zero(b)] < 0) ++deg;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        chosen = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return chosen;
  }

  int greedy() {
    std::fill(color.begin(), color.end(), -1);
    int used = 0;
    for (int i = 0; i < n; ++i) {
      int v = pick();
      std::uint64_t blocked = neighbor_colors(v);
      int c = std::countr_zero(~blocked);
      color[v] = c;
      used = std::max(used, c + 1);
    }
    best_color = color;
    std::fill(color.begin(), color.end(), -1);
    return used;
  }

  void search(int colored, int used) {
    if (done) return;
    if (colored == n) {
      best = used;
      best_color = color;
      if (best <= target) done = true;
      return;
    }
    int v = pick();
    std::uint64_t blocked = neighbor_colors(v);
    for (int c = 0; c <= used && c + 1 < best; ++c) {
      if (blocked >> c & 1) continue;
      color[v] = c;
      search(colored + 1, std::max(used, c + 1));
      color[v] = -1;
      if (done) return;
    }
  }
};

int greedy_clique(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    std::vector<Vertex> clique{static_cast<Vertex>(s)};
    for (Vertex w : g.neighbors(static_cast<Vertex>(s))) {
      bool ok = std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(c, w); });
      if (ok) clique.push_back(w);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

bool meets_chromatic(const Graph& g, std::size_t r) {
  if (r <= 1) return true;
  if (r == 2) return g.size() > 0;
  if (greedy_color_bound(g) < r) return false;
  return !is_colorable(g, r - 1);
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t SmallGraph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n; ++v) twice += std::popcount(rows[v]);
  return twice / 2;
}

Graph SmallGraph::to_graph() const {
  GraphBuilder b(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for_bits(rows[v], [&](int w) {
      if (v < w) b.add_edge(v, w);
    });
  return b.build();
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
  require(g.order() <= kMaxSmallOrder, ErrorCode::size_limit, "small graphs hold at most 32 vertices");
  SmallGraph s;
  s.n = static_cast<int>(g.order());
  for (const Edge& e : g.edges()) {
    s.rows[e.u] |= bit(e.v);
    s.rows[e.v] |= bit(e.u);
  }
  return s;
}

bool SmallGraph::operator==(const SmallGraph& o) const {
  if (n != o.n) return false;
  for (int i = 0; i < n; ++i)
    if (rows[i] != o.rows[i]) return false;
  return true;
}

Canonical canonical_form(const SmallGraph& g) { return CanonSearch(g).run(); }

std::string canonical_graph6(const Graph& g) {
  return to_graph6(canonical_form(SmallGraph::from_graph(g)).form.to_graph());
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(SmallGraph::from_graph(g)).form == canonical_form(SmallGraph::from_graph(h)).form;
}

ClassFilter cycle_free_filter(std::size_t length) {
  require(length >= 3, ErrorCode::invalid_parameter, "cycle length must be >= 3");
  return [length](const SmallGraph& g, int v) { return !has_cycle_through(g, v, length); };
}

EnumerationStats enumerate_graphs(int n, const std::function<void(const SmallGraph&)>& visit,
                                  const ClassFilter& filter) {
  require(n >= 1, ErrorCode::invalid_parameter, "enumerate_graphs needs n >= 1");
  require(n <= 10, ErrorCode::size_limit, "enumerate_graphs supports n <= 10");
  return Enumerator(n, visit, filter).run();
}

std::uint64_t count_unlabeled_graphs(int n) {
  require(n >= 0 && n <= 12, ErrorCode::size_limit, "count_unlabeled_graphs supports n <= 12");
  if (n <= 1) return 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Sum of 2^(cycles on unordered pairs) over S_n, divided by n!.
  long double total = 0;
  std::uint64_t count = 0;
  do {
    std::vector<int> cycle_of(n, -1);
    std::vector<int> lengths;
    for (int v = 0; v < n; ++v) {
      if (cycle_of[v] >= 0) continue;
      int len = 0;
      for (int w = v; cycle_of[w] < 0; w = perm[w]) {
        cycle_of[w] = static_cast<int>(lengths.size());
        ++len;
      }
      lengths.push_back(len);
    }
    std::uint64_t pair_cycles = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      pair_cycles += static_cast<std::uint64_t>(lengths[i] / 2);
      for (std::size_t j = i + 1; j < lengths.size(); ++j) pair_cycles += std::gcd(lengths[i], lengths[j]);
    }
    total += std::ldexp(1.0L, static_cast<int>(pair_cycles));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<std::uint64_t>(std::llround(total / static_cast<long double>(count)));
}

// ---------------------------------------------------------------------------

std::size_t greedy_color_bound(const Graph& g) {
  require(g.order() <= 64, ErrorCode::size_limit, "coloring supports n <= 64");
  ColorSearch s(g);
  return static_cast<std::size_t>(s.greedy());
}

Coloring chromatic_number(const Graph& g) {
  require(g.order() <= 40, ErrorCode::size_limit, "chromatic_number supports n <= 40");
  ColorSearch s(g);
  s.best = s.greedy();
  s.target = greedy_clique(g);
  if (s.best > s.target) s.search(0, 0);
  return {static_cast<std::size_t>(s.best), s.best_color};
}

bool is_colorable(const Graph& g, std::size_t k) {
  require(g.order() <= 64, ErrorCode::size_limit, "coloring supports n <= 64");
  if (g.order() == 0) return true;
  if (k == 0) return false;
  ColorSearch s(g);
  s.best = s.greedy();
  if (static_cast<std::size_t>(s.best) <= k) return true;
  s.target = static_cast<int>(k);
  s.best = static_cast<int>(k) + 1;  // only colorings with <= k colors are explored
  s.search(0, 0);
  return s.done;
}

// ---------------------------------------------------------------------------

namespace {

void finish(ExtremalRecord& rec, const std::vector<SmallGraph>& best) {
  for (const SmallGraph& g : best) rec.extremal.push_back(to_graph6(canonical_form(g).form.to_graph()));
  std::sort(rec.extremal.begin(), rec.extremal.end());
  rec.extremal.erase(std::unique(rec.extremal.begin(), rec.extremal.end()), rec.extremal.end());
}

ExtremalRecord edge_record(int n, std::size_t length, std::size_t r) {
  ExtremalRecord rec;
  rec.n = n;
  rec.cycle_length = length;
  rec.min_chromatic = r;
  rec.objective = "edges";
  std::size_t top = 0;
  std::vector<SmallGraph> best;
  enumerate_graphs(
      n,
      [&](const SmallGraph& g) {
        ++rec.enumerated;
        if (r > 0 && !meets_chromatic(g.to_graph(), r)) return;
        ++rec.qualifying;
        const std::size_t e = g.edge_count();
        if (!rec.feasible || e > top) {
          rec.feasible = true;
          top = e;
          best.assign(1, g);
        } else if (e == top) {
          best.push_back(g);
        }
      },
      cycle_free_filter(length));
  rec.optimum = static_cast<double>(top);
  finish(rec, best);
  return rec;
}

}  // namespace

ExtremalRecord ex_bruteforce(int n, std::size_t cycle_length) {
  require(n >= 1 && n <= 10, ErrorCode::size_limit, "ex_bruteforce supports 1 <= n <= 10");
  return edge_record(n, cycle_length, 0);
}

ExtremalRecord ex_chromatic_bruteforce(int n, std::size_t cycle_length, std::size_t r) {
  require(n >= 1 && n <= 9, ErrorCode::size_limit, "ex_chromatic_bruteforce supports 1 <= n <= 9");
  return edge_record(n, cycle_length, r);
}

ExtremalRecord spex_bruteforce(int n, std::size_t cycle_length, std::size_t r) {
  require(n >= 1 && n <= 9, ErrorCode::size_limit, "spex_bruteforce supports 1 <= n <= 9");
  ExtremalRecord rec;
  rec.n = n;
  rec.cycle_length = cycle_length;
  rec.min_chromatic = r;
  rec.objective = "lambda";
  double top = -1.0;
  std::vector<SmallGraph> best;
  enumerate_graphs(
      n,
      [&](const SmallGraph& g) {
        ++rec.enumerated;
        Graph h = g.to_graph();
        if (r > 0 && !meets_chromatic(h, r)) return;
        ++rec.qualifying;
        rec.feasible = true;
        // λ <= sqrt(2m) rules most graphs out without an eigen-solve.
        if (std::sqrt(2.0 * static_cast<double>(h.size())) < top - 1e-9) return;
        const double lambda = spectral_radius(h, 1e-12).lambda;
        if (lambda > top + 1e-9) {
          top = lambda;
          best.assign(1, g);
        } else if (lambda >= top - 1e-9) {
          best.push_back(g);
        }
      },
      cycle_free_filter(cycle_length));
  rec.optimum = std::max(top, 0.0);
  finish(rec, best);
  return rec;
}

// ---------------------------------------------------------------------------

namespace {

// u-v path of `order` vertices in g (bit rows), used to test whether adding
// the edge uv would close a cycle of length `order`.
bool has_path_of_order(const SmallGraph& g, int u, int v, std::size_t order) {
  std::function<bool(int, std::uint32_t, std::size_t)> walk = [&](int cur, std::uint32_t used,
                                                                  std::size_t size) -> bool {
    if (size + 1 == order) return (g.rows[cur] & bit(v)) != 0;
    bool hit = false;
    for_bits(g.rows[cur] & ~used & ~bit(v), [&](int w) {
      if (!hit) hit = walk(w, used | bit(w), size + 1);
    });
    return hit;
  };
  return walk(u, bit(u) | bit(v), 1);
}

}  // namespace

CounterexampleSearch counterexample_search_spectral(std::size_t n, std::size_t k, std::size_t r,
                                                    std::uint64_t budget, std::uint64_t seed) {
  require(k >= 1 && r >= 2 && n >= r + 2, ErrorCode::invalid_parameter,
          "counterexample search needs k >= 1, r >= 2, n >= r + 2");
  require(r <= 2 * k, ErrorCode::invalid_parameter, "counterexample search needs r <= 2k");
  require(n <= kMaxSmallOrder, ErrorCode::size_limit, "counterexample search supports n <= 32");
  const std::size_t length = 2 * k + 1;
  CounterexampleSearch out;
  out.target = lambda_extremal_quotient(n, r);
  std::mt19937_64 rng(seed);

  // Start from the extremal graph under a random relabeling with a fifth of
  // its edges dropped (keeping χ >= r), so the climb has somewhere to go.
  Graph base = extremal_suspension(n, r);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  SmallGraph cur;
  cur.n = static_cast<int>(n);
  for (const Edge& e : base.edges()) {
    cur.rows[perm[e.u]] |= bit(perm[e.v]);
    cur.rows[perm[e.v]] |= bit(perm[e.u]);
  }
  auto flip = [](SmallGraph& g, int u, int v) {
    g.rows[u] ^= bit(v);
    g.rows[v] ^= bit(u);
  };
  {
    auto edges = cur.to_graph().edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (std::size_t i = 0; i < edges.size() / 5; ++i) {
      flip(cur, edges[i].u, edges[i].v);
      if (!meets_chromatic(cur.to_graph(), r)) flip(cur, edges[i].u, edges[i].v);
    }
  }
  double lambda = spectral_radius(cur.to_graph()).lambda;
  out.best_lambda = lambda;

  std::deque<std::pair<int, int>> tabu;
  const std::size_t tabu_size = 2 * n;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> pick_other(0, static_cast<int>(n) - 2);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::uint64_t step = 0; step < budget; ++step) {
    int u = pick(rng), v = pick_other(rng);
    if (v >= u) ++v;
    if (u > v) std::swap(u, v);
    ++out.flips_tried;
    if (std::find(tabu.begin(), tabu.end(), std::make_pair(u, v)) != tabu.end()) continue;
    const bool adding = (cur.rows[u] & bit(v)) == 0;
    if (adding && has_path_of_order(cur, u, v, length)) continue;
    SmallGraph next = cur;
    flip(next, u, v);
    Graph h = next.to_graph();
    if (!adding && !meets_chromatic(h, r)) continue;
    const double candidate = spectral_radius(h).lambda;
    if (candidate < lambda && coin(rng) >= 0.02) continue;
    cur = next;
    lambda = candidate;
    ++out.flips_accepted;
    tabu.emplace_back(u, v);
    if (tabu.size() > tabu_size) tabu.pop_front();
    out.best_lambda = std::max(out.best_lambda, lambda);
    if (lambda > out.target + 1e-8) {
      out.counterexample = h;
      break;
    }
  }
  return out;
}

}  // namespace oddcycle
