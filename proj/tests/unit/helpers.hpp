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

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oddcycle/graph.hpp"

namespace testing {

using oddcycle::Graph;
using oddcycle::GraphBuilder;
using oddcycle::Vertex;

inline Graph cycle(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return b.build();
}

inline Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return b.build();
}

inline Graph complete(std::size_t n) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  GraphBuilder b(n);
  b.add_clique(all);
  return b.build();
}

inline Graph biclique(std::size_t a, std::size_t b) {
  std::vector<Vertex> left(a), right(b);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), static_cast<Vertex>(a));
  GraphBuilder g(a + b);
  g.add_biclique(left, right);
  return g.build();
}

inline Graph with_edges(const Graph& g, std::initializer_list<std::pair<Vertex, Vertex>> extra, std::size_t n = 0) {
  GraphBuilder b(std::max(n, g.order()));
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  for (auto [u, v] : extra) b.add_edge(u, v);
  return b.build();
}

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return b.build();
}

inline nlohmann::json fixture(const std::string& name) {
  std::ifstream in(std::string(ODDCYCLE_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return nlohmann::json::parse(in);
}

}  // namespace testing
