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

#include "doctest.h"
#include "helpers.hpp"
#include "oddcycle/constructions.hpp"
#include "oddcycle/cycles.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/oracle.hpp"
#include "oddcycle/structure.hpp"

using namespace oddcycle;
using namespace testing;

TEST_CASE("builder merges duplicates and keeps rows sorted") {
  GraphBuilder b(4);
  b.add_edge(2, 0).add_edge(0, 2).add_edge(3, 1).add_edge(0, 1);
  const Graph g = b.build();
  CHECK(g.size() == 3);
  CHECK(g.neighbors(0).size() == 2);
  CHECK(g.neighbors(0)[0] == 1);
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(degree_sum_identity(g));
}

TEST_CASE("strict constructor rejects loops and repeats") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), Error);
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, twice), Error);
  const std::vector<Edge> far{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(3, far), Error);
}

TEST_CASE("is_bipartite on small cases") {
  auto c6 = is_bipartite(cycle(6));
  REQUIRE(c6);
  CHECK(c6->parts[0] == VertexSet{0, 2, 4});
  CHECK(c6->parts[1] == VertexSet{1, 3, 5});
  CHECK_FALSE(is_bipartite(cycle(5)));

  // T_{6,2} ∘ K_3 restricted to its bipartite block is K_{3,3}.
  const Graph g = extremal_suspension(8, 3);
  const auto dec = blocks(g);
  const VertexSet* big = nullptr;
  for (const auto& b : dec.blocks)
    if (b.size() == 6) big = &b;
  REQUIRE(big != nullptr);
  auto bip = is_bipartite(g, *big);
  REQUIRE(bip);
  CHECK(bip->parts[0].size() == 3);
  CHECK(bip->parts[1].size() == 3);
}

TEST_CASE("bipartiteness agrees with odd cycle witnesses on all graphs up to 7 vertices") {
  std::size_t checked = 0;
  for (int n = 1; n <= 7; ++n)
    enumerate_graphs(n, [&](const SmallGraph& sg) {
      const Graph g = sg.to_graph();
      const auto bip = is_bipartite(g);
      const auto odd = find_odd_cycle(g);
      CHECK(bip.has_value() != odd.has_value());
      if (bip) CHECK(is_valid_bipartition(g, *bip));
      if (odd) CHECK((odd->length() % 2 == 1 && verify_cycle(g, *odd, odd->length())));
      ++checked;
    });
  CHECK(checked == 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

TEST_CASE("block decompositions") {
  const auto t = blocks(extremal_suspension(8, 3));
  CHECK(t.block_count() == 2);
  CHECK(t.cut_vertices.size() == 1);

  const auto p = blocks(path(4));
  CHECK(p.block_count() == 3);
  CHECK(p.cut_vertices == VertexSet{1, 2});

  const auto c = blocks(cycle(5));
  CHECK(c.block_count() == 1);
  CHECK(c.cut_vertices.empty());
}

TEST_CASE("blocks partition the edges, also after deleting a vertex") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 64)(rng);
    const double p = std::uniform_real_distribution<double>(0.02, 0.3)(rng);
    const Graph g = random_graph(n, p, seed);
    const Vertex drop = static_cast<Vertex>(seed % n);
    const std::vector<Vertex> gone{drop};
    for (const Graph& h : {g, delete_vertices(g, gone).graph}) {
      const auto dec = blocks(h);
      std::vector<int> owners(h.size(), 0);
      std::size_t total = 0;
      for (const auto& b : dec.blocks) {
        auto in = membership(h.order(), b);
        for (Vertex v : b)
          for (Vertex w : h.neighbors(v))
            if (v < w && in[w]) ++total;
      }
      REQUIRE(total == h.size());
      for (const auto& e : h.edges()) CHECK(dec.block_of_edge(e.u, e.v) >= 0);
      // Two blocks meet in at most one vertex, and only at a cut vertex.
      for (std::size_t i = 0; i < dec.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < dec.blocks.size(); ++j) {
          VertexSet common;
          std::set_intersection(dec.blocks[i].begin(), dec.blocks[i].end(), dec.blocks[j].begin(),
                                dec.blocks[j].end(), std::back_inserter(common));
          REQUIRE(common.size() <= 1);
          if (!common.empty())
            CHECK(std::binary_search(dec.cut_vertices.begin(), dec.cut_vertices.end(), common[0]));
        }
    }
  }
}

TEST_CASE("2-connectivity") {
  CHECK(is_2_connected(biclique(3, 3)));
  GraphBuilder bowtie(5);
  bowtie.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2).add_edge(2, 3).add_edge(3, 4).add_edge(2, 4);
  CHECK_FALSE(is_2_connected(bowtie.build()));
  CHECK_FALSE(is_2_connected(path(2)));
}

TEST_CASE("induced subgraphs relabel compactly") {
  const std::vector<Vertex> three{0, 2, 3};
  auto k3 = induced_subgraph(complete(4), three);
  CHECK(k3.graph == complete(3));
  CHECK(k3.to_parent == std::vector<Vertex>{0, 2, 3});
  CHECK(k3.from_parent[1] == -1);

  const Graph c = cycle(6);
  auto same = induced_subgraph(c, all_vertices(6));
  CHECK(same.graph == c);

  const std::vector<Vertex> alternate{0, 2, 4};
  CHECK(induced_subgraph(c, alternate).graph.size() == 0);
}
