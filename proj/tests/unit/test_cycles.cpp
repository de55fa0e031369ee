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
#include "oddcycle/io.hpp"
#include "oddcycle/oracle.hpp"
#include "oddcycle/structure.hpp"

using namespace oddcycle;
using namespace testing;

TEST_CASE("exact cycle search on small cases") {
  CHECK(find_cycle_exact(turan(6, 2), 5).status == SearchStatus::none);
  auto c7 = find_cycle_exact(cycle(7), 7);
  REQUIRE(c7.status == SearchStatus::found);
  CHECK(verify_cycle(cycle(7), *c7.witness, 7));

  const Graph plus = with_edges(turan(6, 2), {{0, 1}});
  auto five = find_cycle_exact(plus, 5);
  REQUIRE(five.witness);
  CHECK(verify_cycle(plus, *five.witness, 5));
  auto through = find_cycle_through_edge(plus, 0, 1, 5);
  REQUIRE(through.witness);
  CHECK(verify_cycle(plus, *through.witness, 5));
}

TEST_CASE("budget exhaustion is reported, not guessed") {
  auto s = find_cycle_exact(complete(14), 13, 5);
  CHECK(s.status == SearchStatus::budget_exhausted);
  CHECK(std::string(to_string(s.status)) == "budget-exhausted");
}

TEST_CASE("witness checkers") {
  const Graph p = parse_graph6("IheA@GUAo");
  auto five = find_cycle_exact(p, 5);
  REQUIRE(five.witness);
  CHECK(verify_cycle(p, *five.witness, 5));
  CHECK_FALSE(verify_cycle(cycle(5), CycleWitness{{0, 1, 2, 3, 3}}, 5));
  CHECK_FALSE(verify_cycle(cycle(6), CycleWitness{{0, 1, 2, 3, 5}}, 5));
  CHECK_FALSE(verify_cycle(cycle(5), CycleWitness{{0, 1, 2, 3, 4}}, 4));
  CHECK(verify_path(path(4), PathWitness{{0, 1, 2, 3}}));
  CHECK_FALSE(verify_path(path(4), PathWitness{{0, 2, 3}}));
  CHECK_FALSE(verify_path(path(4), PathWitness{{0, 1, 0}}));
}

TEST_CASE("greedy bipartite paths") {
  auto bip44 = *is_bipartite(biclique(4, 4));
  auto p = greedy_bipartite_path(biclique(4, 4), bip44, 0, 1, 3);
  CHECK(p.order() == 3);
  CHECK(p.vertices.front() == 0);
  CHECK(p.vertices.back() == 1);
  CHECK(verify_path(biclique(4, 4), p));

  auto bip55 = *is_bipartite(biclique(5, 5));
  auto q = greedy_bipartite_path(biclique(5, 5), bip55, 0, 7, 6);
  CHECK(q.order() == 6);
  CHECK(verify_path(biclique(5, 5), q));

  const Graph t = turan(500, 2);
  auto bip = *is_bipartite(t);
  for (std::size_t h = 3; h <= 21; h += 2) {
    auto w = greedy_bipartite_path(t, bip, 0, 1, h);
    CHECK(w.order() == h);
    CHECK(verify_path(t, w));
  }
  CHECK_THROWS_AS(greedy_bipartite_path(t, bip, 0, 1, 4), Error);
}

TEST_CASE("girth and circumference") {
  CHECK(girth(cycle(6)) == std::optional<std::size_t>(6));
  CHECK_FALSE(girth(path(7)).has_value());
  CHECK(girth(complete(4)) == std::optional<std::size_t>(3));
  auto c = circumference_lower_bound(complete(4));
  CHECK(c.length == 4);
  CHECK(c.exact);
  CHECK(circumference_lower_bound(path(5)).length == 0);
  CHECK(girth(parse_graph6("IheA@GUAo")) == std::optional<std::size_t>(5));
  CHECK(circumference_lower_bound(parse_graph6("IheA@GUAo")).length == 9);
}

TEST_CASE("cycle length mask agrees with exact search up to 7 vertices") {
  for (int n = 3; n <= 7; ++n)
    enumerate_graphs(n, [&](const SmallGraph& sg) {
      const Graph g = sg.to_graph();
      const auto mask = cycle_length_mask(g);
      for (std::size_t L = 3; L <= static_cast<std::size_t>(n); ++L)
        CHECK(((mask >> L) & 1) == (find_cycle_exact(g, L).status == SearchStatus::found));
    });
}

// Properties over every graph with at most 8 vertices.
TEST_CASE("dense graphs contain all short cycles") {
  std::size_t tested = 0;
  for (int n = 3; n <= 8; ++n)
    enumerate_graphs(n, [&](const SmallGraph& sg) {
      if (sg.edge_count() < static_cast<std::size_t>(n * n / 4 + 1)) return;
      ++tested;
      const Graph g = sg.to_graph();
      for (std::size_t L = 3; L <= static_cast<std::size_t>((n + 3) / 2); ++L)
        CHECK(find_cycle_exact(g, L).status == SearchStatus::found);
    });
  CHECK(tested > 0);
}

TEST_CASE("many edges force a long cycle") {
  for (int n = 3; n <= 8; ++n)
    enumerate_graphs(n, [&](const SmallGraph& sg) {
      const Graph g = sg.to_graph();
      const auto circ = circumference_lower_bound(g);
      REQUIRE(circ.exact);
      for (std::size_t t = 2; t < static_cast<std::size_t>(n); ++t)
        if (2 * g.size() > t * static_cast<std::size_t>(n - 1)) CHECK(circ.length >= t + 1);
    });
}

TEST_CASE("high minimum degree gives cycles of every length from girth to circumference") {
  std::size_t tested = 0;
  for (int n = 3; n <= 8; ++n)
    enumerate_graphs(n, [&](const SmallGraph& sg) {
      const Graph g = sg.to_graph();
      if (3 * g.min_degree() < static_cast<std::size_t>(n + 2) || is_bipartite(g)) return;
      ++tested;
      const auto mask = cycle_length_mask(g);
      const std::size_t gir = *girth(g);
      const std::size_t circ = circumference_lower_bound(g).length;
      CHECK((gir == 3 || gir == 4));
      for (std::size_t L = gir; L <= circ; ++L) CHECK(((mask >> L) & 1) == 1);
    });
  CHECK(tested > 0);
}
