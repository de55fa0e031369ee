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
#include "oddcycle/decompose.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/oracle.hpp"
#include "oddcycle/structure.hpp"

using namespace oddcycle;
using namespace testing;

TEST_CASE("turan graphs") {
  const Graph t52 = turan(5, 2);
  CHECK(t52.size() == 6);
  CHECK(are_isomorphic(t52, biclique(3, 2)));
  CHECK(turan_part_sizes(7, 3) == std::vector<std::size_t>{3, 2, 2});
  CHECK(turan(7, 3).size() == 16);
  CHECK(turan_edge_count(7, 3) == 16);
  CHECK(turan(4, 4) == complete(4));
  CHECK_THROWS_AS(turan(3, 0), Error);
}

TEST_CASE("extremal suspension edge counts") {
  CHECK(extremal_suspension(10, 3).size() == 19);
  CHECK(extremal_suspension(8, 3).size() == 12);
  CHECK(extremal_suspension(6, 3).size() == 7);
  for (std::size_t n = 6; n <= 40; ++n)
    for (std::size_t r = 3; r + 2 <= n && r <= 8; ++r) {
      const Graph g = extremal_suspension(n, r);
      CHECK(g.size() == (n - r + 1) * (n - r + 1) / 4 + r * (r - 1) / 2);
      CHECK(g.size() == extremal_suspension_edge_count(n, r));
      CHECK(degree_sum_identity(g));
      // The shared vertex lies on the smaller side of the bipartite block.
      const Vertex cut = extremal_suspension_cut_vertex(n, r);
      CHECK(g.degree(cut) == (n - r + 2) / 2 + r - 1);
    }
}

TEST_CASE("star suspension family") {
  const Graph g = star_suspension_family(5, 3);
  CHECK(g.size() == 5);
  GraphBuilder expected(5);
  expected.add_edge(0, 2).add_edge(0, 3).add_edge(1, 2).add_edge(1, 3).add_edge(0, 4);
  CHECK(are_isomorphic(g, expected.build()));
  // T_{n-r+2,2} ∘ K_{r-1}: for (8, 4) the bipartite block has 6 vertices.
  CHECK(are_isomorphic(star_suspension_family(8, 4), extremal_suspension(8, 3)));
  // A K_2 suspension is a pendant edge, which a minimal core swallows.
  for (std::size_t n = 8; n <= 20; n += 3) {
    CHECK(gnr_index(star_suspension_family(n, 3)) == 0);
    for (std::size_t r = 4; r <= 6; ++r) CHECK(gnr_index(star_suspension_family(n, r)) == r - 2);
  }
}

TEST_CASE("C5 blow-ups") {
  CHECK(are_isomorphic(c5_blowup(1, 1, 1), cycle(5)));
  const Graph ten = c5_blowup(2, 3, 3);
  CHECK(ten.order() == 10);
  CHECK(ten.size() == 21);
  for (std::size_t n = 5; n <= 30; ++n) {
    const std::size_t ac = n / 2, b = (n + 1) / 2 - 2;
    const std::size_t a = ac / 2, c = ac - a;
    if (a == 0 || b == 0) continue;
    const Graph g = c5_blowup(a, b, c);
    CHECK(g.order() == n);
    CHECK(g.size() == (n - 1) * (n - 1) / 4 + 1);
    CHECK(find_cycle_exact(g, 3).status == SearchStatus::none);
    CHECK_FALSE(is_bipartite(g));
  }
}

TEST_CASE("random suspension members") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto s = random_gnr_member(40, 3, seed);
    CHECK(s.spec.outside_count() <= 1);
    CHECK(is_valid_suspension(s.graph, s.spec));
    CHECK(degree_sum_identity(s.graph));
  }
  std::size_t certified = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = random_gnr_member(60, 6, seed);
    REQUIRE(is_valid_suspension(s.graph, s.spec));
    auto cert = gnr_certify(s.graph, 6);
    if (cert && verify_gnr_certificate(s.graph, *cert) && cert->outside_count <= s.spec.outside_count()) ++certified;
  }
  CHECK(certified == 200);
  auto fixed = random_gnr_member(60, 6, 7, 0.5, 4);
  CHECK(fixed.spec.outside_count() == 4);
  CHECK_THROWS_AS(random_gnr_member(60, 3, 1, 0.5, 2), Error);
}
