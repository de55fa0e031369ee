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

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "oddcycle/constructions.hpp"
#include "oddcycle/cycles.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/io.hpp"
#include "oddcycle/spectral.hpp"
#include "oddcycle/structure.hpp"

using namespace oddcycle;
using namespace testing;

namespace {

// K_{2,2} on {0,1} | {2,3} with a pendant vertex 4 on vertex 0.
Graph k22_pendant() { return with_edges(biclique(2, 2), {{0, 4}}, 5); }

}  // namespace

TEST_CASE("spectral radius of small graphs") {
  CHECK(spectral_radius(biclique(3, 3)).lambda == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(spectral_radius(cycle(5)).lambda == doctest::Approx(2.0).epsilon(1e-10));
  const double expected = std::sqrt((5.0 + std::sqrt(17.0)) / 2.0);
  CHECK(std::fabs(spectral_radius(k22_pendant()).lambda - expected) < 1e-10);
  CHECK(spectral_radius(Graph(4)).lambda == 0.0);
}

TEST_CASE("Perron vector contract") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(30, 0.15, seed);
    auto s = spectral_radius(g, 1e-10);
    CHECK(s.converged);
    CHECK(s.residual <= 1e-10);
    double top = 0.0;
    for (double x : s.perron) {
      CHECK(x >= 0.0);
      CHECK(x <= 1.0);
      top = std::max(top, x);
    }
    if (g.size() > 0) CHECK(top == 1.0);
  }
}

TEST_CASE("quotient matrices") {
  auto t = quotient_matrix(turan(6, 2), {{0, 1, 2}, {3, 4, 5}});
  CHECK(t.equitable);
  CHECK(t.entries == std::vector<std::vector<std::int64_t>>{{0, 3}, {3, 0}});
  CHECK(quotient_spectral_radius(t) == doctest::Approx(3.0).epsilon(1e-12));

  auto k = quotient_matrix(k22_pendant(), {{1}, {2, 3}, {4}, {0}});
  CHECK(k.equitable);
  CHECK(k.entries == std::vector<std::vector<std::int64_t>>{{0, 2, 0, 0}, {1, 0, 0, 1}, {0, 0, 0, 1}, {0, 2, 1, 0}});

  auto c5 = quotient_matrix(cycle(5), {{0, 1}, {2, 3, 4}});
  CHECK_FALSE(c5.equitable);
  CHECK_THROWS_AS(quotient_spectral_radius(c5), Error);
  CHECK_THROWS_AS(quotient_matrix(cycle(5), {{0, 1}, {1, 2, 3, 4}}), Error);
}

TEST_CASE("coarsest equitable partitions keep the spectral radius") {
  CHECK(equitable_partition(parse_graph6("IheA@GUAo")).size() == 1);
  CHECK(equitable_partition(extremal_suspension(30, 5)).size() == 4);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(25, 0.2, seed);
    if (g.size() == 0) continue;
    auto q = quotient_matrix(g, equitable_partition(g));
    REQUIRE(q.equitable);
    CHECK(std::fabs(quotient_spectral_radius(q) - spectral_radius(g, 1e-12).lambda) < 1e-8);
  }
}

TEST_CASE("suspension quotient quartic") {
  auto p = charpoly_suspension_quotient(1, 2, 2);
  CHECK(p.direct.to_string() == "x^4 - 5x^2 + 2");
  CHECK(p.printed.to_string() == "x^4 - 4x^2 + 2");
  CHECK_FALSE(p.agree());
  CHECK(static_cast<double>(largest_real_root(p.direct, 10)) ==
        doctest::Approx(std::sqrt((5.0 + std::sqrt(17.0)) / 2.0)).epsilon(1e-14));
  CHECK(static_cast<double>(largest_real_root(p.printed, 10)) ==
        doctest::Approx(std::sqrt(2.0 + std::sqrt(2.0))).epsilon(1e-14));

  // a = 0: the core is a star and the K_2 is one more leaf, λ = sqrt(b + 1).
  for (std::int64_t b = 1; b <= 12; ++b) {
    auto star = charpoly_suspension_quotient(0, b, 2);
    CHECK(std::fabs(static_cast<double>(largest_real_root(star.direct, 20)) - std::sqrt(b + 1.0)) < 1e-12);
  }
}

TEST_CASE("largest real root edge cases") {
  const std::vector<long double> x4{0, 0, 0, 0, 1};
  CHECK(largest_real_root(x4, 1) == 0.0L);
  CHECK_FALSE(std::signbit(static_cast<double>(largest_real_root(x4, 1))));
  // (x - 2)^2 (x + 1)^2: a double root at the top.
  const std::vector<long double> dbl{4, 4, -3, -2, 1};
  CHECK(std::fabs(static_cast<double>(largest_real_root(dbl, 10)) - 2.0) < 1e-9);
  // x^4 + 1 has no real root.
  const std::vector<long double> none{1, 0, 0, 0, 1};
  CHECK_THROWS_AS(largest_real_root(none, 10), Error);
  // Root above the bracket.
  const std::vector<long double> far{-100, 1};
  CHECK_THROWS_AS(largest_real_root(far, 10), Error);
}

TEST_CASE("extremal spectral radius against numpy") {
  const auto fx = fixture("independent.json");
  for (const auto& row : fx.at("lambda_extremal")) {
    const auto n = row.at("n").get<std::size_t>();
    const auto r = row.at("r").get<std::size_t>();
    const double want = row.at("lambda").get<double>();
    CHECK(std::fabs(lambda_extremal_quotient(n, r) - want) < 1e-9);
    CHECK(std::fabs(spectral_radius(extremal_suspension(n, r), 1e-12).lambda - want) < 1e-9);
  }
}

TEST_CASE("two-method cross-check") {
  auto small = lambda_extremal_check(8, 3);
  CHECK(small.difference <= 1e-8);
  auto big = lambda_extremal_check(100000, 5);
  CHECK(big.difference <= 1e-8);
  CHECK(big.power.converged);
  CHECK(lambda_star(60, 4) == doctest::Approx(lambda_extremal_quotient(60, 3)).epsilon(1e-15));
}

TEST_CASE("vertex deletion inequality") {
  auto k3 = sun_das_check(complete(3), 0);
  CHECK(k3.lhs == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(k3.rhs == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(k3.holds);
  GraphBuilder star(5);
  for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  auto s = sun_das_check(star.build(), 0);
  CHECK(s.lhs == doctest::Approx(0.0));
  CHECK(s.rhs == doctest::Approx(-4.0).epsilon(1e-9));
  CHECK(s.holds);
}

TEST_CASE("spectral cycle threshold") {
  CHECK(zls_threshold(10, 2) == doctest::Approx((0.5 + std::sqrt(40.25)) / 2).epsilon(1e-15));
  CHECK(zls_threshold(10, 2) == doctest::Approx(3.42214438511238).epsilon(1e-13));
  CHECK(zls_threshold(0, 1) == 0.0);
  const double th = zls_threshold(100, 3);
  CHECK(th == doctest::Approx(10.512492197250394).epsilon(1e-13));
  CHECK(spectral_radius(turan(20, 2)).lambda < th);
}

TEST_CASE("rotations") {
  // P_4 = 0-1-2-3; moving 3 from 2 to 1 gives K_{1,3}.
  const Graph p4 = path(4);
  const Graph star = rotate(p4, 1, 2, {3});
  CHECK(star.degree(1) == 3);
  auto check = assert_rotation_increases(p4, 1, 2, {3});
  CHECK(check.lambda_before == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-9));
  CHECK(check.lambda_after == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  CHECK(check.increased);
  CHECK_THROWS_AS(rotate(p4, 1, 2, {}), Error);
  CHECK_THROWS_AS(rotate(p4, 1, 2, {1}), Error);

  std::size_t trials = 0;
  for (std::uint64_t seed = 0; trials < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(5, 30)(rng);
    GraphBuilder b(n);
    for (std::size_t v = 1; v < n; ++v)
      b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng)));
    const Graph tree = b.build();
    const auto x = spectral_radius(tree, 1e-12).perron;
    // Rehang some leaf onto the vertex with the largest Perron entry.
    const Vertex top = static_cast<Vertex>(std::max_element(x.begin(), x.end()) - x.begin());
    for (Vertex leaf = 0; leaf < static_cast<Vertex>(n); ++leaf) {
      if (tree.degree(leaf) != 1) continue;
      const Vertex parent = tree.neighbors(leaf)[0];
      if (parent == top || leaf == top) continue;
      auto rc = assert_rotation_increases(tree, top, parent, {leaf});
      CHECK(rc.perron_order);
      CHECK(rc.increased);
      ++trials;
      break;
    }
  }
}

TEST_CASE("classical bounds") {
  auto t = classical_bounds(turan(9, 3), 3);
  CHECK(t.lambda == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(t.wilf == doctest::Approx(6.0));
  CHECK(t.wilf_holds);
  CHECK(t.nikiforov_holds);
  auto c = classical_bounds(cycle(5), 2);
  CHECK(c.wilf == doctest::Approx(2.5));
  CHECK(c.nikiforov == doctest::Approx(std::sqrt(5.0)));
  CHECK(c.wilf_holds);
  CHECK(c.nikiforov_holds);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 5 + seed % 26;
    // Random graph with triangles broken by dropping an edge of each.
    Graph g = random_graph(n, 0.3, seed);
    for (auto tri = find_cycle_exact(g, 3); tri.witness; tri = find_cycle_exact(g, 3)) {
      GraphBuilder b(n);
      for (const auto& e : g.edges())
        if (!(e.u == std::min(tri.witness->vertices[0], tri.witness->vertices[1]) &&
              e.v == std::max(tri.witness->vertices[0], tri.witness->vertices[1])))
          b.add_edge(e.u, e.v);
      g = b.build();
    }
    auto bounds = classical_bounds(g, 2);
    CHECK(bounds.wilf_holds);
    CHECK(bounds.nikiforov_holds);
  }
}
