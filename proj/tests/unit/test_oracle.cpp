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
#include "oddcycle/oracle.hpp"
#include "oddcycle/spectral.hpp"

using namespace oddcycle;
using namespace testing;

namespace {

std::uint64_t count(int n, const ClassFilter& filter = nullptr) {
  return enumerate_graphs(n, [](const SmallGraph&) {}, filter).emitted;
}

ExtremalRecord live_record(int n, std::size_t length, std::size_t r, const std::string& objective) {
  if (objective == "lambda") return spex_bruteforce(n, length, r);
  return r == 0 ? ex_bruteforce(n, length) : ex_chromatic_bruteforce(n, length, r);
}

Graph relabel(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  GraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return b.build();
}

}  // namespace

TEST_CASE("enumeration counts against networkx and Burnside") {
  const auto fx = fixture("independent.json");
  for (int n = 1; n <= 7; ++n) {
    CHECK(count(n) == fx.at("counts").at(std::to_string(n)).get<std::uint64_t>());
    CHECK(count(n, cycle_free_filter(3)) == fx.at("triangle_free_counts").at(std::to_string(n)).get<std::uint64_t>());
  }
  const std::uint64_t known[] = {1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168, 1018997864};
  for (int n = 1; n <= 11; ++n) CHECK(count_unlabeled_graphs(n) == known[n - 1]);
  CHECK(count(8) == 12346);
  CHECK(count(9) == 274668);
  // Triangle-free counts continue 410, 1897 (OEIS A006785).
  CHECK(count(8, cycle_free_filter(3)) == 410);
  CHECK(count(9, cycle_free_filter(3)) == 1897);
  CHECK_THROWS_AS(count(11), Error);
}

TEST_CASE("canonical forms are labeling invariant") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph(6 + seed % 15, 0.35, seed);
    const std::string form = canonical_graph6(g);
    for (std::uint64_t k = 1; k <= 4; ++k) CHECK(canonical_graph6(relabel(g, seed * 10 + k)) == form);
  }
  CHECK(are_isomorphic(parse_graph6("IheA@GUAo"), relabel(parse_graph6("IheA@GUAo"), 3)));
  CHECK_FALSE(are_isomorphic(cycle(6), with_edges(path(3), {}, 6)));
  CHECK_FALSE(are_isomorphic(cycle(6), complete(3)));
}

TEST_CASE("chromatic numbers") {
  CHECK(chromatic_number(cycle(5)).chromatic_number == 3);
  CHECK(chromatic_number(complete(4)).chromatic_number == 4);
  CHECK(chromatic_number(extremal_suspension(12, 4)).chromatic_number == 4);
  CHECK(chromatic_number(parse_graph6("IheA@GUAo")).chromatic_number == 3);
  CHECK(chromatic_number(Graph(3)).chromatic_number == 1);
  // Grötzsch graph (networkx mycielski_graph(4)): triangle-free, 4-chromatic.
  const Graph grotzsch = parse_graph6("JkLTAQGK?N_");
  CHECK(grotzsch.order() == 11);
  CHECK(grotzsch.size() == 20);
  CHECK(find_cycle_exact(grotzsch, 3).status == SearchStatus::none);
  auto col = chromatic_number(grotzsch);
  CHECK(col.chromatic_number == 4);
  for (const auto& e : grotzsch.edges()) CHECK(col.colors[e.u] != col.colors[e.v]);
  CHECK_FALSE(is_colorable(grotzsch, 3));
  CHECK(greedy_color_bound(grotzsch) >= 4);
}

TEST_CASE("extremal records against networkx for n up to 7") {
  const auto fx = fixture("independent.json");
  std::size_t compared = 0;
  for (const auto& row : fx.at("records")) {
    const int n = row.at("n").get<int>();
    const auto length = row.at("cycle_length").get<std::size_t>();
    const auto r = row.at("min_chromatic").get<std::size_t>();
    const auto objective = row.at("objective").get<std::string>();
    const auto rec = live_record(n, length, r, objective);
    INFO("n=" << n << " L=" << length << " r=" << r << " " << objective);
    CHECK(std::fabs(rec.optimum - row.at("optimum").get<double>()) < 1e-9);
    CHECK(rec.qualifying == row.at("qualifying").get<std::uint64_t>());
    const auto theirs = row.at("extremal").get<std::vector<std::string>>();
    REQUIRE(rec.extremal.size() == theirs.size());
    for (const auto& s : theirs) {
      const Graph h = parse_graph6(s);
      CHECK(std::any_of(rec.extremal.begin(), rec.extremal.end(),
                        [&](const std::string& mine) { return are_isomorphic(parse_graph6(mine), h); }));
    }
    ++compared;
  }
  CHECK(compared == fx.at("records").size());
}

TEST_CASE("frozen records re-verify and match a fresh run") {
  for (const char* name : {"ex_c5.json", "ex_c3.json", "ex_c3_chi3.json", "ex_c5_chi3.json", "spex_c5_chi3.json"}) {
    for (const auto& row : fixture(name)) {
      const int n = row.at("n").get<int>();
      const auto length = row.at("cycle_length").get<std::size_t>();
      const auto r = row.at("min_chromatic").get<std::size_t>();
      const auto objective = row.at("objective").get<std::string>();
      const auto rec = live_record(n, length, r, objective);
      INFO(name << " n=" << n);
      CHECK(std::fabs(rec.optimum - row.at("optimum").get<double>()) < 1e-9);
      CHECK(rec.extremal == row.at("extremal").get<std::vector<std::string>>());
      for (const auto& s : rec.extremal) {
        const Graph g = parse_graph6(s);
        CHECK(find_cycle_exact(g, length).status == SearchStatus::none);
        if (r > 0) CHECK(chromatic_number(g).chromatic_number >= r);
        const double value = objective == "edges" ? static_cast<double>(g.size()) : spectral_radius(g, 1e-12).lambda;
        CHECK(std::fabs(value - rec.optimum) < 1e-9);
      }
    }
  }
  const auto counts = fixture("counts.json");
  for (int n = 1; n <= 9; ++n) CHECK(count(n) == counts.at("all").at(std::to_string(n)).get<std::uint64_t>());
}

TEST_CASE("named extremal values") {
  auto six = ex_bruteforce(6, 5);
  CHECK(six.optimum == 9);
  auto four = ex_bruteforce(4, 5);
  CHECK(four.optimum == 6);
  CHECK(four.extremal == std::vector<std::string>{canonical_graph6(complete(4))});
  auto eight = ex_bruteforce(8, 5);
  CHECK(eight.optimum == 16);
  CHECK(eight.extremal == std::vector<std::string>{canonical_graph6(turan(8, 2))});
  CHECK(ex_chromatic_bruteforce(6, 5, 3).optimum >= extremal_suspension(6, 3).size());
  for (int n = 4; n <= 8; ++n) CHECK(ex_chromatic_bruteforce(n, 5, 2).optimum == ex_bruteforce(n, 5).optimum);
  auto k4 = spex_bruteforce(4, 5, 4);
  CHECK(k4.optimum == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(k4.extremal == std::vector<std::string>{canonical_graph6(complete(4))});
  CHECK_THROWS_AS(spex_bruteforce(10, 5, 3), Error);
}

TEST_CASE("Mantel and the non-bipartite triangle-free bound") {
  for (int n = 2; n <= 9; ++n) CHECK(ex_bruteforce(n, 3).optimum == n * n / 4);
  for (int n = 5; n <= 9; ++n) CHECK(ex_chromatic_bruteforce(n, 3, 3).optimum == (n - 1) * (n - 1) / 4 + 1);
  // The smallest triangle-free graph needing three colors has five vertices.
  CHECK_FALSE(ex_chromatic_bruteforce(4, 3, 3).feasible);
  CHECK(ex_chromatic_bruteforce(5, 3, 3).feasible);
  CHECK_FALSE(ex_chromatic_bruteforce(9, 3, 4).feasible);
}

TEST_CASE("spectral counterexample search") {
  auto none = counterexample_search_spectral(21, 2, 3, 0, 1);
  CHECK_FALSE(none.counterexample);
  CHECK(none.flips_tried == 0);
  auto s = counterexample_search_spectral(21, 2, 3, 5000, 11);
  CHECK_FALSE(s.counterexample);
  CHECK(s.flips_tried == 5000);
  CHECK(s.best_lambda <= s.target + 1e-8);
  CHECK(s.target == doctest::Approx(lambda_extremal_quotient(21, 3)).epsilon(1e-15));
}
