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
#include "oddcycle/structure.hpp"

using namespace oddcycle;
using namespace testing;

namespace {

// T_{n,2} with `pendants` extra vertices each hung on vertex 0.
Graph turan_with_pendants(std::size_t n, std::size_t pendants) {
  GraphBuilder b(n + pendants);
  for (const auto& e : turan(n, 2).edges()) b.add_edge(e.u, e.v);
  for (std::size_t i = 0; i < pendants; ++i) b.add_edge(0, static_cast<Vertex>(n + i));
  return b.build();
}

}  // namespace

TEST_CASE("thresholds are exact rationals") {
  auto th = Threshold::two_fifths(10);
  CHECK(th.qualifies(4));
  CHECK_FALSE(th.qualifies(5));
  auto strict = Threshold::eleven_c(10);
  CHECK(strict.qualifies(109));
  CHECK_FALSE(strict.qualifies(110));
  // 2·7/5 = 2.8: degree 2 qualifies, 3 does not.
  CHECK(Threshold::two_fifths(7).qualifies(2));
  CHECK_FALSE(Threshold::two_fifths(7).qualifies(3));
}

TEST_CASE("peeling") {
  auto none = peel(turan(10, 2), Threshold::two_fifths(10));
  CHECK(none.deletions.empty());
  CHECK(none.survivors.size() == 10);

  GraphBuilder star(10);
  for (Vertex v = 1; v < 10; ++v) star.add_edge(0, v);
  const Graph s = star.build();
  auto gone = peel(s, Threshold{4, 1, PeelMode::at_most});
  CHECK(gone.survivors.empty());
  CHECK(gone.deletions.size() == 10);
  CHECK(replay(s, gone));

  const Graph g = turan_with_pendants(500, 5);
  auto five = peel(g, Threshold{200, 1, PeelMode::at_most});
  REQUIRE(five.deletions.size() == 5);
  for (const auto& step : five.deletions) {
    CHECK(step.vertex >= 500);
    CHECK(step.degree == 1);
  }
  CHECK(replay(g, five));
  auto forged = five;
  forged.deletions[0].degree = 2;
  CHECK_FALSE(replay(g, forged));
}

TEST_CASE("dense pair extraction") {
  const Graph t = turan(500, 2);
  auto whole = extract_dense_pair(t, AnalysisParams{2, 3, 10});
  REQUIRE(whole.ok());
  CHECK(whole.certificate->f.size() == 500);
  CHECK(whole.certificate->gprime.size() == 500);
  CHECK(whole.certificate->report.all_ok());

  const Graph g = turan_with_pendants(495, 5);
  auto ex = extract_dense_pair(g, AnalysisParams{2, 3, 10});
  REQUIRE(ex.ok());
  const auto& cert = *ex.certificate;
  for (Vertex v = 495; v < 500; ++v) CHECK_FALSE(std::binary_search(cert.gprime.begin(), cert.gprime.end(), v));
  CHECK(cert.report.f_order + 100 >= 500);
  CHECK(5 * cert.report.f_min_degree > 2 * 500);
  CHECK(cert.report.gprime_order + 20 >= 500);
  CHECK(cert.report.gprime_min_degree >= 110);
  CHECK(cert.report.all_ok());
}

TEST_CASE("k-dense verification") {
  const Graph k55 = biclique(5, 5);
  auto rep = verify_k_dense(k55, all_vertices(10), *is_bipartite(k55), 2, KDenseMode::exact());
  CHECK(rep.passed());

  // C_6 is not 2-dense: the antipodal pair 0, 3 only has paths of order 4.
  const Graph c6 = cycle(6);
  auto bad = verify_k_dense(c6, all_vertices(6), *is_bipartite(c6), 2, KDenseMode::exact());
  CHECK_FALSE(bad.passed());
  REQUIRE_FALSE(bad.failures.empty());
  bool antipodal = false;
  for (const auto& f : bad.failures)
    if (f.u == 0 && f.v == 3) antipodal = true;
  CHECK(antipodal);

  const Graph t = turan(500, 2);
  auto greedy = verify_k_dense(t, all_vertices(500), *is_bipartite(t), 10, KDenseMode::greedy(50, 3));
  CHECK(greedy.passed());
  CHECK(greedy.pairs_checked == 50);
}

TEST_CASE("bad paths") {
  // C_6 plus w on two adjacent cycle vertices.
  const Graph c6w = with_edges(cycle(6), {{0, 6}, {1, 6}}, 7);
  const VertexSet six = all_vertices(6);
  auto bip6 = *is_bipartite(cycle(6));
  auto a = find_bad_path(c6w, six, bip6);
  REQUIRE(a.path);
  CHECK(a.path->vertices == std::vector<Vertex>{0, 6, 1});
  CHECK(is_bad_path(c6w, six, bip6, *a.path));

  // C_8 plus a path 0 - w1 - w2 - 4 between same-part vertices.
  const Graph c8p = with_edges(cycle(8), {{0, 8}, {8, 9}, {9, 4}}, 10);
  const VertexSet eight = all_vertices(8);
  auto bip8 = *is_bipartite(cycle(8));
  auto b = find_bad_path(c8p, eight, bip8);
  REQUIRE(b.path);
  CHECK(b.path->vertices == std::vector<Vertex>{0, 8, 9, 4});

  // K_{3,3} inside K_{4,4}: the block is bipartite.
  const Graph k44 = biclique(4, 4);
  const VertexSet k33{0, 1, 2, 4, 5, 6};
  auto bip = *is_bipartite(k44, k33);
  auto c = find_bad_path(k44, k33, bip);
  CHECK_FALSE(c.path);
  CHECK(c.block_bipartite);

  CHECK_THROWS_AS(find_bad_path(path(4), all_vertices(4), *is_bipartite(path(4))), Error);
}

TEST_CASE("suspension index and certificates") {
  CHECK(gnr_index(turan(12, 2)) == 0);
  const Graph t8k3 = extremal_suspension(8, 3);
  CHECK(gnr_index(t8k3) == 2);
  auto four = gnr_certify(t8k3, 4);
  REQUIRE(four);
  CHECK(verify_gnr_certificate(t8k3, *four));
  CHECK(four->colors_used == 3);
  CHECK_FALSE(gnr_certify(t8k3, 3));
  CHECK(gnr_index(cycle(5)) == 4);

  auto cert = gnr_certificate(t8k3);
  cert.coloring[cert.pieces.at(0).outside.at(0)] = cert.coloring[cert.pieces[0].attach];
  CHECK_FALSE(verify_gnr_certificate(t8k3, cert));
}

TEST_CASE("extremal matching finds an explicit isomorphism") {
  std::mt19937_64 rng(5);
  const Graph h = extremal_suspension(40, 4);
  std::vector<Vertex> perm(40);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  GraphBuilder b(40);
  for (const auto& e : h.edges()) b.add_edge(perm[e.u], perm[e.v]);
  const Graph g = b.build();
  auto iso = match_extremal_suspension(g, 4);
  REQUIRE(iso);
  CHECK(verify_isomorphism(g, h, iso->map));
  CHECK_FALSE(match_extremal_suspension(g, 3));
  CHECK_FALSE(match_extremal_suspension(with_edges(g, {{perm[0], perm[1]}}), 4));
}

TEST_CASE("stability decomposition outcomes") {
  auto m = stability_decompose(extremal_suspension(200, 3), AnalysisParams{2, 3, 0});
  CHECK(m.kind == OutcomeKind::extremal_match);
  REQUIRE(m.isomorphism);

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto s = random_gnr_member(200, 3, seed, 0.9);
    auto out = stability_decompose(s.graph, AnalysisParams{2, 3, 0});
    CHECK(out.kind == OutcomeKind::gnr_member);
    REQUIRE(out.gnr);
    CHECK(out.gnr->outside_count <= 1);
    CHECK(verify_gnr_certificate(s.graph, *out.gnr));
  }

  const Graph plus = with_edges(turan(200, 2), {{0, 1}});
  auto c = stability_decompose(plus, AnalysisParams{2, 3, 0});
  CHECK(c.kind == OutcomeKind::cycle_found);
  REQUIRE(c.cycle);
  CHECK(verify_cycle(plus, *c.cycle, 5));

  CHECK_THROWS_AS(stability_decompose(plus, AnalysisParams{2, 5, 0}), Error);
}
