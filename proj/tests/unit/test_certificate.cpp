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
#include "oddcycle/certificate.hpp"
#include "oddcycle/constructions.hpp"
#include "oddcycle/cycles.hpp"
#include "oddcycle/decompose.hpp"
#include "oddcycle/oracle.hpp"
#include "oddcycle/spectral.hpp"
#include "oddcycle/structure.hpp"

using namespace oddcycle;
using namespace testing;

namespace {

// Serialize and re-parse so nothing survives but the text.
json through_text(const json& j) { return json::parse(j.dump()); }

json stability_envelope(const Graph& g, std::size_t k, std::size_t r) {
  auto out = stability_decompose(g, AnalysisParams{k, r, 0});
  return through_text(make_envelope(&g, "stability_outcome", {{"k", k}, {"r", r}}, to_json(out), "verified"));
}

}  // namespace

TEST_CASE("envelope layout") {
  const Graph g = cycle(5);
  auto env = make_envelope(&g, "cycle", {{"length", 5}}, to_json(find_cycle_exact(g, 5)), "found");
  CHECK(env.at("schema_version") == kSchemaVersion);
  CHECK(env.at("graph").at("n") == 5);
  CHECK(env.at("graph").at("m") == 5);
  CHECK(env.at("graph").at("sha256").get<std::string>().size() == 64);
  CHECK(env.at("payload").at("witness").at("vertices").size() == 5);
  CHECK(check_certificate(through_text(env), &g).valid);
}

TEST_CASE("stability outcomes re-verify and tampering is caught") {
  const Graph ext = extremal_suspension(200, 3);
  auto match = stability_envelope(ext, 2, 3);
  CHECK(match["payload"]["outcome"] == "ExtremalMatch");
  CHECK(check_certificate(match, &ext).valid);
  auto broken = match;
  auto& map = broken["payload"]["isomorphism"]["map"];
  std::swap(map[0], map[150]);
  CHECK_FALSE(check_certificate(broken, &ext).valid);

  const Graph member = random_gnr_member(200, 4, 9, 0.95).graph;
  auto gnr = stability_envelope(member, 2, 4);
  CHECK(gnr["payload"]["outcome"] == "GnrMember");
  CHECK(check_certificate(gnr, &member).valid);
  auto recolored = gnr;
  recolored["payload"]["gnr"]["coloring"][0] = 7;
  recolored["payload"]["gnr"]["coloring"][1] = 7;
  recolored["payload"]["gnr"]["coloring"][2] = 7;
  CHECK_FALSE(check_certificate(recolored, &member).valid);

  const Graph plus = with_edges(turan(200, 2), {{0, 1}});
  auto cyc = stability_envelope(plus, 2, 3);
  CHECK(cyc["payload"]["outcome"] == "CycleFound");
  CHECK(check_certificate(cyc, &plus).valid);
  auto shifted = cyc;
  shifted["payload"]["cycle"]["vertices"][2] = 0;
  CHECK_FALSE(check_certificate(shifted, &plus).valid);

  // The same certificate against a different graph is refused by digest.
  CHECK_FALSE(check_certificate(cyc, &ext).valid);
  CHECK_FALSE(check_certificate(cyc, nullptr).valid);
}

TEST_CASE("dense certificates replay") {
  GraphBuilder b(505);
  for (const auto& e : turan(500, 2).edges()) b.add_edge(e.u, e.v);
  for (Vertex v = 500; v < 505; ++v) b.add_edge(3, v);
  const Graph g = b.build();
  auto ex = extract_dense_pair(g, AnalysisParams{2, 3, 10});
  REQUIRE(ex.ok());
  auto env = through_text(make_envelope(&g, "dense_certificate", {{"k", 2}, {"c", 10}}, to_json(*ex.certificate), "verified"));
  auto ok = check_certificate(env, &g);
  CHECK(ok.valid);

  auto forged = env;
  forged["payload"]["gprime_trace"]["deletions"][0][1] = 40;
  CHECK_FALSE(check_certificate(forged, &g).valid);
  auto lying = env;
  lying["payload"]["report"]["f_2connected"] = false;
  CHECK_FALSE(check_certificate(lying, &g).valid);
  auto swapped = env;
  swapped["payload"]["gprime_bipartition"]["parts"][0][0] = 499;
  CHECK_FALSE(check_certificate(swapped, &g).valid);
}

TEST_CASE("spectral and record certificates") {
  const Graph g = extremal_suspension(30, 4);
  auto env = through_text(make_envelope(&g, "spectral", {{"tol", 1e-10}}, to_json(spectral_radius(g), true), "computed"));
  CHECK(check_certificate(env, &g).valid);
  auto off = env;
  off["payload"]["lambda"] = off["payload"]["lambda"].get<double>() + 1e-3;
  CHECK_FALSE(check_certificate(off, &g).valid);

  auto rec = through_text(make_envelope(nullptr, "extremal_record", {}, to_json(ex_bruteforce(8, 5)), "computed"));
  CHECK(check_certificate(rec, nullptr).valid);
  auto inflated = rec;
  inflated["payload"]["optimum"] = 17;
  CHECK_FALSE(check_certificate(inflated, nullptr).valid);
}

TEST_CASE("bad path and cycle absence certificates") {
  const Graph g = with_edges(cycle(6), {{0, 6}, {1, 6}}, 7);
  const VertexSet six = all_vertices(6);
  const auto bip = *is_bipartite(cycle(6));
  auto found = find_bad_path(g, six, bip);
  json payload = {{"gprime", six}, {"bipartition", to_json(bip)}, {"path", to_json(*found.path)}};
  auto env = through_text(make_envelope(&g, "bad_path", {}, payload, "found"));
  CHECK(check_certificate(env, &g).valid);
  env["payload"]["path"]["vertices"] = {0, 6, 2};
  CHECK_FALSE(check_certificate(env, &g).valid);

  const Graph t = turan(8, 2);
  auto none = through_text(make_envelope(&t, "cycle", {{"length", 5}}, to_json(find_cycle_exact(t, 5)), "none"));
  CHECK(check_certificate(none, &t).valid);
  const Graph plus = with_edges(t, {{0, 1}});
  auto claimed = none;
  claimed["graph"] = make_envelope(&plus, "x", {}, nullptr, "")["graph"];
  CHECK_FALSE(check_certificate(claimed, &plus).valid);
}

TEST_CASE("malformed envelopes are rejected, not thrown") {
  const Graph g = cycle(5);
  CHECK_FALSE(check_certificate(json{{"schema_version", 99}}, &g).valid);
  CHECK_FALSE(check_certificate(json::object(), &g).valid);
  auto env = make_envelope(&g, "mystery", {}, json::object(), "");
  CHECK_FALSE(check_certificate(env, &g).valid);
}
