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
#include "oddcycle/error.hpp"
#include "oddcycle/io.hpp"
#include "oddcycle/oracle.hpp"

using namespace oddcycle;
using namespace testing;

TEST_CASE("edge list writer is canonical and the reader accepts any order") {
  const Graph g = parse_edge_list("c a comment\np 4 3\ne 3 2\n\ne 1 0\ne 2 0\n");
  CHECK(to_edge_list(g) == "p 4 3\ne 0 1\ne 0 2\ne 2 3\n");
  CHECK(parse_edge_list(to_edge_list(g)) == g);
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(parse_edge_list("e 0 1\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("p 2 1\ne 0 2\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("p 2 2\ne 0 1\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("p 3 1\ne 1 1\n"), Error);
  try {
    parse_edge_list("p 2 1\nq 0 1\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
  }
}

TEST_CASE("graph6 matches the published Petersen encoding") {
  const Graph p = parse_graph6("IheA@GUAo");
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(to_graph6(p) == "IheA@GUAo");
  CHECK(to_graph6(complete(4)) == "C~");
  CHECK_THROWS_AS(parse_graph6("C~~"), Error);
}

TEST_CASE("round trips are fixed points on every graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    enumerate_graphs(n, [&](const SmallGraph& sg) {
      const Graph g = sg.to_graph();
      CHECK(parse_edge_list(to_edge_list(g)) == g);
      CHECK(parse_graph6(to_graph6(g)) == g);
    });
  const Graph big = extremal_suspension(300, 5);
  CHECK(parse_graph6(to_graph6(big)) == big);
  CHECK(parse_edge_list(to_edge_list(big)) == big);
}

TEST_CASE("digest depends only on the canonical edge list") {
  const Graph a = parse_edge_list("p 3 2\ne 1 2\ne 0 1\n");
  const Graph b = parse_edge_list("p 3 2\ne 0 1\ne 2 1\n");
  CHECK(graph_digest(a) == graph_digest(b));
  CHECK(graph_digest(a).size() == 64);
  CHECK(graph_digest(a) != graph_digest(path(4)));
}

TEST_CASE("file io") {
  const std::string path = "io_roundtrip_test.txt";
  const Graph g = turan(9, 3);
  write_edge_list_file(g, path);
  CHECK(read_edge_list_file(path) == g);
  std::remove(path.c_str());
  try {
    read_edge_list_file("/nonexistent/graph.txt");
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io_error);
  }
}
