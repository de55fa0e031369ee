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

#include <iosfwd>
#include <string>
#include <string_view>

#include "oddcycle/graph.hpp"

namespace oddcycle {

// Edge-list text format:
//
//   p <n> <m>
//   e <u> <v>      (m lines, 0-indexed, u < v)
//
// The reader accepts any edge order and either endpoint order, ignores blank
// lines and lines starting with 'c' or '#'. The writer always emits the
// canonical form: u < v and lines sorted lexicographically.

Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

std::string to_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

// graph6 (the 6-bit upper-triangle encoding used by nauty/geng). Supports
// orders up to 258047; a leading ">>graph6<<" header is tolerated.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// SHA-256 hex digest of the canonical edge-list text.
std::string graph_digest(const Graph& g);

}  // namespace oddcycle
