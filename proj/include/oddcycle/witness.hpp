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

#include <cstddef>

#include "oddcycle/graph.hpp"

namespace oddcycle {

/// Cycle v_1 .. v_L, closing v_L -> v_1.
struct CycleWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool operator==(const CycleWitness&) const = default;
};

/// Path w_1 .. w_h; order h, length h - 1.
struct PathWitness {
  std::vector<Vertex> vertices;

  std::size_t order() const noexcept { return vertices.size(); }
  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool operator==(const PathWitness&) const = default;
};

bool verify_cycle(const Graph& g, const CycleWitness& w, std::size_t length);
bool verify_path(const Graph& g, const PathWitness& w);

}  // namespace oddcycle
