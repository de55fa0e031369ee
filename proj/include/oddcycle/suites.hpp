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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace oddcycle {

struct SuiteOptions {
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: ODDCYCLE_THREADS, else hardware concurrency
};

struct SuiteResult {
  std::string name;
  int criterion = 0;  // 0 for the optional long suites
  bool passed = false;
  std::string summary;
  nlohmann::json details;
  double seconds = 0.0;
};

struct SuiteInfo {
  std::string name;
  int criterion;
  bool long_running;
  std::string description;
};

const std::vector<SuiteInfo>& suite_catalog();

/// Throws invalid_parameter for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// Worker count from ODDCYCLE_THREADS, falling back to the hardware.
unsigned worker_count(unsigned requested = 0);

/// Runs body(i) for i in [0, count) on `workers` threads. The first
/// exception thrown by a worker is rethrown after all have joined.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

/// Stateless 64-bit mix of a base seed and an index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace oddcycle
