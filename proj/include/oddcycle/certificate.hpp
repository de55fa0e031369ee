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

#include "json.hpp"
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/decompose.hpp"
#include "oddcycle/graph.hpp"
#include "oddcycle/oracle.hpp"
#include "oddcycle/spectral.hpp"

namespace oddcycle {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::json;

// Payload encoders. Witnesses are explicit vertex sequences.
json to_json(const CycleWitness& w);
json to_json(const PathWitness& w);
json to_json(const Bipartition& b);
json to_json(const PeelTrace& t);
json to_json(const DenseReport& r);
json to_json(const DenseCertificate& c);
json to_json(const GnrCertificate& c);
json to_json(const StabilityOutcome& o);
json to_json(const SpectralResult& s, bool with_perron = true);
json to_json(const ExtremalRecord& r);
json to_json(const QuarticPoly& p);
json to_json(const CycleSearch& s);

GnrCertificate gnr_certificate_from_json(const json& j);
Bipartition bipartition_from_json(const json& j, std::size_t n);

/// {schema_version, kind, graph: {sha256, n, m} or null, params, payload, status}.
json make_envelope(const Graph* g, const std::string& kind, json params, json payload, const std::string& status);

struct CertCheck {
  bool valid = false;
  std::vector<std::string> problems;
  std::vector<std::string> notes;
};

/// Re-verifies an envelope from its JSON alone plus the graph it names
/// (null for kinds that carry their own graphs, such as extremal records).
CertCheck check_certificate(const json& envelope, const Graph* g);

}  // namespace oddcycle
