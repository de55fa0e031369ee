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

#include "oddcycle/oddcycle.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "oddcycle/certificate.hpp"
#include "oddcycle/constructions.hpp"
#include "oddcycle/cycles.hpp"
#include "oddcycle/decompose.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/io.hpp"
#include "oddcycle/oracle.hpp"
#include "oddcycle/spectral.hpp"
#include "oddcycle/suites.hpp"

struct oc_graph {
  oddcycle::Graph g;
};

namespace {

using oddcycle::json;

thread_local std::string last_error;

oc_status status_of(oddcycle::ErrorCode code) { return static_cast<oc_status>(static_cast<int>(code) + 1); }

// Runs `body`, translating exceptions into a status and remembering the message.
template <class F>
oc_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return OC_OK;
  } catch (const oddcycle::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("bad JSON: ") + e.what();
    return OC_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OC_SIZE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OC_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown failure";
    return OC_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json params_of(const char* text) {
  if (text == nullptr || *text == '\0') return json::object();
  json j = json::parse(text);
  oddcycle::require(j.is_object(), oddcycle::ErrorCode::invalid_parameter, "parameters must be a JSON object");
  return j;
}

void need(const void* p, const char* what) {
  oddcycle::require(p != nullptr, oddcycle::ErrorCode::invalid_parameter, std::string(what) + " is null");
}

oc_status emit_graph(oddcycle::Graph g, oc_graph** out) {
  *out = new oc_graph{std::move(g)};
  return OC_OK;
}

}  // namespace

extern "C" {

const char* oc_version(void) { return "0.1.0"; }

const char* oc_status_name(oc_status status) {
  switch (status) {
    case OC_OK: return "ok";
    case OC_INTERNAL_ERROR: return "internal_error";
    default:
      if (status >= OC_INVALID_PARAMETER && status <= OC_BUDGET_EXHAUSTED)
        return oddcycle::to_string(static_cast<oddcycle::ErrorCode>(status - 1));
      return "unknown";
  }
}

const char* oc_last_error(void) { return last_error.c_str(); }

void oc_string_free(char* s) { std::free(s); }

oc_status oc_graph_parse_edge_list(const char* text, oc_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    emit_graph(oddcycle::parse_edge_list(text), out);
  });
}

oc_status oc_graph_read_file(const char* path, oc_graph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    emit_graph(oddcycle::read_edge_list_file(path), out);
  });
}

oc_status oc_graph_from_graph6(const char* line, oc_graph** out) {
  return guarded([&] {
    need(line, "line");
    need(out, "out");
    emit_graph(oddcycle::parse_graph6(line), out);
  });
}

void oc_graph_free(oc_graph* g) { delete g; }

size_t oc_graph_order(const oc_graph* g) { return g == nullptr ? 0 : g->g.order(); }

size_t oc_graph_size(const oc_graph* g) { return g == nullptr ? 0 : g->g.size(); }

oc_status oc_graph_to_edge_list(const oc_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(oddcycle::to_edge_list(g->g));
  });
}

oc_status oc_graph_to_graph6(const oc_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(oddcycle::to_graph6(g->g));
  });
}

oc_status oc_graph_digest(const oc_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(oddcycle::graph_digest(g->g));
  });
}

oc_status oc_construct(const char* family, const char* params_json, oc_graph** out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    const json p = params_of(params_json);
    const std::string f = family;
    auto get = [&](const char* key) { return p.at(key).get<std::size_t>(); };
    if (f == "turan") {
      emit_graph(oddcycle::turan(get("n"), get("r")), out);
    } else if (f == "extremal") {
      emit_graph(oddcycle::extremal_suspension(get("n"), get("r")), out);
    } else if (f == "star") {
      emit_graph(oddcycle::star_suspension_family(get("n"), get("r")), out);
    } else if (f == "c5") {
      emit_graph(oddcycle::c5_blowup(get("a"), get("b"), get("c")), out);
    } else if (f == "gnr") {
      emit_graph(oddcycle::random_gnr_member(get("n"), get("r"), p.value("seed", std::uint64_t{1}),
                                             p.value("density", 0.7), p.value("outside", -1))
                     .graph,
                 out);
    } else {
      oddcycle::fail(oddcycle::ErrorCode::invalid_parameter, "unknown family '" + f + "'");
    }
  });
}

oc_status oc_decompose(const oc_graph* g, const char* params_json, char** out_json) {
  return guarded([&] {
    need(g, "graph");
    need(out_json, "out_json");
    const json p = params_of(params_json);
    oddcycle::AnalysisParams ap{p.value("k", std::size_t{2}), p.value("r", std::size_t{3}), p.value("c", std::size_t{0})};
    const auto budget = p.value("budget", oddcycle::kDefaultCycleBudget);
    auto outcome = oddcycle::stability_decompose(g->g, ap, budget);
    json params = {{"k", ap.k}, {"r", ap.r}, {"c", ap.c}, {"budget", budget}};
    const char* status = outcome.kind == oddcycle::OutcomeKind::undecided ? "undecided" : "decided";
    *out_json = dup(oddcycle::make_envelope(&g->g, "stability_outcome", params, to_json(outcome), status).dump());
  });
}

oc_status oc_dense_pair(const oc_graph* g, const char* params_json, char** out_json) {
  return guarded([&] {
    need(g, "graph");
    need(out_json, "out_json");
    const json p = params_of(params_json);
    oddcycle::AnalysisParams ap{p.value("k", std::size_t{2}), p.value("r", std::size_t{3}), p.value("c", std::size_t{0})};
    auto ex = oddcycle::extract_dense_pair(g->g, ap);
    json params = {{"k", ap.k}, {"r", ap.r}, {"c", ap.c}};
    if (ex.ok()) {
      *out_json = dup(oddcycle::make_envelope(&g->g, "dense_certificate", params, to_json(*ex.certificate),
                                              ex.certificate->report.all_ok() ? "verified" : "clauses_failed")
                          .dump());
    } else {
      json payload = {{"diagnostic", ex.diagnostic},
                      {"odd_cycle", ex.odd_cycle ? to_json(*ex.odd_cycle) : json(nullptr)}};
      *out_json = dup(oddcycle::make_envelope(&g->g, "dense_failure", params, payload, "failed").dump());
    }
  });
}

oc_status oc_spectral(const oc_graph* g, const char* params_json, char** out_json) {
  return guarded([&] {
    need(g, "graph");
    need(out_json, "out_json");
    const json p = params_of(params_json);
    const std::string method = p.value("method", std::string("power"));
    const double tol = p.value("tol", oddcycle::kDefaultSpectralTol);
    oddcycle::require(method == "power" || method == "quotient" || method == "both",
                      oddcycle::ErrorCode::invalid_parameter, "method must be power, quotient or both");
    json payload = json::object();
    if (method != "quotient") payload = to_json(oddcycle::spectral_radius(g->g, tol), true);
    if (method != "power") {
      const auto q = oddcycle::quotient_matrix(g->g, oddcycle::equitable_partition(g->g));
      const double lq = g->g.size() == 0 ? 0.0 : oddcycle::quotient_spectral_radius(q);
      payload["quotient"] = {{"lambda", lq}, {"cells", q.partition.size()}, {"matrix", q.entries}};
      if (method == "quotient") payload["lambda"] = lq;
      else payload["difference"] = std::fabs(lq - payload["lambda"].get<double>());
    }
    payload["method"] = method;
    if (p.contains("r")) {
      const auto r = p.at("r").get<std::size_t>();
      if (auto iso = oddcycle::match_extremal_suspension(g->g, r)) {
        const auto abq = oddcycle::suspension_quotient_params(g->g.order(), r);
        const auto poly = oddcycle::charpoly_suspension_quotient(abq[0], abq[1], abq[2]);
        payload["quartic"] = {{"a", abq[0]},
                              {"b", abq[1]},
                              {"q", abq[2]},
                              {"polynomial", to_json(poly.direct)},
                              {"root", static_cast<double>(oddcycle::largest_real_root(
                                           poly.direct, static_cast<long double>(g->g.order())))}};
      }
    }
    *out_json = dup(oddcycle::make_envelope(&g->g, "spectral", {{"tol", tol}, {"method", method}}, payload, "computed").dump());
  });
}

oc_status oc_find_cycle(const oc_graph* g, size_t length, uint64_t budget, int* found, char** out_json) {
  return guarded([&] {
    need(g, "graph");
    need(out_json, "out_json");
    auto s = oddcycle::find_cycle_exact(g->g, length, budget);
    if (found != nullptr)
      *found = s.status == oddcycle::SearchStatus::found ? 1 : s.status == oddcycle::SearchStatus::none ? 0 : -1;
    *out_json = dup(oddcycle::make_envelope(&g->g, "cycle", {{"length", length}, {"budget", budget}}, to_json(s),
                                            oddcycle::to_string(s.status))
                        .dump());
  });
}

oc_status oc_chromatic(const oc_graph* g, char** out_json) {
  return guarded([&] {
    need(g, "graph");
    need(out_json, "out_json");
    auto c = oddcycle::chromatic_number(g->g);
    *out_json = dup(json{{"chromatic_number", c.chromatic_number}, {"colors", c.colors}}.dump());
  });
}

oc_status oc_oracle(const char* query, const char* params_json, char** out_json) {
  return guarded([&] {
    need(query, "query");
    need(out_json, "out_json");
    const json p = params_of(params_json);
    const std::string q = query;
    const int n = p.at("n").get<int>();
    if (q == "enumerate") {
      const std::size_t cycle = p.value("cycle", std::size_t{0});
      const bool list = p.value("list", false);
      json graphs = json::array();
      auto stats = oddcycle::enumerate_graphs(
          n, [&](const oddcycle::SmallGraph& sg) {
            if (list) graphs.push_back(oddcycle::to_graph6(sg.to_graph()));
          },
          cycle == 0 ? oddcycle::ClassFilter{} : oddcycle::cycle_free_filter(cycle));
      json out = {{"n", n}, {"cycle", cycle}, {"count", stats.emitted}, {"candidates", stats.candidates}};
      if (list) out["graphs"] = graphs;
      *out_json = dup(out.dump());
      return;
    }
    const std::size_t cycle = p.at("cycle").get<std::size_t>();
    const std::size_t r = p.value("r", std::size_t{0});
    oddcycle::ExtremalRecord rec;
    if (q == "ex") rec = r == 0 ? oddcycle::ex_bruteforce(n, cycle) : oddcycle::ex_chromatic_bruteforce(n, cycle, r);
    else if (q == "spex") rec = oddcycle::spex_bruteforce(n, cycle, r);
    else oddcycle::fail(oddcycle::ErrorCode::invalid_parameter, "unknown oracle query '" + q + "'");
    json record = to_json(rec);
    if (p.value("envelope", false))
      record = oddcycle::make_envelope(nullptr, "extremal_record", {{"n", n}, {"cycle", cycle}, {"r", r}}, record,
                                       rec.feasible ? "computed" : "infeasible");
    *out_json = dup(record.dump());
  });
}

oc_status oc_suite_list(char** out_json) {
  return guarded([&] {
    need(out_json, "out_json");
    json out = json::array();
    for (const auto& s : oddcycle::suite_catalog())
      out.push_back({{"name", s.name}, {"criterion", s.criterion}, {"long", s.long_running}, {"description", s.description}});
    *out_json = dup(out.dump());
  });
}

oc_status oc_suite_run(const char* name, uint64_t seed, unsigned threads, int* passed, char** out_json) {
  return guarded([&] {
    need(name, "name");
    need(out_json, "out_json");
    auto res = oddcycle::run_suite(name, {seed, threads});
    if (passed != nullptr) *passed = res.passed ? 1 : 0;
    *out_json = dup(json{{"name", res.name},
                         {"criterion", res.criterion},
                         {"passed", res.passed},
                         {"summary", res.summary},
                         {"seconds", res.seconds},
                         {"seed", seed},
                         {"details", res.details}}
                        .dump());
  });
}

oc_status oc_certcheck(const char* envelope_json, const oc_graph* g, int* valid, char** out_json) {
  return guarded([&] {
    need(envelope_json, "envelope");
    need(out_json, "out_json");
    auto check = oddcycle::check_certificate(json::parse(envelope_json), g == nullptr ? nullptr : &g->g);
    if (valid != nullptr) *valid = check.valid ? 1 : 0;
    *out_json = dup(json{{"valid", check.valid}, {"problems", check.problems}, {"notes", check.notes}}.dump());
  });
}

}  // extern "C"
