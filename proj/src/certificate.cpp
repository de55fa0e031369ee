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

#include "oddcycle/certificate.hpp"

#include <algorithm>
#include <cmath>

#include "oddcycle/constructions.hpp"
#include "oddcycle/cycles.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/io.hpp"
#include "oddcycle/structure.hpp"

namespace oddcycle {

json to_json(const CycleWitness& w) { return {{"length", w.length()}, {"vertices", w.vertices}}; }

json to_json(const PathWitness& w) { return {{"order", w.order()}, {"vertices", w.vertices}}; }

json to_json(const Bipartition& b) { return {{"parts", {b.parts[0], b.parts[1]}}}; }

json to_json(const PeelTrace& t) {
  json deletions = json::array();
  for (const PeelStep& s : t.deletions) deletions.push_back({s.vertex, s.degree});
  return {{"threshold",
           {{"num", t.threshold.num},
            {"den", t.threshold.den},
            {"mode", t.threshold.mode == PeelMode::at_most ? "at_most" : "strictly_below"},
            {"text", t.threshold.describe()}}},
          {"start", t.start},
          {"deletions", deletions},
          {"survivors", t.survivors}};
}

json to_json(const DenseReport& r) {
  return {{"n", r.n},
          {"c", r.c},
          {"in_regime", r.in_regime},
          {"f_order", r.f_order},
          {"f_min_degree", r.f_min_degree},
          {"gprime_order", r.gprime_order},
          {"gprime_min_degree", r.gprime_min_degree},
          {"f_order_ok", r.f_order_ok},
          {"f_degree_ok", r.f_degree_ok},
          {"gprime_order_ok", r.gprime_order_ok},
          {"gprime_degree_ok", r.gprime_degree_ok},
          {"f_bipartite", r.f_bipartite},
          {"gprime_bipartite", r.gprime_bipartite},
          {"f_2connected", r.f_2connected},
          {"gprime_2connected", r.gprime_2connected},
          {"attachment_violations", r.attachment_violations},
          {"f_subset_of_gprime", r.f_subset_of_gprime},
          {"all_ok", r.all_ok()}};
}

json to_json(const DenseCertificate& c) {
  return {{"f", c.f},
          {"f_bipartition", to_json(c.f_bip)},
          {"gprime", c.gprime},
          {"gprime_bipartition", to_json(c.gprime_bip)},
          {"gprime_trace", to_json(c.gprime_trace)},
          {"f_trace", to_json(c.f_trace)},
          {"report", to_json(c.report)}};
}

json to_json(const GnrCertificate& c) {
  json pieces = json::array();
  for (const auto& p : c.pieces) pieces.push_back({{"outside", p.outside}, {"attach", p.attach}});
  return {{"core", c.core},
          {"core_bipartition", to_json(c.core_bip)},
          {"pieces", pieces},
          {"outside_count", c.outside_count},
          {"coloring", c.coloring},
          {"colors_used", c.colors_used}};
}

json to_json(const StabilityOutcome& o) {
  json j = {{"outcome", to_string(o.kind)},
            {"trail", o.trail},
            {"edge_regime", o.edge_regime},
            {"order_regime", o.order_regime},
            {"diagnostic", o.diagnostic}};
  j["cycle"] = o.cycle ? to_json(*o.cycle) : json(nullptr);
  j["gnr"] = o.gnr ? to_json(*o.gnr) : json(nullptr);
  j["isomorphism"] =
      o.isomorphism ? json{{"n", o.isomorphism->n}, {"r", o.isomorphism->r}, {"map", o.isomorphism->map}} : json(nullptr);
  j["dense_report"] = o.dense ? to_json(*o.dense) : json(nullptr);
  j["bad_path"] = o.bad_path ? to_json(*o.bad_path) : json(nullptr);
  return j;
}

json to_json(const SpectralResult& s, bool with_perron) {
  json j = {{"lambda", s.lambda}, {"residual", s.residual}, {"iterations", s.iterations}, {"converged", s.converged}};
  if (with_perron) j["perron"] = s.perron;
  return j;
}

json to_json(const ExtremalRecord& r) {
  return {{"n", r.n},
          {"cycle_length", r.cycle_length},
          {"min_chromatic", r.min_chromatic},
          {"objective", r.objective},
          {"optimum", r.objective == "edges" ? json(static_cast<std::int64_t>(std::llround(r.optimum))) : json(r.optimum)},
          {"extremal", r.extremal},
          {"unique", r.unique()},
          {"enumerated", r.enumerated},
          {"qualifying", r.qualifying},
          {"feasible", r.feasible}};
}

json to_json(const QuarticPoly& p) {
  json coeffs = json::array();
  for (int i = 4; i >= 0; --i) coeffs.push_back(p.coeffs[i]);
  return {{"coefficients", coeffs}, {"text", p.to_string()}, {"provenance", p.provenance}};
}

json to_json(const CycleSearch& s) {
  return {{"status", to_string(s.status)},
          {"witness", s.witness ? to_json(*s.witness) : json(nullptr)},
          {"expansions", s.expansions}};
}

Bipartition bipartition_from_json(const json& j, std::size_t n) {
  std::vector<std::int8_t> labels(n, -1);
  for (int side = 0; side < 2; ++side)
    for (Vertex v : j.at("parts").at(side).get<VertexSet>()) {
      require(v >= 0 && static_cast<std::size_t>(v) < n, ErrorCode::parse_error, "bipartition vertex out of range");
      labels[v] = static_cast<std::int8_t>(side);
    }
  return Bipartition::from_labels(std::move(labels));
}

GnrCertificate gnr_certificate_from_json(const json& j) {
  GnrCertificate c;
  c.core = j.at("core").get<VertexSet>();
  c.coloring = j.at("coloring").get<std::vector<int>>();
  c.core_bip = bipartition_from_json(j.at("core_bipartition"), c.coloring.size());
  for (const auto& p : j.at("pieces")) c.pieces.push_back({p.at("outside").get<VertexSet>(), p.at("attach").get<Vertex>()});
  c.outside_count = j.at("outside_count").get<std::size_t>();
  c.colors_used = j.at("colors_used").get<std::size_t>();
  return c;
}

json make_envelope(const Graph* g, const std::string& kind, json params, json payload, const std::string& status) {
  json graph = nullptr;
  if (g != nullptr) graph = {{"sha256", graph_digest(*g)}, {"n", g->order()}, {"m", g->size()}};
  return {{"schema_version", kSchemaVersion},
          {"kind", kind},
          {"graph", graph},
          {"params", params.is_null() ? json::object() : std::move(params)},
          {"payload", std::move(payload)},
          {"status", status}};
}

namespace {

PeelTrace trace_from_json(const json& j) {
  PeelTrace t;
  const auto& th = j.at("threshold");
  t.threshold.num = th.at("num").get<std::uint64_t>();
  t.threshold.den = th.at("den").get<std::uint64_t>();
  t.threshold.mode = th.at("mode").get<std::string>() == "at_most" ? PeelMode::at_most : PeelMode::strictly_below;
  t.start = j.at("start").get<VertexSet>();
  for (const auto& d : j.at("deletions")) t.deletions.push_back({d.at(0).get<Vertex>(), d.at(1).get<std::size_t>()});
  t.survivors = j.at("survivors").get<VertexSet>();
  return t;
}

bool in_range(const Graph& g, const std::vector<Vertex>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return v >= 0 && static_cast<std::size_t>(v) < g.order(); });
}

void check_cycle_claim(const Graph& g, const json& w, std::size_t length, CertCheck& out) {
  CycleWitness cycle{w.at("vertices").get<std::vector<Vertex>>()};
  if (!in_range(g, cycle.vertices) || !verify_cycle(g, cycle, length))
    out.problems.push_back("cycle witness does not verify as a C_" + std::to_string(length));
}

void check_stability(const json& env, const Graph& g, CertCheck& out) {
  const auto& p = env.at("payload");
  const auto& params = env.at("params");
  const std::string kind = p.at("outcome").get<std::string>();
  const std::size_t k = params.at("k").get<std::size_t>();
  const std::size_t r = params.at("r").get<std::size_t>();
  if (kind == "CycleFound") {
    check_cycle_claim(g, p.at("cycle"), 2 * k + 1, out);
  } else if (kind == "GnrMember") {
    auto cert = gnr_certificate_from_json(p.at("gnr"));
    if (!verify_gnr_certificate(g, cert)) out.problems.push_back("suspension certificate fails its invariants");
    if (cert.outside_count + 2 > r) out.problems.push_back("outside count exceeds r-2");
  } else if (kind == "ExtremalMatch") {
    const auto& iso = p.at("isomorphism");
    const std::size_t n = iso.at("n").get<std::size_t>();
    const std::size_t rr = iso.at("r").get<std::size_t>();
    if (rr != r || n != g.order()) out.problems.push_back("isomorphism parameters do not match the graph");
    else if (!verify_isomorphism(g, extremal_suspension(n, rr), iso.at("map").get<std::vector<Vertex>>()))
      out.problems.push_back("isomorphism map does not carry edges to edges");
  } else if (kind == "Undecided") {
    out.notes.push_back("undecided outcome carries no claim to verify");
  } else {
    out.problems.push_back("unknown outcome " + kind);
  }
}

void check_dense(const json& env, const Graph& g, CertCheck& out) {
  const auto& p = env.at("payload");
  const std::size_t n = g.order();
  const PeelTrace gt = trace_from_json(p.at("gprime_trace"));
  const PeelTrace ft = trace_from_json(p.at("f_trace"));
  const VertexSet f = p.at("f").get<VertexSet>();
  const VertexSet gp = p.at("gprime").get<VertexSet>();
  if (!in_range(g, f) || !in_range(g, gp) || !in_range(g, gt.start) || !in_range(g, ft.start)) {
    out.problems.push_back("vertex out of range");
    return;
  }
  if (!replay(g, gt)) out.problems.push_back("G' peel trace does not replay");
  if (!replay(g, ft)) out.problems.push_back("F peel trace does not replay");
  if (gt.survivors != gp) out.problems.push_back("G' differs from its trace survivors");
  if (ft.survivors != f) out.problems.push_back("F differs from its trace survivors");
  if (ft.start != gp) out.problems.push_back("F peel did not start from G'");
  const Bipartition fb = bipartition_from_json(p.at("f_bipartition"), n);
  const Bipartition gb = bipartition_from_json(p.at("gprime_bipartition"), n);
  if (fb.vertices() != f || !is_valid_bipartition(g, fb)) out.problems.push_back("F bipartition invalid");
  if (gb.vertices() != gp || !is_valid_bipartition(g, gb)) out.problems.push_back("G' bipartition invalid");
  for (Vertex v : f)
    if (gb.contains(v) && fb.part_of[v] != gb.part_of[v]) {
      out.problems.push_back("F and G' colorings disagree");
      break;
    }
  const auto& rep = p.at("report");
  const std::size_t c = rep.at("c").get<std::size_t>();
  const std::size_t fmin = min_degree_within(g, f);
  const std::size_t gmin = min_degree_within(g, gp);
  auto claim = [&](const char* key, bool actual) {
    if (rep.at(key).get<bool>() != actual) out.problems.push_back(std::string("report field ") + key + " is wrong");
  };
  claim("f_order_ok", f.size() + 10 * c >= n);
  claim("f_degree_ok", !f.empty() && 5 * fmin > 2 * n);
  claim("gprime_order_ok", gp.size() + 2 * c >= n);
  claim("gprime_degree_ok", !gp.empty() && gmin >= 11 * c);
  claim("f_2connected", is_2_connected(g, f));
  claim("gprime_2connected", is_2_connected(g, gp));
  if (rep.at("f_min_degree").get<std::size_t>() != fmin || rep.at("gprime_min_degree").get<std::size_t>() != gmin)
    out.problems.push_back("report min degrees are wrong");
}

void check_spectral(const json& env, const Graph& g, CertCheck& out) {
  const auto& p = env.at("payload");
  const double tol = env.at("params").value("tol", kDefaultSpectralTol);
  const double lambda = p.at("lambda").get<double>();
  if (!p.contains("perron")) {
    if (std::fabs(spectral_radius(g, tol).lambda - lambda) > 1e-8) out.problems.push_back("lambda is not the spectral radius");
    out.notes.push_back("no Perron vector; lambda checked by recomputation");
    return;
  }
  const auto x = p.at("perron").get<std::vector<double>>();
  if (x.size() != g.order()) {
    out.problems.push_back("Perron vector has the wrong length");
    return;
  }
  double top = 0.0, residual = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] < 0) out.problems.push_back("Perron vector has a negative entry");
    top = std::max(top, x[v]);
    double sum = 0.0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) sum += x[w];
    residual = std::max(residual, std::fabs(lambda * x[v] - sum));
  }
  if (g.order() > 0 && std::fabs(top - 1.0) > 1e-12) out.problems.push_back("Perron vector max is not 1");
  // Allow for the rounding of the JSON round trip on top of the tolerance.
  if (residual > std::max(tol, p.value("residual", 0.0)) * 1.01 + 1e-12)
    out.problems.push_back("eigen-equation residual " + std::to_string(residual) + " exceeds tolerance");
  const double fresh = spectral_radius(g, tol).lambda;
  if (std::fabs(fresh - lambda) > 1e-8) out.problems.push_back("lambda is not the spectral radius");
}

void check_record(const json& env, CertCheck& out) {
  const auto& p = env.at("payload");
  const int n = p.at("n").get<int>();
  const std::size_t length = p.at("cycle_length").get<std::size_t>();
  const std::size_t r = p.at("min_chromatic").get<std::size_t>();
  const std::string objective = p.at("objective").get<std::string>();
  const double optimum = p.at("optimum").get<double>();
  for (const auto& s : p.at("extremal")) {
    Graph h = parse_graph6(s.get<std::string>());
    const std::string tag = "graph " + s.get<std::string>();
    if (static_cast<int>(h.order()) != n) out.problems.push_back(tag + " has the wrong order");
    if (find_cycle_exact(h, length).status != SearchStatus::none) out.problems.push_back(tag + " contains the cycle");
    if (r > 0 && chromatic_number(h).chromatic_number < r) out.problems.push_back(tag + " has small chromatic number");
    const double value = objective == "edges" ? static_cast<double>(h.size()) : spectral_radius(h, 1e-12).lambda;
    if (std::fabs(value - optimum) > 1e-9) out.problems.push_back(tag + " does not attain the optimum");
  }
  if (n <= 9) {
    ExtremalRecord fresh = objective == "edges" ? (r == 0 ? ex_bruteforce(n, length) : ex_chromatic_bruteforce(n, length, r))
                                                : spex_bruteforce(n, length, r);
    if (std::fabs(fresh.optimum - optimum) > 1e-9) out.problems.push_back("optimum differs from re-enumeration");
    if (fresh.extremal != p.at("extremal").get<std::vector<std::string>>())
      out.problems.push_back("extremal set differs from re-enumeration");
  } else {
    out.notes.push_back("optimality not re-enumerated beyond n = 9");
  }
}

}  // namespace

CertCheck check_certificate(const json& env, const Graph* g) {
  CertCheck out;
  try {
    if (env.at("schema_version").get<int>() != kSchemaVersion) {
      out.problems.push_back("unsupported schema version");
      return out;
    }
    const std::string kind = env.at("kind").get<std::string>();
    const auto& graph = env.at("graph");
    if (!graph.is_null()) {
      if (g == nullptr) {
        out.problems.push_back("certificate names a graph but none was supplied");
        return out;
      }
      if (graph.at("sha256").get<std::string>() != graph_digest(*g)) {
        out.problems.push_back("graph digest does not match the supplied graph");
        return out;
      }
    }
    if (kind == "stability_outcome") {
      check_stability(env, *g, out);
    } else if (kind == "dense_certificate") {
      check_dense(env, *g, out);
    } else if (kind == "gnr_certificate") {
      auto cert = gnr_certificate_from_json(env.at("payload"));
      if (!verify_gnr_certificate(*g, cert)) out.problems.push_back("suspension certificate fails its invariants");
      if (env.at("params").contains("r") && cert.outside_count + 2 > env.at("params").at("r").get<std::size_t>())
        out.problems.push_back("outside count exceeds r-2");
    } else if (kind == "cycle") {
      const auto& p = env.at("payload");
      const std::size_t length = env.at("params").at("length").get<std::size_t>();
      const std::string status = p.at("status").get<std::string>();
      if (status == "found") {
        check_cycle_claim(*g, p.at("witness"), length, out);
      } else {
        auto fresh = find_cycle_exact(*g, length);
        if (to_string(fresh.status) != status) out.problems.push_back("re-run search disagrees with " + status);
        out.notes.push_back("absence re-checked by exhaustive search");
      }
    } else if (kind == "bad_path") {
      const auto& p = env.at("payload");
      const VertexSet gp = p.at("gprime").get<VertexSet>();
      const Bipartition bip = bipartition_from_json(p.at("bipartition"), g->order());
      if (p.at("path").is_null()) {
        if (!is_bipartite(*g, containing_block(*g, gp))) out.problems.push_back("no bad path but the block is not bipartite");
      } else {
        PathWitness path{p.at("path").at("vertices").get<std::vector<Vertex>>()};
        if (!in_range(*g, path.vertices) || !is_bad_path(*g, gp, bip, path)) out.problems.push_back("path is not bad");
      }
    } else if (kind == "spectral") {
      check_spectral(env, *g, out);
    } else if (kind == "extremal_record") {
      check_record(env, out);
    } else {
      out.problems.push_back("unknown certificate kind " + kind);
    }
  } catch (const json::exception& e) {
    out.problems.push_back(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    out.problems.push_back(std::string("certificate rejected: ") + e.what());
  }
  out.valid = out.problems.empty();
  return out;
}

}  // namespace oddcycle
