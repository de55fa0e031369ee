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

// Command-line front end. Everything goes through the C interface; machine
// output goes to stdout and diagnostics to stderr.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"
#include "oddcycle/oddcycle.h"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kVerificationFailed = 1, kUsage = 2, kLimit = 3 };

struct GraphDeleter {
  void operator()(oc_graph* g) const { oc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<oc_graph, GraphDeleter>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { oc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int exit_for(oc_status s) {
  switch (s) {
    case OC_OK: return kOk;
    case OC_SIZE_LIMIT:
    case OC_BUDGET_EXHAUSTED: return kLimit;
    default: return kUsage;
  }
}

// Reports a failed call and yields the process exit code.
int report(oc_status s) {
  std::cerr << "oddcycle: " << oc_status_name(s) << ": " << oc_last_error() << "\n";
  return exit_for(s);
}

struct Failure {
  int code;
};

void check(oc_status s) {
  if (s != OC_OK) throw Failure{report(s)};
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_text(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "oddcycle: io_error: cannot open " << path << "\n";
    throw Failure{kUsage};
  }
  return slurp(in);
}

bool looks_graph6(const std::string& path) {
  return path.size() > 3 && (path.ends_with(".g6") || path.ends_with(".graph6"));
}

GraphPtr load_graph(const std::string& path, bool graph6) {
  oc_graph* g = nullptr;
  if (graph6 || looks_graph6(path)) {
    std::istringstream lines(read_text(path));
    std::string line;
    while (std::getline(lines, line) && line.empty()) {
    }
    check(oc_graph_from_graph6(line.c_str(), &g));
  } else if (path == "-") {
    check(oc_graph_parse_edge_list(read_text(path).c_str(), &g));
  } else {
    check(oc_graph_read_file(path.c_str(), &g));
  }
  return GraphPtr(g);
}

void print_json(const std::string& text, bool pretty) {
  if (pretty) std::cout << json::parse(text).dump(2) << "\n";
  else std::cout << text << "\n";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) {
    std::cerr << "oddcycle: io_error: cannot write " << path << "\n";
    throw Failure{kUsage};
  }
}

std::string oracle_call(const char* query, const json& params) {
  OwnedString out;
  check(oc_oracle(query, params.dump().c_str(), &out.p));
  return out.str();
}

// Frozen expected values consumed by the acceptance and unit tests.
void write_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto records = [&](const char* query, std::size_t cycle, std::size_t r, int lo, int hi) {
    json all = json::array();
    for (int n = lo; n <= hi; ++n) all.push_back(json::parse(oracle_call(query, {{"n", n}, {"cycle", cycle}, {"r", r}})));
    return all.dump(1) + "\n";
  };
  write_file(dir / "ex_c5.json", records("ex", 5, 0, 4, 9));
  write_file(dir / "ex_c3.json", records("ex", 3, 0, 2, 9));
  write_file(dir / "ex_c3_chi3.json", records("ex", 3, 3, 5, 9));
  write_file(dir / "ex_c5_chi3.json", records("ex", 5, 3, 5, 9));
  write_file(dir / "spex_c5_chi3.json", records("spex", 5, 3, 5, 8));
  json counts = json::object();
  for (int n = 1; n <= 9; ++n) {
    counts["all"][std::to_string(n)] = json::parse(oracle_call("enumerate", {{"n", n}}))["count"];
    counts["triangle_free"][std::to_string(n)] = json::parse(oracle_call("enumerate", {{"n", n}, {"cycle", 3}}))["count"];
  }
  write_file(dir / "counts.json", counts.dump(1) + "\n");
  std::cerr << "oddcycle: fixtures written to " << dir << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd-cycle extremal graph toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", oc_version());
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a graph from a named family");
  std::string family, out_path, format = "edgelist";
  std::size_t n = 0, r = 2, a = 1, b = 1, c = 1;
  std::uint64_t seed = 1;
  double density = 0.7;
  int outside = -1;
  construct->add_option("family", family, "turan | extremal | star | c5 | gnr")
      ->required()
      ->check(CLI::IsMember({"turan", "extremal", "star", "c5", "gnr"}));
  construct->add_option("--n", n, "Order");
  construct->add_option("--r", r, "Part count or clique order");
  construct->add_option("--a", a, "c5 blow-up class size");
  construct->add_option("--b", b, "c5 blow-up class size");
  construct->add_option("--c", c, "c5 blow-up class size");
  construct->add_option("--seed", seed, "Random seed (gnr)");
  construct->add_option("--density", density, "Core edge density (gnr)");
  construct->add_option("--outside", outside, "Exact outside count (gnr)");
  construct->add_option("--format", format, "edgelist | graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  construct->add_option("-o,--output", out_path, "Write to a file instead of stdout");

  // graph-taking subcommands
  std::string graph_path;
  bool graph6 = false;
  auto graph_input = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "Edge-list file, graph6 file (.g6), or - for stdin")->required();
    sub->add_flag("--graph6", graph6, "Read the input as graph6");
  };

  auto* decompose = app.add_subcommand("decompose", "Run the stability decomposition");
  graph_input(decompose);
  std::size_t k = 2, cc = 0;
  std::uint64_t budget = 10000000;
  decompose->add_option("--k", k, "Forbidden cycle C_{2k+1}");
  decompose->add_option("--r", r, "Chromatic lower bound r");
  decompose->add_option("--c", cc, "Peel constant (0 selects 2k)");
  decompose->add_option("--budget", budget, "Search budget");

  auto* dense = app.add_subcommand("dense", "Extract the dense bipartite pair");
  graph_input(dense);
  dense->add_option("--k", k, "Forbidden cycle C_{2k+1}");
  dense->add_option("--c", cc, "Peel constant (0 selects 2k)");

  auto* spectral = app.add_subcommand("spectral", "Spectral radius with Perron vector");
  graph_input(spectral);
  std::string method = "power";
  double tol = 1e-10;
  std::size_t spectral_r = 0;
  spectral->add_option("--method", method, "power | quotient | both")->check(CLI::IsMember({"power", "quotient", "both"}));
  spectral->add_option("--tol", tol, "Residual tolerance");
  spectral->add_option("--r", spectral_r, "Report the quartic when the graph is the extremal suspension for r");

  auto* cycles = app.add_subcommand("cycles", "Exact search for a cycle of given length");
  graph_input(cycles);
  std::size_t length = 5;
  cycles->add_option("--length", length, "Cycle length")->required();
  cycles->add_option("--budget", budget, "Search budget");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive small-order oracles");
  std::string fixtures_dir;
  oracle->add_option("--fixtures", fixtures_dir, "Write frozen expected-value files to DIR");
  bool as_graph6 = false, envelope = false, list = false;
  int on = 0;
  std::size_t cycle = 5, oracle_r = 0;
  auto* ex = oracle->add_subcommand("ex", "Maximum edges over C_L-free graphs (optionally with chi >= r)");
  auto* spex = oracle->add_subcommand("spex", "Maximum spectral radius over C_L-free graphs with chi >= r");
  for (auto* sub : {ex, spex}) {
    sub->add_option("--n", on, "Order")->required();
    sub->add_option("--cycle", cycle, "Forbidden cycle length")->required();
    sub->add_option("--r", oracle_r, "Chromatic lower bound");
    sub->add_flag("--graph6", as_graph6, "Print extremal graphs as graph6 lines");
    sub->add_flag("--envelope", envelope, "Wrap the record in a certificate envelope");
  }
  auto* enumerate = oracle->add_subcommand("enumerate", "Count unlabeled graphs, optionally C_L-free");
  std::size_t enum_cycle = 0;
  enumerate->add_option("--n", on, "Order")->required();
  enumerate->add_option("--cycle", enum_cycle, "Restrict to C_L-free graphs");
  enumerate->add_flag("--list", list, "Print every graph as a graph6 line");
  auto* chi = oracle->add_subcommand("chi", "Exact chromatic number");
  graph_input(chi);

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  unsigned threads = 0;
  bool include_long = false, list_suites = false, json_out = false;
  verify->add_option("--suite", suite, "Suite name, or all");
  verify->add_option("--seed", seed, "Base seed");
  verify->add_option("--threads", threads, "Worker threads (default ODDCYCLE_THREADS or hardware)");
  verify->add_flag("--long", include_long, "Include the long suites when running all");
  verify->add_flag("--list", list_suites, "List suites and exit");
  verify->add_flag("--json", json_out, "Print full JSON reports");

  // certcheck
  auto* certcheck = app.add_subcommand("certcheck", "Re-verify a JSON certificate");
  std::string envelope_path;
  certcheck->add_option("certificate", envelope_path, "Certificate JSON file")->required();
  certcheck->add_option("graph", graph_path, "Graph the certificate refers to");
  certcheck->add_flag("--graph6", graph6, "Read the graph as graph6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) {
      json p = {{"n", n}, {"r", r}};
      if (family == "c5") p = {{"a", a}, {"b", b}, {"c", c}};
      if (family == "gnr") p.update({{"seed", seed}, {"density", density}, {"outside", outside}});
      oc_graph* raw = nullptr;
      check(oc_construct(family.c_str(), p.dump().c_str(), &raw));
      GraphPtr g(raw);
      OwnedString text;
      if (format == "graph6") check(oc_graph_to_graph6(g.get(), &text.p));
      else check(oc_graph_to_edge_list(g.get(), &text.p));
      std::string body = text.str();
      if (format == "graph6") body += "\n";
      if (out_path.empty()) std::cout << body;
      else write_file(out_path, body);
      return kOk;
    }
    if (*decompose) {
      auto g = load_graph(graph_path, graph6);
      OwnedString out;
      check(oc_decompose(g.get(), json{{"k", k}, {"r", r}, {"c", cc}, {"budget", budget}}.dump().c_str(), &out.p));
      print_json(out.str(), pretty);
      return kOk;
    }
    if (*dense) {
      auto g = load_graph(graph_path, graph6);
      OwnedString out;
      check(oc_dense_pair(g.get(), json{{"k", k}, {"r", 3}, {"c", cc}}.dump().c_str(), &out.p));
      print_json(out.str(), pretty);
      return json::parse(out.str())["status"] == "verified" ? kOk : kVerificationFailed;
    }
    if (*spectral) {
      auto g = load_graph(graph_path, graph6);
      json p = {{"method", method}, {"tol", tol}};
      if (spectral_r > 0) p["r"] = spectral_r;
      OwnedString out;
      check(oc_spectral(g.get(), p.dump().c_str(), &out.p));
      print_json(out.str(), pretty);
      return kOk;
    }
    if (*cycles) {
      auto g = load_graph(graph_path, graph6);
      OwnedString out;
      int found = 0;
      check(oc_find_cycle(g.get(), length, budget, &found, &out.p));
      print_json(out.str(), pretty);
      return found < 0 ? kLimit : kOk;
    }
    if (*oracle) {
      if (!fixtures_dir.empty()) {
        write_fixtures(fixtures_dir);
        if (oracle->get_subcommands().empty()) return kOk;
      }
      if (*chi) {
        auto g = load_graph(graph_path, graph6);
        OwnedString out;
        check(oc_chromatic(g.get(), &out.p));
        print_json(out.str(), pretty);
        return kOk;
      }
      if (*enumerate) {
        json result = json::parse(oracle_call("enumerate", {{"n", on}, {"cycle", enum_cycle}, {"list", list}}));
        if (list) {
          for (const auto& s : result["graphs"]) std::cout << s.get<std::string>() << "\n";
          std::cerr << "oddcycle: " << result["count"] << " graphs\n";
        } else {
          print_json(result.dump(), pretty);
        }
        return kOk;
      }
      if (*ex || *spex) {
        const char* query = *ex ? "ex" : "spex";
        if (*spex && oracle_r == 0) oracle_r = 1;
        json result = json::parse(
            oracle_call(query, {{"n", on}, {"cycle", cycle}, {"r", oracle_r}, {"envelope", envelope && !as_graph6}}));
        if (as_graph6) {
          for (const auto& s : result["extremal"]) std::cout << s.get<std::string>() << "\n";
        } else {
          print_json(result.dump(), pretty);
        }
        return kOk;
      }
      std::cerr << "oddcycle: oracle needs a query (ex, spex, enumerate, chi) or --fixtures\n";
      return kUsage;
    }
    if (*verify) {
      OwnedString catalog;
      check(oc_suite_list(&catalog.p));
      const json suites = json::parse(catalog.str());
      if (list_suites) {
        for (const auto& s : suites)
          std::cout << s["name"].get<std::string>() << (s["long"].get<bool>() ? " (long)" : "") << ": "
                    << s["description"].get<std::string>() << "\n";
        return kOk;
      }
      bool all_passed = true;
      for (const auto& s : suites) {
        const std::string name = s["name"];
        if (suite == "all" ? (s["long"].get<bool>() && !include_long) : name != suite) continue;
        OwnedString out;
        int passed = 0;
        check(oc_suite_run(name.c_str(), seed, threads, &passed, &out.p));
        json res = json::parse(out.str());
        all_passed = all_passed && passed;
        if (json_out) {
          print_json(out.str(), pretty);
        } else {
          std::printf("%s %s (%.2fs): %s\n", passed ? "PASS" : "FAIL", name.c_str(), res["seconds"].get<double>(),
                      res["summary"].get<std::string>().c_str());
        }
      }
      if (suite != "all" && std::none_of(suites.begin(), suites.end(), [&](const json& s) { return s["name"] == suite; })) {
        std::cerr << "oddcycle: unknown suite '" << suite << "'\n";
        return kUsage;
      }
      return all_passed ? kOk : kVerificationFailed;
    }
    if (*certcheck) {
      const std::string text = read_text(envelope_path);
      GraphPtr g;
      if (!graph_path.empty()) g = load_graph(graph_path, graph6);
      OwnedString out;
      int valid = 0;
      check(oc_certcheck(text.c_str(), g.get(), &valid, &out.p));
      print_json(out.str(), pretty);
      return valid ? kOk : kVerificationFailed;
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const json::exception& e) {
    std::cerr << "oddcycle: parse_error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
