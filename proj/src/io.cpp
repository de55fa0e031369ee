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

#include "oddcycle/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "oddcycle/error.hpp"

namespace oddcycle {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view token, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected integer, got '" +
                                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == 'c' || line.front() == '#') continue;
    auto tokens = split_ws(line);
    if (tokens[0] == "p") {
      require(!have_header, ErrorCode::parse_error, "line " + std::to_string(line_no) + ": duplicate header");
      require(tokens.size() == 3, ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected 'p <n> <m>'");
      n = to_int(tokens[1], line_no);
      m = to_int(tokens[2], line_no);
      require(n >= 0 && m >= 0, ErrorCode::parse_error, "negative header values");
      have_header = true;
    } else if (tokens[0] == "e") {
      require(have_header, ErrorCode::parse_error, "line " + std::to_string(line_no) + ": edge before header");
      require(tokens.size() == 3, ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      long long u = to_int(tokens[1], line_no);
      long long v = to_int(tokens[2], line_no);
      require(u >= 0 && v >= 0 && u < n && v < n, ErrorCode::parse_error,
              "line " + std::to_string(line_no) + ": endpoint out of range");
      require(u != v, ErrorCode::parse_error, "line " + std::to_string(line_no) + ": self-loop");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    } else {
      fail(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": unknown record '" + std::string(tokens[0]) + "'");
    }
  }
  require(have_header, ErrorCode::parse_error, "missing 'p <n> <m>' header");
  require(static_cast<long long>(edges.size()) == m, ErrorCode::parse_error,
          "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const Error& e) {
    fail(ErrorCode::parse_error, e.what());
  }
}

Graph read_edge_list(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::io_error, "cannot open '" + path + "'");
  return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "p " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e ";
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::io_error, "cannot write '" + path + "'");
  out << to_edge_list(g);
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  require(!line.empty(), ErrorCode::parse_error, "empty graph6 string");
  for (char ch : line) {
    require(ch >= 63 && ch <= 126, ErrorCode::parse_error, "graph6 byte out of range");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != 126) {
    n = static_cast<std::size_t>(line[0] - 63);
    pos = 1;
  } else {
    require(line.size() >= 4 && line[1] != 126, ErrorCode::parse_error, "unsupported graph6 order encoding");
    n = (static_cast<std::size_t>(line[1] - 63) << 12) | (static_cast<std::size_t>(line[2] - 63) << 6) |
        static_cast<std::size_t>(line[3] - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  require(line.size() - pos == (bits + 5) / 6, ErrorCode::parse_error, "graph6 length does not match order");
  GraphBuilder builder(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) builder.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return builder.build();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  require(n <= 258047, ErrorCode::size_limit, "graph6 writer supports n <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::string graph_digest(const Graph& g) {
  const std::string text = to_edge_list(g);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  require(EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) == 1, ErrorCode::io_error,
          "sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

}  // namespace oddcycle
