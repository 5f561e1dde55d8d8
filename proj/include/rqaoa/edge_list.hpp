// Copyright 2026 The rqaoa-maxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Plain-text edge lists:
//
//   # comment
//   n <n_vertices>
//   <u> <v> <w>           one line per edge
//   sigma b0 b1 ... b_{n-1}   optional parity labels, last
//
// Fields are whitespace separated; blank lines and '#' lines are ignored.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "rqaoa/graph.hpp"

namespace rqaoa {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct EdgeListFile {
  WeightedGraph graph;
  std::optional<std::vector<std::uint8_t>> sigma;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace detail

inline EdgeListFile parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::optional<std::vector<std::uint8_t>> sigma;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = detail::split_fields(line);
    if (fields.empty() || fields[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (sigma) throw ParseError(line_no, "content after sigma block");

    if (fields[0] == "n") {
      if (n) throw ParseError(line_no, "repeated vertex-count header");
      if (fields.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      auto v = detail::parse_number<int>(fields[1]);
      if (!v || *v < 0) throw ParseError(line_no, "invalid vertex count");
      n = *v;
    } else if (fields[0] == "sigma") {
      if (!n) throw ParseError(line_no, "sigma before vertex-count header");
      if (static_cast<int>(fields.size()) - 1 != *n)
        throw ParseError(line_no, "sigma block needs exactly " + std::to_string(*n) + " labels");
      std::vector<std::uint8_t> s;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i] != "0" && fields[i] != "1")
          throw ParseError(line_no, "sigma labels must be 0 or 1");
        s.push_back(fields[i] == "1" ? 1 : 0);
      }
      sigma = std::move(s);
    } else {
      if (!n) throw ParseError(line_no, "edge before vertex-count header");
      if (fields.size() != 3) throw ParseError(line_no, "expected 'u v w'");
      auto u = detail::parse_number<int>(fields[0]);
      auto v = detail::parse_number<int>(fields[1]);
      auto w = detail::parse_number<double>(fields[2]);
      if (!u || !v || !w) throw ParseError(line_no, "malformed edge line");
      if (*u < 0 || *v < 0 || *u >= *n || *v >= *n)
        throw ParseError(line_no, "vertex id out of range");
      if (*u == *v) throw ParseError(line_no, "self-loop");
      if (*w == 0.0) throw ParseError(line_no, "zero weight");
      if (!std::isfinite(*w)) throw ParseError(line_no, "non-finite weight");
      edges.push_back({*u, *v, *w});
      edge_lines.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!n) throw ParseError(line_no, "missing 'n <count>' header");

  // Duplicate detection with line numbers before handing off to the graph.
  std::map<std::pair<int, int>, int> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto key = std::minmax(edges[i].u, edges[i].v);
    auto [it, inserted] = seen.emplace(std::pair(key.first, key.second), edge_lines[i]);
    if (!inserted)
      throw ParseError(edge_lines[i],
                       "duplicate edge (first seen on line " + std::to_string(it->second) + ")");
  }
  return {WeightedGraph(*n, std::move(edges)), std::move(sigma)};
}

inline std::string format_edge_list(const WeightedGraph& g,
                                    std::optional<std::span<const std::uint8_t>> sigma = {}) {
  std::ostringstream out;
  out << "n " << g.n_vertices() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << detail::format_double(e.w) << '\n';
  if (sigma) {
    out << "sigma";
    for (auto b : *sigma) out << ' ' << static_cast<int>(b);
    out << '\n';
  }
  return out.str();
}

inline EdgeListFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

inline WeightedGraph load_edge_list(const std::string& path) {
  return read_edge_list_file(path).graph;
}

inline void save_edge_list(const WeightedGraph& g, const std::string& path,
                           std::optional<std::span<const std::uint8_t>> sigma = {}) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_edge_list(g, sigma);
  if (!out) throw std::runtime_error("write failed for " + path);
}

inline void save_edge_list(const ParitySignedGraph& g, const std::string& path) {
  save_edge_list(g.graph(), path, g.sigma());
}

}  // namespace rqaoa
