// Copyright 2026 The osn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "osn/rot_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "osn/error.hpp"

namespace osn {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      const auto from = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({std::string(raw.substr(from, i - from)), static_cast<int>(from) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void parse_error(int line, int column, const std::string& message) {
  fail(ErrorKind::ParseError,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

long long to_number(const Line& line, const Token& token) {
  long long value = 0;
  const auto* end = token.text.data() + token.text.size();
  auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 0) {
    parse_error(line.number, token.column, "expected a non-negative integer, got '" + token.text + "'");
  }
  return value;
}

bool valid_name(std::string_view name) {
  return !name.empty() && name.find(':') == std::string_view::npos;
}

}  // namespace

PlaneGraph parse_rot(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) parse_error(1, 1, "empty input");

  const Line& header = lines.front();
  if (header.tokens.size() != 2) {
    parse_error(header.number, header.tokens.front().column, "header must be 'n m'");
  }
  const auto n = to_number(header, header.tokens[0]);
  const auto m = to_number(header, header.tokens[1]);
  if (lines.size() < static_cast<std::size_t>(n) + 1) {
    const auto& last = lines.back();
    parse_error(last.number, 1, "expected " + std::to_string(n) + " vertex lines");
  }

  Adjacency adjacency;
  std::set<std::string> seen;
  std::size_t darts = 0;
  for (long long i = 1; i <= n; ++i) {
    const Line& line = lines[static_cast<std::size_t>(i)];
    std::vector<Token> tokens = line.tokens;
    // Accept "v: ..." as well as "v : ...".
    std::string name;
    std::size_t next = 1;
    if (tokens[0].text.size() > 1 && tokens[0].text.back() == ':') {
      name = tokens[0].text.substr(0, tokens[0].text.size() - 1);
    } else if (tokens.size() > 1 && tokens[1].text == ":") {
      name = tokens[0].text;
      next = 2;
    } else {
      parse_error(line.number, tokens[0].column, "expected '<vertex>: <neighbors>'");
    }
    if (!valid_name(name)) parse_error(line.number, tokens[0].column, "bad vertex name");
    if (!seen.insert(name).second) {
      parse_error(line.number, tokens[0].column, "vertex '" + name + "' listed twice");
    }
    std::vector<std::string> neighbors;
    std::set<std::string> local;
    for (std::size_t k = next; k < tokens.size(); ++k) {
      if (!valid_name(tokens[k].text)) {
        parse_error(line.number, tokens[k].column, "bad neighbor name '" + tokens[k].text + "'");
      }
      if (!local.insert(tokens[k].text).second) {
        parse_error(line.number, tokens[k].column,
                    "duplicate neighbor '" + tokens[k].text + "' of '" + name + "'");
      }
      neighbors.push_back(tokens[k].text);
    }
    darts += neighbors.size();
    adjacency.emplace_back(std::move(name), std::move(neighbors));
  }

  std::optional<FaceId> outer;
  std::size_t at = static_cast<std::size_t>(n) + 1;
  if (at < lines.size()) {
    const Line& marker = lines[at];
    if (marker.tokens.size() != 1 || marker.tokens[0].text != "faces") {
      parse_error(marker.number, marker.tokens[0].column, "expected 'faces' or end of input");
    }
    for (++at; at < lines.size(); ++at) {
      const Line& line = lines[at];
      if (line.tokens.size() != 2 || line.tokens[0].text != "outer:") {
        parse_error(line.number, line.tokens[0].column, "expected 'outer: <face id>'");
      }
      if (outer) parse_error(line.number, line.tokens[0].column, "outer face given twice");
      outer = static_cast<FaceId>(to_number(line, line.tokens[1]));
    }
  }

  if (darts != 2 * static_cast<std::size_t>(m)) {
    parse_error(header.number, header.tokens[1].column,
                "header announces " + std::to_string(m) + " edges, rotations list " +
                    std::to_string(darts) + " edge ends");
  }
  PlaneGraph graph = PlaneGraph::build(adjacency);
  if (outer) {
    if (!graph.has_face(*outer)) {
      fail(ErrorKind::ParseError, "outer face " + std::to_string(*outer) + " does not exist");
    }
    graph = graph.with_outer_face(*outer);
  }
  return graph;
}

std::string format_rot(const PlaneGraph& input) {
  const PlaneGraph graph = input.canonical();
  std::ostringstream out;
  out << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  for (VertexId v = 0; v < static_cast<VertexId>(graph.num_vertices()); ++v) {
    out << graph.name(v) << ':';
    for (const VertexId u : graph.rotation(v)) out << ' ' << graph.name(u);
    out << '\n';
  }
  if (graph.outer_face()) {
    out << "faces\n";
    for (const auto& f : graph.faces()) {
      out << "# " << f.id << ':';
      for (const auto& d : f.boundary) out << ' ' << graph.name(d.from);
      out << '\n';
    }
    out << "outer: " << *graph.outer_face() << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

PlaneGraph read_rot_file(const std::string& path) { return parse_rot(read_text_file(path)); }

}  // namespace osn
