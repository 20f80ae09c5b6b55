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

#include "osn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "osn/error.hpp"
#include "osn/rot_format.hpp"

namespace osn {

namespace {

constexpr int kLayoutAttempts = 5;
constexpr int kMaxSweeps = 20000;
constexpr double kTolerance = 1e-12;
constexpr double kMinSeparation = 1e-6;
constexpr double kCanvas = 400.0;
constexpr double kMargin = 30.0;

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

bool degenerate(const std::vector<Position>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (std::hypot(p[i][0] - p[j][0], p[i][1] - p[j][1]) < kMinSeparation) return true;
    }
  }
  return false;
}

}  // namespace

FaceId layout_face(const PlaneGraph& graph) {
  if (auto f = outerplane_face(graph)) return *f;
  if (auto f = graph.outer_face()) return *f;
  return default_outer_face(graph);
}

std::vector<Position> tutte_layout(const PlaneGraph& graph, FaceId outer) {
  const auto n = graph.num_vertices();
  std::vector<char> fixed(n, 0);
  std::vector<VertexId> ring;
  for (const auto& d : graph.face(outer).boundary) {
    if (!fixed[d.from]) {
      fixed[d.from] = 1;
      ring.push_back(d.from);
    }
  }

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> jitter(0.5, 1.5);
  for (int attempt = 0; attempt < kLayoutAttempts; ++attempt) {
    std::vector<Position> pos(n, Position{0, 0});
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
      pos[ring[i]] = {std::cos(t), std::sin(t)};
    }
    // Edge weights, symmetric; all ones on the first attempt.
    std::vector<std::vector<double>> weight(n);
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
      weight[v].assign(graph.degree(v), 1.0);
    }
    if (attempt > 0) {
      for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        const auto rot = graph.rotation(v);
        for (std::size_t k = 0; k < rot.size(); ++k) {
          if (v < rot[k]) {
            const double w = jitter(rng);
            weight[v][k] = w;
            const auto back = graph.rotation(rot[k]);
            for (std::size_t j = 0; j < back.size(); ++j) {
              if (back[j] == v) weight[rot[k]][j] = w;
            }
          }
        }
      }
    }
    // Gauss-Seidel sweeps.
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      double moved = 0;
      for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        if (fixed[v]) continue;
        const auto rot = graph.rotation(v);
        double x = 0, y = 0, total = 0;
        for (std::size_t k = 0; k < rot.size(); ++k) {
          x += weight[v][k] * pos[rot[k]][0];
          y += weight[v][k] * pos[rot[k]][1];
          total += weight[v][k];
        }
        const Position next{x / total, y / total};
        moved = std::max(moved, std::hypot(next[0] - pos[v][0], next[1] - pos[v][1]));
        pos[v] = next;
      }
      if (moved < kTolerance) break;
    }
    if (!degenerate(pos)) return pos;
  }
  fail(ErrorKind::LayoutFailure, "barycentric layout places two vertices on the same point");
}

std::string svg_document(const PlaneGraph& graph) {
  const auto pos = tutte_layout(graph, layout_face(graph));
  auto sx = [](const Position& p) { return kMargin + (p[0] + 1) / 2 * kCanvas; };
  auto sy = [](const Position& p) { return kMargin + (1 - p[1]) / 2 * kCanvas; };
  const double size = kCanvas + 2 * kMargin;

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g stroke=\"#444\" stroke-width=\"1.5\">\n";
  for (VertexId v = 0; v < static_cast<VertexId>(graph.num_vertices()); ++v) {
    for (const VertexId u : graph.rotation(v)) {
      if (v > u) continue;
      out << "<line x1=\"" << sx(pos[v]) << "\" y1=\"" << sy(pos[v]) << "\" x2=\"" << sx(pos[u])
          << "\" y2=\"" << sy(pos[u]) << "\"/>\n";
    }
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (VertexId v = 0; v < static_cast<VertexId>(graph.num_vertices()); ++v) {
    out << "<circle cx=\"" << sx(pos[v]) << "\" cy=\"" << sy(pos[v])
        << "\" r=\"6\" fill=\"#8ecae6\" stroke=\"#023047\"/>\n"
        << "<text x=\"" << sx(pos[v]) << "\" y=\"" << sy(pos[v]) - 9 << "\">"
        << escape(graph.name(v)) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void emit_svg(const PlaneGraph& graph, const std::string& path) {
  write_text_file(path, svg_document(graph));
}

}  // namespace osn
