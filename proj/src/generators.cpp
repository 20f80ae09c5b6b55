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

#include "osn/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "osn/error.hpp"

namespace osn {

namespace {

using Rotation = std::vector<std::vector<VertexId>>;
using Point = std::array<double, 3>;

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Rotation of a convex polyhedron (origin inside) or of a straight-line
// drawing in the z = 0 plane: neighbors sorted by angle around the normal.
PlaneGraph from_geometry(const std::vector<Point>& points,
                         const std::vector<std::pair<VertexId, VertexId>>& edges, bool flat) {
  const auto n = points.size();
  std::vector<std::vector<VertexId>> neighbors(n);
  for (const auto& [u, v] : edges) {
    neighbors[u].push_back(v);
    neighbors[v].push_back(u);
  }
  Rotation rotation(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Point normal = flat ? Point{0, 0, 1} : points[v];
    const Point first = sub(points[neighbors[v].front()], points[v]);
    Point e1 = sub(first, {normal[0] * dot(first, normal) / dot(normal, normal),
                           normal[1] * dot(first, normal) / dot(normal, normal),
                           normal[2] * dot(first, normal) / dot(normal, normal)});
    const Point e2 = cross(normal, e1);
    std::vector<std::pair<double, VertexId>> by_angle;
    for (const VertexId u : neighbors[v]) {
      const Point d = sub(points[u], points[v]);
      by_angle.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), u);
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (const auto& [angle, u] : by_angle) rotation[v].push_back(u);
  }
  return with_default_outer_face(PlaneGraph::from_rotation(numbered(n), std::move(rotation)));
}

int position_of(const std::vector<VertexId>& rotation, VertexId v) {
  return static_cast<int>(std::find(rotation.begin(), rotation.end(), v) - rotation.begin());
}

// Puts a new vertex into every face of `faces`, in the given order, joined
// to all vertices of the face.
PlaneGraph stack_into_faces(const PlaneGraph& g, const std::vector<FaceId>& faces) {
  std::map<FaceId, VertexId> fresh;
  auto names = g.names();
  for (const FaceId f : faces) {
    fresh[f] = static_cast<VertexId>(names.size());
    names.push_back(std::to_string(names.size()));
  }
  Rotation rotation(names.size());
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    const auto rot = g.rotation(v);
    for (int k = 0; k < static_cast<int>(rot.size()); ++k) {
      rotation[v].push_back(rot[k]);
      if (auto it = fresh.find(g.corner_face(v, k)); it != fresh.end()) {
        rotation[v].push_back(it->second);
      }
    }
  }
  for (const auto& [f, x] : fresh) {
    // Walk order reversed.
    for (const auto& d : g.face(f).boundary) rotation[x].push_back(d.from);
    std::reverse(rotation[x].begin(), rotation[x].end());
  }
  return PlaneGraph::from_rotation(std::move(names), std::move(rotation));
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Index in [0, size) from the engine; modulo keeps results identical across
// standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t size) {
  return static_cast<std::size_t>(rng() % size);
}

std::vector<std::pair<VertexId, VertexId>> edge_list(const PlaneGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < static_cast<VertexId>(g.num_vertices()); ++u) {
    for (const VertexId v : g.rotation(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

void require(bool ok, const std::string& message) {
  if (!ok) fail(ErrorKind::InfeasibleParameters, message);
}

}  // namespace

std::size_t complete_3tree_order(int depth) {
  std::size_t power = 1;
  for (int i = 0; i <= depth; ++i) power *= 3;
  return (power + 5) / 2;
}

PlaneGraph k4() {
  Rotation rotation{{1, 2, 3}, {2, 0, 3}, {0, 1, 3}, {0, 2, 1}};
  PlaneGraph g = PlaneGraph::from_rotation(numbered(4), std::move(rotation));
  for (const auto& f : g.faces()) {
    if (!f.touches(3)) return g.with_outer_face(f.id);
  }
  return g;
}

PlaneGraph complete_3tree(int depth) {
  require(depth >= 0 && depth <= kMaxTreeDepth,
          "tree depth must lie in [0, " + std::to_string(kMaxTreeDepth) + "]");
  PlaneGraph g = k4();
  for (int level = 1; level <= depth; ++level) {
    std::vector<FaceId> inner;
    for (const auto& f : g.faces()) {
      if (f.id != *g.outer_face()) inner.push_back(f.id);
    }
    g = stack_into_faces(g, inner);
    for (const auto& f : g.faces()) {
      if (f.incident_vertices == std::vector<VertexId>{0, 1, 2}) {
        g = g.with_outer_face(f.id);
        break;
      }
    }
  }
  return g;
}

PlaneGraph cycle(std::size_t n) {
  require(n >= 3, "a cycle needs at least 3 vertices");
  std::vector<Point> points;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    points.push_back({std::cos(t), std::sin(t), 0});
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return from_geometry(points, edges, true);
}

PlaneGraph fan(std::size_t n) {
  require(n >= 3, "a fan needs at least 3 vertices");
  std::vector<Point> points{{0, 0, 0}};
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const double t = std::numbers::pi * static_cast<double>(i - 1) / static_cast<double>(n - 2);
    points.push_back({std::cos(t), std::sin(t), 0});
    edges.emplace_back(0, static_cast<VertexId>(i));
    if (i + 1 < n) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  }
  return from_geometry(points, edges, true);
}

PlaneGraph octahedron() {
  std::vector<Point> points{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < 6; ++u) {
    for (VertexId v = u + 1; v < 6; ++v) {
      if (u / 2 != v / 2) edges.emplace_back(u, v);
    }
  }
  return from_geometry(points, edges, false);
}

PlaneGraph icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Point> points;
  for (const double s : {-1.0, 1.0}) {
    for (const double t : {-1.0, 1.0}) {
      points.push_back({0, s, t * phi});
      points.push_back({s, t * phi, 0});
      points.push_back({t * phi, 0, s});
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < 12; ++u) {
    for (VertexId v = u + 1; v < 12; ++v) {
      const Point d = sub(points[u], points[v]);
      if (std::abs(dot(d, d) - 4.0) < 1e-9) edges.emplace_back(u, v);
    }
  }
  return from_geometry(points, edges, false);
}

PlaneGraph prism(std::size_t k) {
  require(k >= 3, "a prism needs k >= 3");
  std::vector<Point> points;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const double z : {-1.0, 1.0}) {
    for (std::size_t i = 0; i < k; ++i) {
      const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
      points.push_back({std::cos(t), std::sin(t), z});
    }
  }
  const auto kk = static_cast<VertexId>(k);
  for (VertexId i = 0; i < kk; ++i) {
    edges.emplace_back(i, (i + 1) % kk);
    edges.emplace_back(kk + i, kk + (i + 1) % kk);
    edges.emplace_back(i, kk + i);
  }
  return from_geometry(points, edges, false);
}

PlaneGraph cube() { return prism(4); }

PlaneGraph random_triangulation(std::size_t n, std::uint64_t seed) {
  require(n >= 4, "a random triangulation needs n >= 4");
  std::mt19937_64 rng(seed);
  PlaneGraph g = k4().without_outer_face();
  while (g.num_vertices() < n) {
    g = stack_into_faces(g, {g.faces()[pick(rng, g.num_faces())].id});
  }

  // Flips of edge {u, v} between triangles (u, v, a) and (v, u, b).
  const std::size_t attempts = 2 * n;
  for (std::size_t i = 0; i < attempts && n > 4; ++i) {
    const auto edges = edge_list(g);
    const auto [u, v] = edges[pick(rng, edges.size())];
    if (g.degree(u) <= 3 || g.degree(v) <= 3) continue;
    Rotation rotation = g.rotation_system();
    const auto& ru = rotation[u];
    const int p = position_of(ru, v);
    const int d = static_cast<int>(ru.size());
    const VertexId a = ru[(p + d - 1) % d];
    const VertexId b = ru[(p + 1) % d];
    if (a == b || g.adjacent(a, b)) continue;
    std::erase(rotation[u], v);
    std::erase(rotation[v], u);
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      auto& rx = rotation[x];
      const int pu = position_of(rx, u);
      const int pv = position_of(rx, v);
      const int dx = static_cast<int>(rx.size());
      // u and v are cyclically consecutive around x; insert y between them.
      const int after = (pu + 1) % dx == pv ? pu : pv;
      rx.insert(rx.begin() + after + 1, y);
    }
    g = PlaneGraph::from_rotation(g.names(), std::move(rotation));
  }
  return with_default_outer_face(g);
}

PlaneGraph random_biconnected(std::size_t n, std::size_t m, std::uint64_t seed) {
  require(n >= 4, "random biconnected graphs need n >= 4");
  require(m >= n && m <= 3 * n - 6, "edge count must lie in [n, 3n - 6]");
  constexpr int kAttempts = 64;
  std::uint64_t sub = seed;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    sub = splitmix(sub);
    std::mt19937_64 rng(sub);
    PlaneGraph g = random_triangulation(n, sub).without_outer_face();
    bool stuck = false;
    while (g.num_edges() > m && !stuck) {
      auto edges = edge_list(g);
      // Fisher-Yates with the portable index picker.
      for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[pick(rng, i)]);
      stuck = true;
      for (const auto& [u, v] : edges) {
        Rotation rotation = g.rotation_system();
        std::erase(rotation[u], v);
        std::erase(rotation[v], u);
        PlaneGraph smaller = PlaneGraph::from_rotation(g.names(), std::move(rotation));
        if (is_biconnected(smaller)) {
          g = std::move(smaller);
          stuck = false;
          break;
        }
      }
    }
    if (!stuck) return with_default_outer_face(g);
  }
  fail(ErrorKind::InfeasibleParameters,
       "no biconnected graph with " + std::to_string(m) + " edges reached after " +
           std::to_string(kAttempts) + " attempts");
}

PlaneGraph named(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t count) {
    require(p.size() == count, "family '" + spec.family + "' takes " + std::to_string(count) +
                                   " parameter(s)");
    for (const auto x : p) require(x >= 0, "parameters must be non-negative");
  };
  const std::string& f = spec.family;
  if (f == "k4") return arity(0), k4();
  if (f == "octahedron") return arity(0), octahedron();
  if (f == "icosahedron") return arity(0), icosahedron();
  if (f == "cube") return arity(0), cube();
  if (f == "cycle") return arity(1), cycle(static_cast<std::size_t>(p[0]));
  if (f == "fan") return arity(1), fan(static_cast<std::size_t>(p[0]));
  if (f == "prism") return arity(1), prism(static_cast<std::size_t>(p[0]));
  if (f == "3tree") return arity(1), complete_3tree(static_cast<int>(p[0]));
  if (f == "triangulation") {
    return arity(1), random_triangulation(static_cast<std::size_t>(p[0]), spec.seed);
  }
  if (f == "biconnected") {
    arity(2);
    return random_biconnected(static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1]),
                              spec.seed);
  }
  fail(ErrorKind::UnknownFamily, "unknown family '" + f + "'");
}

}  // namespace osn
