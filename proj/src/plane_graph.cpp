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

#include "osn/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "osn/error.hpp"

namespace osn {

bool Face::touches(VertexId v) const {
  return std::binary_search(incident_vertices.begin(), incident_vertices.end(), v);
}

PlaneGraph PlaneGraph::build(const Adjacency& adjacency) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  names.reserve(adjacency.size());
  for (const auto& [name, neighbors] : adjacency) {
    if (!index.emplace(name, static_cast<VertexId>(names.size())).second) {
      fail(ErrorKind::NameCollision, "vertex '" + name + "' listed twice");
    }
    names.push_back(name);
  }
  std::vector<std::vector<VertexId>> rotation(names.size());
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    for (const auto& neighbor : adjacency[v].second) {
      auto it = index.find(neighbor);
      if (it == index.end()) {
        fail(ErrorKind::UnknownVertex,
             "'" + names[v] + "' lists unknown neighbor '" + neighbor + "'");
      }
      rotation[v].push_back(it->second);
    }
  }
  return from_rotation(std::move(names), std::move(rotation));
}

PlaneGraph PlaneGraph::from_rotation(std::vector<std::string> names,
                                     std::vector<std::vector<VertexId>> rotation) {
  const auto n = names.size();
  if (n < 2) fail(ErrorKind::TooSmall, "a plane graph needs at least two vertices");
  if (rotation.size() != n) {
    fail(ErrorKind::UnknownVertex, "rotation system size does not match vertex count");
  }

  PlaneGraph g;
  g.names_ = std::move(names);
  g.rotation_ = std::move(rotation);
  for (std::size_t v = 0; v < n; ++v) {
    if (!g.index_.emplace(g.names_[v], static_cast<VertexId>(v)).second) {
      fail(ErrorKind::NameCollision, "vertex '" + g.names_[v] + "' listed twice");
    }
  }

  // Position of every neighbor, for symmetry and reverse-dart lookup.
  std::vector<std::unordered_map<VertexId, int>> position(n);
  std::size_t darts = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& rot = g.rotation_[v];
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const VertexId u = rot[k];
      if (u < 0 || static_cast<std::size_t>(u) >= n) {
        fail(ErrorKind::UnknownVertex, "neighbor id out of range at '" + g.names_[v] + "'");
      }
      if (static_cast<std::size_t>(u) == v) {
        fail(ErrorKind::SelfLoop, "self-loop at '" + g.names_[v] + "'");
      }
      if (!position[v].emplace(u, static_cast<int>(k)).second) {
        fail(ErrorKind::ParallelEdge,
             "'" + g.names_[v] + "' lists '" + g.names_[u] + "' more than once");
      }
    }
    darts += rot.size();
  }
  g.reverse_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const VertexId u : g.rotation_[v]) {
      auto it = position[u].find(static_cast<VertexId>(v));
      if (it == position[u].end()) {
        fail(ErrorKind::AsymmetricRotation,
             "'" + g.names_[v] + "' lists '" + g.names_[u] + "' but not vice versa");
      }
      g.reverse_[v].push_back(it->second);
    }
  }
  g.num_edges_ = darts / 2;

  // Connectivity.
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const VertexId u : g.rotation_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) fail(ErrorKind::Disconnected, "graph is not connected");

  g.trace_faces();
  const auto euler = static_cast<long long>(n) - static_cast<long long>(g.num_edges_) +
                     static_cast<long long>(g.faces_.size());
  if (euler != 2) {
    fail(ErrorKind::NonPlanarRotation,
         "rotation system has V - E + F = " + std::to_string(euler) + ", expected 2");
  }
  return g;
}

void PlaneGraph::trace_faces() {
  const auto n = names_.size();
  dart_face_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) dart_face_[v].assign(rotation_[v].size(), -1);
  faces_.clear();

  for (std::size_t v = 0; v < n; ++v) {
    // Visit darts out of v by increasing head id so the first unvisited dart
    // met is the smallest of its face.
    std::vector<int> order(rotation_[v].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rotation_[v][a] < rotation_[v][b]; });
    for (const int start : order) {
      if (dart_face_[v][start] != -1) continue;
      Face face;
      face.id = static_cast<FaceId>(faces_.size());
      VertexId from = static_cast<VertexId>(v);
      int pos = start;
      while (dart_face_[from][pos] == -1) {
        dart_face_[from][pos] = face.id;
        const VertexId to = rotation_[from][pos];
        face.boundary.push_back({from, to});
        face.incident_vertices.push_back(from);
        // Next dart leaves `to` towards the successor of `from`.
        const int back = reverse_[from][pos];
        pos = (back + 1) % static_cast<int>(rotation_[to].size());
        from = to;
      }
      std::sort(face.incident_vertices.begin(), face.incident_vertices.end());
      face.incident_vertices.erase(
          std::unique(face.incident_vertices.begin(), face.incident_vertices.end()),
          face.incident_vertices.end());
      faces_.push_back(std::move(face));
    }
  }
}

std::optional<VertexId> PlaneGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId PlaneGraph::require(std::string_view name) const {
  auto v = find(name);
  if (!v) fail(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
  return *v;
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
  const auto& rot = rotation_.at(u);
  return std::find(rot.begin(), rot.end(), v) != rot.end();
}

const Face& PlaneGraph::face(FaceId id) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), id,
                             [](const Face& f, FaceId x) { return f.id < x; });
  if (it == faces_.end() || it->id != id) {
    fail(ErrorKind::UnknownFace, "no face with id " + std::to_string(id));
  }
  return *it;
}

bool PlaneGraph::has_face(FaceId id) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), id,
                             [](const Face& f, FaceId x) { return f.id < x; });
  return it != faces_.end() && it->id == id;
}

std::vector<FaceId> PlaneGraph::face_ids() const {
  std::vector<FaceId> ids;
  ids.reserve(faces_.size());
  for (const auto& f : faces_) ids.push_back(f.id);
  return ids;
}

FaceId PlaneGraph::corner_face(VertexId v, int position) const {
  const int d = static_cast<int>(rotation_.at(v).size());
  return dart_face_[v][(position + 1) % d];
}

std::vector<Corner> PlaneGraph::corners(VertexId v) const {
  std::vector<Corner> out;
  const int d = static_cast<int>(rotation_.at(v).size());
  out.reserve(d);
  for (int k = 0; k < d; ++k) out.push_back({v, k, corner_face(v, k)});
  return out;
}

PlaneGraph PlaneGraph::with_outer_face(FaceId id) const {
  face(id);
  PlaneGraph g = *this;
  g.outer_ = id;
  return g;
}

PlaneGraph PlaneGraph::without_outer_face() const {
  PlaneGraph g = *this;
  g.outer_.reset();
  return g;
}

PlaneGraph PlaneGraph::canonical() const {
  PlaneGraph g = *this;
  g.trace_faces();
  if (outer_) {
    const Dart d = face(*outer_).boundary.front();
    const auto& rot = rotation_[d.from];
    const int pos = static_cast<int>(std::find(rot.begin(), rot.end(), d.to) - rot.begin());
    g.outer_ = g.dart_face_[d.from][pos];
  }
  return g;
}

PlaneGraph PlaneGraph::relabeled(const std::vector<FaceId>& labels,
                                 std::optional<FaceId> outer) const {
  PlaneGraph g = *this;
  g.trace_faces();
  if (labels.size() != g.faces_.size()) {
    fail(ErrorKind::UnknownFace, "relabeling needs one label per face");
  }
  if (std::set<FaceId>(labels.begin(), labels.end()).size() != labels.size()) {
    fail(ErrorKind::UnknownFace, "face labels must be distinct");
  }
  for (auto& row : g.dart_face_) {
    for (auto& f : row) f = labels[f];
  }
  for (auto& face : g.faces_) face.id = labels[face.id];
  std::sort(g.faces_.begin(), g.faces_.end(),
            [](const Face& a, const Face& b) { return a.id < b.id; });
  g.outer_ = outer;
  if (outer) g.face(*outer);
  return g;
}

bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.names_ != b.names_ || a.rotation_ != b.rotation_ || a.outer_ != b.outer_) {
    return false;
  }
  return a.dart_face_ == b.dart_face_;
}

std::vector<Face> extract_faces(const PlaneGraph& graph) {
  return {graph.faces().begin(), graph.faces().end()};
}

std::size_t DualGraph::degree(FaceId node) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges) d += (a == node) + (b == node);
  return d;
}

DualGraph dual_graph_of(const PlaneGraph& graph) {
  DualGraph d;
  d.nodes = graph.face_ids();
  d.outer_node = graph.outer_face();
  for (VertexId v = 0; v < static_cast<VertexId>(graph.num_vertices()); ++v) {
    const auto rot = graph.rotation(v);
    for (int k = 0; k < static_cast<int>(rot.size()); ++k) {
      const VertexId u = rot[k];
      if (v > u) continue;
      // The two sides of edge {v, u}: the dart v->u and its reverse.
      const auto back = graph.rotation(u);
      const int r = static_cast<int>(std::find(back.begin(), back.end(), v) - back.begin());
      FaceId a = graph.dart_face(v, k);
      FaceId b = graph.dart_face(u, r);
      if (a > b) std::swap(a, b);
      d.edges.emplace_back(a, b);
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

DualGraph dual(const PlaneGraph& graph) {
  if (!graph.outer_face()) fail(ErrorKind::OuterFaceUnset, "no outer face designated");
  return dual_graph_of(graph);
}

DualGraph weak_dual(const PlaneGraph& graph) {
  DualGraph d = dual(graph);
  const FaceId outer = *d.outer_node;
  std::erase(d.nodes, outer);
  std::erase_if(d.edges, [&](const auto& e) { return e.first == outer || e.second == outer; });
  return d;
}

IncidenceGraph incidence_graph(const PlaneGraph& graph) {
  IncidenceGraph h;
  h.left.resize(graph.num_vertices());
  std::iota(h.left.begin(), h.left.end(), 0);
  h.right = graph.face_ids();
  for (const auto& f : graph.faces()) {
    for (const VertexId v : f.incident_vertices) h.edges.emplace_back(v, f.id);
  }
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

std::vector<VertexId> cut_vertices(const PlaneGraph& graph) {
  const auto n = graph.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int time = 0;
  // Iterative low-link DFS from vertex 0 (the graph is connected).
  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1, 0});
  disc[0] = low[0] = time++;
  int root_children = 0;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto rot = graph.rotation(top.v);
    if (top.next < rot.size()) {
      const VertexId u = rot[top.next++];
      if (u == top.parent) continue;
      if (disc[u] == -1) {
        disc[u] = low[u] = time++;
        if (top.v == 0) ++root_children;
        stack.push_back({u, top.v, 0});
      } else {
        low[top.v] = std::min(low[top.v], disc[u]);
      }
      continue;
    }
    const Frame done = top;
    stack.pop_back();
    if (!stack.empty()) {
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (parent.v != 0 && low[done.v] >= disc[parent.v]) is_cut[parent.v] = 1;
    }
  }
  if (root_children > 1) is_cut[0] = 1;
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

bool is_biconnected(const PlaneGraph& graph) {
  return graph.num_vertices() >= 3 && cut_vertices(graph).empty();
}

std::optional<FaceId> outerplane_face(const PlaneGraph& graph) {
  const auto n = graph.num_vertices();
  if (auto outer = graph.outer_face()) {
    if (graph.face(*outer).incident_vertices.size() == n) return outer;
  }
  for (const auto& f : graph.faces()) {
    if (f.incident_vertices.size() == n) return f.id;
  }
  return std::nullopt;
}

bool is_outerplane(const PlaneGraph& graph) { return outerplane_face(graph).has_value(); }

FaceId default_outer_face(const PlaneGraph& graph) {
  const Face* best = &graph.faces().front();
  for (const auto& f : graph.faces()) {
    if (f.length() > best->length()) best = &f;
  }
  return best->id;
}

PlaneGraph with_default_outer_face(const PlaneGraph& graph) {
  if (graph.outer_face()) return graph;
  return graph.with_outer_face(default_outer_face(graph));
}

std::size_t min_degree(const PlaneGraph& graph) {
  std::size_t best = graph.degree(0);
  for (VertexId v = 1; v < static_cast<VertexId>(graph.num_vertices()); ++v) {
    best = std::min(best, graph.degree(v));
  }
  return best;
}

bool is_maximal_planar(const PlaneGraph& graph) {
  const auto n = graph.num_vertices();
  if (n < 3 || graph.num_edges() != 3 * n - 6) return false;
  return std::all_of(graph.faces().begin(), graph.faces().end(), [](const Face& f) {
    return f.length() == 3 && f.incident_vertices.size() == 3;
  });
}

}  // namespace osn
