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

#include "osn/split_engine.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "osn/error.hpp"

namespace osn {

namespace {

int position_of(std::span<const VertexId> rotation, VertexId v) {
  return static_cast<int>(std::find(rotation.begin(), rotation.end(), v) - rotation.begin());
}

std::optional<int> first_corner_of(const PlaneGraph& g, VertexId v, FaceId f) {
  const int d = static_cast<int>(g.degree(v));
  for (int k = 0; k < d; ++k) {
    if (g.corner_face(v, k) == f) return k;
  }
  return std::nullopt;
}

}  // namespace

std::string first_copy_name(std::string_view vertex) { return std::string(vertex) + ".1"; }
std::string second_copy_name(std::string_view vertex) { return std::string(vertex) + ".2"; }

SplitResult split_at_corners(const PlaneGraph& graph, VertexId vertex, int corner_a,
                             int corner_b) {
  const int d = static_cast<int>(graph.degree(vertex));
  const std::string& name = graph.name(vertex);
  if (d < 2) fail(ErrorKind::DanglingVertex, "'" + name + "' has degree below 2");
  if (corner_a < 0 || corner_a >= d || corner_b < 0 || corner_b >= d) {
    fail(ErrorKind::NotIncident, "corner position out of range at '" + name + "'");
  }
  const FaceId face_a = graph.corner_face(vertex, corner_a);
  const FaceId face_b = graph.corner_face(vertex, corner_b);
  if (face_a == face_b) {
    fail(ErrorKind::SameFace, "both gaps of '" + name + "' lie in face " + std::to_string(face_a));
  }

  SplitOp op{name, face_a, face_b, first_copy_name(name), second_copy_name(name)};
  if (graph.find(op.copy_1) || graph.find(op.copy_2)) {
    fail(ErrorKind::NameCollision, "copy names of '" + name + "' already in use");
  }

  // copy_2 takes rot[a+1 .. b], copy_1 takes rot[b+1 .. a] (cyclic).
  const auto rot = graph.rotation(vertex);
  std::vector<VertexId> second, first;
  for (int k = (corner_a + 1) % d;; k = (k + 1) % d) {
    second.push_back(rot[k]);
    if (k == corner_b) break;
  }
  for (int k = (corner_b + 1) % d;; k = (k + 1) % d) {
    first.push_back(rot[k]);
    if (k == corner_a) break;
  }

  const auto n = static_cast<VertexId>(graph.num_vertices());
  const VertexId second_id = n;
  std::vector<char> goes_second(n, 0);
  for (const VertexId w : second) goes_second[w] = 1;
  auto owner = [&](VertexId w) { return goes_second[w] ? second_id : vertex; };

  std::vector<std::string> names = graph.names();
  names[vertex] = op.copy_1;
  names.push_back(op.copy_2);
  std::vector<std::vector<VertexId>> rotation = graph.rotation_system();
  rotation[vertex] = first;
  rotation.push_back(second);
  for (const VertexId w : second) {
    for (auto& x : rotation[w]) {
      if (x == vertex) x = second_id;
    }
  }
  const PlaneGraph fresh = PlaneGraph::from_rotation(std::move(names), std::move(rotation));

  // Carry face ids over through the dart correspondence.
  const FaceId merged = std::min(face_a, face_b);
  std::vector<FaceId> labels(fresh.num_faces(), -1);
  auto new_face_of = [&](Dart dart) {
    VertexId from = dart.from, to = dart.to;
    if (from == vertex) from = owner(to);
    if (to == vertex) to = owner(from);
    return fresh.dart_face(from, position_of(fresh.rotation(from), to));
  };
  for (const auto& f : graph.faces()) {
    const FaceId target = new_face_of(f.boundary.front());
    const FaceId label = (f.id == face_a || f.id == face_b) ? merged : f.id;
    if (labels[target] != -1 && labels[target] != label) {
      fail(ErrorKind::NotIncident, "split of '" + name + "' did not merge the chosen faces");
    }
    labels[target] = label;
  }
  std::optional<FaceId> outer = graph.outer_face();
  if (outer && (*outer == face_a || *outer == face_b)) outer = merged;
  return {fresh.relabeled(labels, outer), op};
}

SplitResult split_vertex(const PlaneGraph& graph, std::string_view vertex, FaceId face_a,
                         FaceId face_b) {
  const VertexId v = graph.require(vertex);
  if (face_a == face_b) {
    fail(ErrorKind::SameFace, "cannot split '" + std::string(vertex) + "' within one face");
  }
  if (graph.degree(v) < 2) {
    fail(ErrorKind::DanglingVertex, "'" + std::string(vertex) + "' has degree below 2");
  }
  for (const FaceId f : {face_a, face_b}) {
    if (!graph.has_face(f)) fail(ErrorKind::UnknownFace, "no face " + std::to_string(f));
  }
  const auto ka = first_corner_of(graph, v, face_a);
  const auto kb = first_corner_of(graph, v, face_b);
  if (!ka || !kb) {
    fail(ErrorKind::NotIncident, "'" + std::string(vertex) + "' is not on both faces " +
                                     std::to_string(face_a) + " and " + std::to_string(face_b));
  }
  return split_at_corners(graph, v, *ka, *kb);
}

MergeResult merge_faces_at_vertex(const PlaneGraph& graph, std::string_view vertex,
                                  std::span<const FaceId> faces) {
  const VertexId v = graph.require(vertex);
  std::vector<FaceId> set(faces.begin(), faces.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());

  const int d = static_cast<int>(graph.degree(v));
  std::vector<std::pair<int, FaceId>> around;  // (first gap position, face)
  for (const FaceId f : set) {
    auto k = first_corner_of(graph, v, f);
    if (!k) {
      fail(ErrorKind::NotIncident, "face " + std::to_string(f) + " does not touch '" +
                                       std::string(vertex) + "'");
    }
    around.emplace_back(*k, f);
  }
  MergeResult result{graph, {}};
  if (set.size() <= 1) return result;

  // Clockwise order starting at the smallest face.
  const int start = around.front().first;
  std::sort(around.begin(), around.end(), [&](const auto& x, const auto& y) {
    return (x.first - start + d) % d < (y.first - start + d) % d;
  });
  const FaceId base = set.front();

  std::vector<std::string> copies{std::string(vertex)};
  for (std::size_t i = 1; i < around.size(); ++i) {
    const FaceId target = around[i].second;
    const PlaneGraph& g = result.graph;
    bool done = false;
    for (std::size_t c = 0; c < copies.size() && !done; ++c) {
      const VertexId u = g.require(copies[c]);
      const auto ka = first_corner_of(g, u, base);
      const auto kb = first_corner_of(g, u, target);
      if (!ka || !kb) continue;
      auto split = split_at_corners(g, u, *ka, *kb);
      copies.erase(copies.begin() + static_cast<std::ptrdiff_t>(c));
      copies.push_back(split.op.copy_1);
      copies.push_back(split.op.copy_2);
      result.ops.push_back(split.op);
      result.graph = std::move(split.graph);
      done = true;
    }
    if (!done) {
      fail(ErrorKind::NotIncident, "no copy of '" + std::string(vertex) +
                                       "' touches faces " + std::to_string(base) + " and " +
                                       std::to_string(target));
    }
  }
  return result;
}

namespace {

// Faces of `faces` adjacent (sharing a vertex) to face i, as index lists.
std::vector<std::vector<std::size_t>> face_touch_graph(const PlaneGraph& graph,
                                                       std::span<const FaceId> faces) {
  std::vector<std::vector<std::size_t>> at_vertex(graph.num_vertices());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const VertexId v : graph.face(faces[i]).incident_vertices) at_vertex[v].push_back(i);
  }
  std::vector<std::vector<std::size_t>> adj(faces.size());
  for (const auto& list : at_vertex) {
    for (std::size_t i = 1; i < list.size(); ++i) {
      adj[list[0]].push_back(list[i]);
      adj[list[i]].push_back(list[0]);
    }
  }
  return adj;
}

}  // namespace

bool covers_all_vertices(const PlaneGraph& graph, std::span<const FaceId> faces) {
  std::vector<char> hit(graph.num_vertices(), 0);
  for (const FaceId f : faces) {
    if (!graph.has_face(f)) return false;
    for (const VertexId v : graph.face(f).incident_vertices) hit[v] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_connected_face_cover(const PlaneGraph& graph, std::span<const FaceId> faces) {
  if (faces.empty() || !covers_all_vertices(graph, faces)) return false;
  // With every vertex covered, H[S + V] is connected iff the faces of S are
  // connected through shared vertices.
  const auto adj = face_touch_graph(graph, faces);
  std::vector<char> seen(faces.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (const auto j : adj[i]) {
      if (!seen[j]) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == faces.size();
}

FaceCover make_face_cover(const PlaneGraph& graph, std::vector<FaceId> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.empty()) fail(ErrorKind::InvalidCover, "empty face set");
  for (const FaceId f : faces) {
    if (!graph.has_face(f)) fail(ErrorKind::InvalidCover, "unknown face " + std::to_string(f));
  }

  const auto n = graph.num_vertices();
  std::vector<std::vector<FaceId>> faces_at(n);
  for (const FaceId f : faces) {
    for (const VertexId v : graph.face(f).incident_vertices) faces_at[v].push_back(f);
  }

  FaceCover cover;
  cover.faces = faces;
  cover.root = faces.front();
  std::set<FaceId> seen_faces{cover.root};
  std::vector<char> seen_vertices(n, 0);
  std::deque<FaceId> queue{cover.root};
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    for (const VertexId v : graph.face(f).incident_vertices) {
      if (seen_vertices[v]) continue;
      seen_vertices[v] = 1;
      cover.tree.push_back({v, f});
      for (const FaceId g : faces_at[v]) {
        if (seen_faces.insert(g).second) {
          cover.tree.push_back({v, g});
          queue.push_back(g);
        }
      }
    }
  }
  if (std::find(seen_vertices.begin(), seen_vertices.end(), 0) != seen_vertices.end()) {
    fail(ErrorKind::InvalidCover, "faces do not cover every vertex or are not connected");
  }
  if (seen_faces.size() != faces.size()) {
    fail(ErrorKind::InvalidCover, "faces are not connected in the incidence graph");
  }
  return cover;
}

namespace {

void validate_certificate(const PlaneGraph& graph, const FaceCover& cover) {
  if (!std::is_sorted(cover.faces.begin(), cover.faces.end()) ||
      std::adjacent_find(cover.faces.begin(), cover.faces.end()) != cover.faces.end()) {
    fail(ErrorKind::InvalidCover, "cover faces must be sorted and distinct");
  }
  if (!is_connected_face_cover(graph, cover.faces)) {
    fail(ErrorKind::InvalidCover, "not a connected face cover");
  }
  const auto n = graph.num_vertices();
  if (cover.tree.size() != cover.faces.size() + n - 1) {
    fail(ErrorKind::InvalidCover, "certificate is not a spanning tree");
  }
  // Union-find over vertices [0, n) and faces [n, n + |S|).
  std::vector<std::size_t> parent(n + cover.faces.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : cover.tree) {
    auto it = std::lower_bound(cover.faces.begin(), cover.faces.end(), e.face);
    if (it == cover.faces.end() || *it != e.face || e.vertex < 0 ||
        static_cast<std::size_t>(e.vertex) >= n || !graph.face(e.face).touches(e.vertex)) {
      fail(ErrorKind::InvalidCover, "certificate edge is not an incidence of the cover");
    }
    const auto a = root(static_cast<std::size_t>(e.vertex));
    const auto b = root(n + static_cast<std::size_t>(it - cover.faces.begin()));
    if (a == b) fail(ErrorKind::InvalidCover, "certificate contains a cycle");
    parent[a] = b;
  }
  if (!std::binary_search(cover.faces.begin(), cover.faces.end(), cover.root)) {
    fail(ErrorKind::InvalidCover, "certificate root is not a cover face");
  }
}

}  // namespace

SplitSequence realize_cover(const PlaneGraph& graph, const FaceCover& cover) {
  validate_certificate(graph, cover);

  const auto n = graph.num_vertices();
  std::vector<std::vector<FaceId>> faces_of_vertex(n);
  std::map<FaceId, std::vector<VertexId>> vertices_of_face;
  for (const auto& e : cover.tree) {
    faces_of_vertex[e.vertex].push_back(e.face);
    vertices_of_face[e.face].push_back(e.vertex);
  }
  for (auto& list : faces_of_vertex) std::sort(list.begin(), list.end());
  for (auto& [f, list] : vertices_of_face) std::sort(list.begin(), list.end());

  // Root-to-leaf order of the vertex side of the tree.
  std::vector<VertexId> order;
  std::set<FaceId> seen_faces{cover.root};
  std::vector<char> seen_vertices(n, 0);
  std::deque<FaceId> queue{cover.root};
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    for (const VertexId v : vertices_of_face[f]) {
      if (seen_vertices[v]) continue;
      seen_vertices[v] = 1;
      order.push_back(v);
      for (const FaceId g : faces_of_vertex[v]) {
        if (seen_faces.insert(g).second) queue.push_back(g);
      }
    }
  }

  // Current id of every original cover face: merged faces carry the
  // smallest id of their class.
  std::map<FaceId, FaceId> current;
  for (const FaceId f : cover.faces) current[f] = f;

  SplitSequence seq;
  PlaneGraph g = graph;
  for (const VertexId v : order) {
    const auto& tree_faces = faces_of_vertex[v];
    if (tree_faces.size() < 2) continue;  // leaves of the tree are never split
    std::vector<FaceId> ids;
    for (const FaceId f : tree_faces) ids.push_back(current[f]);
    auto merged = merge_faces_at_vertex(g, graph.name(v), ids);
    const FaceId into = *std::min_element(ids.begin(), ids.end());
    for (auto& [orig, cur] : current) {
      if (std::find(ids.begin(), ids.end(), cur) != ids.end()) cur = into;
    }
    for (const auto& op : merged.ops) {
      auto it = seq.origin.find(op.vertex);
      const std::string root_name = it == seq.origin.end() ? op.vertex : it->second;
      seq.origin[op.copy_1] = root_name;
      seq.origin[op.copy_2] = root_name;
      seq.ops.push_back(op);
    }
    g = std::move(merged.graph);
  }
  if (seq.ops.size() + 1 != cover.faces.size()) {
    fail(ErrorKind::InvalidCover, "realization produced " + std::to_string(seq.ops.size()) +
                                      " splits for a cover of size " +
                                      std::to_string(cover.faces.size()));
  }
  return seq;
}

PlaneGraph replay(const PlaneGraph& graph, const SplitSequence& sequence) {
  PlaneGraph g = graph;
  for (std::size_t i = 0; i < sequence.ops.size(); ++i) {
    const auto& op = sequence.ops[i];
    try {
      if (!g.find(op.vertex)) {
        fail(ErrorKind::UnknownVertex, "no vertex named '" + op.vertex + "'");
      }
      auto step = split_vertex(g, op.vertex, op.face_a, op.face_b);
      if (step.op.copy_1 != op.copy_1 || step.op.copy_2 != op.copy_2) {
        fail(ErrorKind::ReplayFailure, "copy names differ from the recorded ones");
      }
      g = std::move(step.graph);
    } catch (const Error& e) {
      fail(ErrorKind::ReplayFailure, "op " + std::to_string(i) + ": " + e.what());
    }
  }
  return g;
}

FaceCover extract_cover(const PlaneGraph& graph, const SplitSequence& sequence) {
  std::map<FaceId, std::set<FaceId>> constituents;
  for (const FaceId f : graph.face_ids()) constituents[f] = {f};

  PlaneGraph g = graph;
  for (std::size_t i = 0; i < sequence.ops.size(); ++i) {
    const auto& op = sequence.ops[i];
    SplitSequence single;
    single.ops.push_back(op);
    g = replay(g, single);
    const FaceId keep = std::min(op.face_a, op.face_b);
    const FaceId gone = std::max(op.face_a, op.face_b);
    constituents[keep].merge(constituents[gone]);
    constituents.erase(gone);
  }

  std::optional<FaceId> best;
  const auto n = g.num_vertices();
  for (const auto& f : g.faces()) {
    if (f.incident_vertices.size() != n) continue;
    if (!best || constituents[f.id].size() < constituents[*best].size()) best = f.id;
  }
  if (!best) fail(ErrorKind::NotOuterplane, "sequence does not produce an outerplane graph");
  const auto& parts = constituents[*best];
  return make_face_cover(graph, {parts.begin(), parts.end()});
}

std::string format_split_sequence(const SplitSequence& sequence) {
  std::ostringstream out;
  for (const auto& op : sequence.ops) {
    out << "SPLIT " << op.vertex << ' ' << op.face_a << ' ' << op.face_b << " -> " << op.copy_1
        << ' ' << op.copy_2 << '\n';
  }
  return out.str();
}

SplitSequence parse_split_sequence(std::string_view text) {
  SplitSequence seq;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto parse_face = [&](const std::string& token) {
    FaceId value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
      fail(ErrorKind::ParseError,
           "line " + std::to_string(line_no) + ": bad face id '" + token + "'");
    }
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> t;
    for (std::string s; tokens >> s;) t.push_back(s);
    if (t.empty()) continue;
    if (t.size() != 7 || t[0] != "SPLIT" || t[4] != "->") {
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                      ": expected 'SPLIT <v> <f_a> <f_b> -> <copy1> <copy2>'");
    }
    SplitOp op{t[1], parse_face(t[2]), parse_face(t[3]), t[5], t[6]};
    auto it = seq.origin.find(op.vertex);
    const std::string root_name = it == seq.origin.end() ? op.vertex : it->second;
    seq.origin[op.copy_1] = root_name;
    seq.origin[op.copy_2] = root_name;
    seq.ops.push_back(std::move(op));
  }
  return seq;
}

}  // namespace osn
