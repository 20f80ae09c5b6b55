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

#include "osn/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "osn/error.hpp"

namespace osn {

namespace {

int position_of(std::span<const VertexId> rotation, VertexId v) {
  return static_cast<int>(std::find(rotation.begin(), rotation.end(), v) - rotation.begin());
}

// The face on the other side of the dart from -> to.
FaceId opposite_face(const PlaneGraph& g, const Dart& d) {
  return g.dart_face(d.to, position_of(g.rotation(d.to), d.from));
}

std::string unique_name(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += '\'';
  return base;
}

// Builds a graph from a rotation system whose per-vertex orientation may be
// mirrored; mirrors it back when the first attempt is not of genus zero.
PlaneGraph build_either_orientation(std::vector<std::string> names,
                                    std::vector<std::vector<VertexId>> rotation) {
  try {
    return PlaneGraph::from_rotation(names, rotation);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonPlanarRotation) throw;
  }
  for (auto& r : rotation) std::reverse(r.begin(), r.end());
  return PlaneGraph::from_rotation(std::move(names), std::move(rotation));
}

}  // namespace

void validate_vc_instance(const VcInstance& instance) {
  const auto& g = instance.graph;
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    if (g.degree(v) != 3) {
      fail(ErrorKind::NotCubic, "'" + g.name(v) + "' has degree " + std::to_string(g.degree(v)));
    }
  }
  if (!is_biconnected(g)) fail(ErrorKind::NotBiconnected, "vertex cover instance has a cut vertex");
}

PlaneGraph all_one_subdivision(const PlaneGraph& graph) {
  const auto n = static_cast<VertexId>(graph.num_vertices());
  std::vector<std::string> names = graph.names();
  std::set<std::string> taken(names.begin(), names.end());
  std::vector<std::vector<VertexId>> rotation = graph.rotation_system();
  std::map<std::pair<VertexId, VertexId>, VertexId> middle;

  for (VertexId u = 0; u < n; ++u) {
    for (const VertexId v : graph.rotation(u)) {
      if (u > v) continue;
      const auto w = static_cast<VertexId>(names.size());
      names.push_back(unique_name(graph.name(u) + "~" + graph.name(v), taken));
      taken.insert(names.back());
      rotation.push_back({u, v});
      middle[{u, v}] = w;
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    for (auto& v : rotation[u]) v = middle.at({std::min(u, v), std::max(u, v)});
  }
  const PlaneGraph fresh = PlaneGraph::from_rotation(std::move(names), std::move(rotation));

  // Faces keep their ids: the dart u -> v continues as u -> middle(u, v).
  std::vector<FaceId> labels(fresh.num_faces(), -1);
  for (const auto& f : graph.faces()) {
    const Dart d = f.boundary.front();
    const VertexId w = middle.at({std::min(d.from, d.to), std::max(d.from, d.to)});
    labels[fresh.dart_face(d.from, position_of(fresh.rotation(d.from), w))] = f.id;
  }
  return fresh.relabeled(labels, graph.outer_face());
}

PlaneGraph dual_plane_graph(const PlaneGraph& graph) {
  std::vector<std::string> names;
  std::map<FaceId, VertexId> node;
  for (const auto& f : graph.faces()) {
    node[f.id] = static_cast<VertexId>(names.size());
    names.push_back("F" + std::to_string(f.id));
  }
  std::vector<std::vector<VertexId>> rotation(names.size());
  for (const auto& f : graph.faces()) {
    for (const Dart& d : f.boundary) {
      const FaceId other = opposite_face(graph, d);
      if (other == f.id) fail(ErrorKind::SelfLoop, "the dual has a self-loop");
      rotation[node[f.id]].push_back(node[other]);
    }
  }
  return build_either_orientation(std::move(names), std::move(rotation));
}

CfcInstance build_cfc_instance(const VcInstance& instance) {
  validate_vc_instance(instance);
  const PlaneGraph& g = instance.graph;

  std::vector<std::string> names;
  std::map<FaceId, VertexId> node;
  for (const auto& f : g.faces()) {
    node[f.id] = static_cast<VertexId>(names.size());
    names.push_back("F" + std::to_string(f.id));
  }
  std::vector<std::vector<VertexId>> rotation(names.size());
  // Primal edge behind every subdivision node.
  std::map<VertexId, std::pair<VertexId, VertexId>> edge_of;
  std::map<std::pair<VertexId, VertexId>, VertexId> middle;
  for (VertexId u = 0; u < static_cast<VertexId>(g.num_vertices()); ++u) {
    const auto rot = g.rotation(u);
    for (int k = 0; k < static_cast<int>(rot.size()); ++k) {
      const VertexId v = rot[k];
      if (u > v) continue;
      const auto w = static_cast<VertexId>(names.size());
      names.push_back(g.name(u) + "~" + g.name(v));
      const FaceId left = g.dart_face(u, k);
      const FaceId right = opposite_face(g, {u, v});
      rotation.push_back({node[left], node[right]});
      edge_of[w] = {u, v};
      middle[{u, v}] = w;
    }
  }
  for (const auto& f : g.faces()) {
    for (const Dart& d : f.boundary) {
      rotation[node[f.id]].push_back(middle.at({std::min(d.from, d.to), std::max(d.from, d.to)}));
    }
  }

  CfcInstance out{build_either_orientation(std::move(names), std::move(rotation)), {}, {}};
  out.vertex_to_face.assign(g.num_vertices(), -1);
  for (const auto& f : out.dstar.faces()) {
    // The primal vertex shared by every edge around this face.
    std::set<VertexId> common;
    bool first = true;
    for (const VertexId x : f.incident_vertices) {
      auto it = edge_of.find(x);
      if (it == edge_of.end()) continue;
      std::set<VertexId> ends{it->second.first, it->second.second};
      if (first) {
        common = ends;
        first = false;
      } else {
        std::set<VertexId> keep;
        std::set_intersection(common.begin(), common.end(), ends.begin(), ends.end(),
                              std::inserter(keep, keep.end()));
        common = std::move(keep);
      }
    }
    if (common.size() != 1) {
      fail(ErrorKind::CertificateFailure, "face of the subdivided dual has no unique primal vertex");
    }
    const VertexId v = *common.begin();
    out.face_to_vertex.push_back(v);
    out.vertex_to_face[v] = f.id;
  }
  return out;
}

bool is_vertex_cover(const PlaneGraph& graph, std::span<const VertexId> vertices) {
  std::vector<char> in(graph.num_vertices(), 0);
  for (const VertexId v : vertices) in.at(v) = 1;
  for (VertexId u = 0; u < static_cast<VertexId>(graph.num_vertices()); ++u) {
    for (const VertexId v : graph.rotation(u)) {
      if (!in[u] && !in[v]) return false;
    }
  }
  return true;
}

std::vector<VertexId> cfc_to_vc(const VcInstance& instance, const CfcInstance& cfc,
                                const FaceCover& cover) {
  std::vector<VertexId> out;
  for (const FaceId f : cover.faces) out.push_back(cfc.face_to_vertex.at(f));
  std::sort(out.begin(), out.end());
  if (!is_vertex_cover(instance.graph, out)) {
    fail(ErrorKind::NotACover, "image of the face cover misses an edge");
  }
  return out;
}

FaceCover vc_to_cfc(const VcInstance& instance, const CfcInstance& cfc,
                    std::span<const VertexId> vertices) {
  if (!is_vertex_cover(instance.graph, vertices)) {
    fail(ErrorKind::NotAVertexCover, "vertex set misses an edge");
  }
  std::vector<FaceId> faces;
  for (const VertexId v : vertices) faces.push_back(cfc.vertex_to_face.at(v));
  if (!covers_all_vertices(cfc.dstar, faces)) {
    fail(ErrorKind::CertificateFailure, "image does not cover the subdivided dual");
  }
  try {
    return make_face_cover(cfc.dstar, faces);
  } catch (const Error& e) {
    fail(ErrorKind::CertificateFailure, e.what());
  }
}

std::vector<VertexId> brute_min_vc(const PlaneGraph& graph, std::size_t vertex_cap) {
  const auto n = graph.num_vertices();
  if (n > vertex_cap) {
    fail(ErrorKind::CapExceeded, std::to_string(n) + " vertices exceed the cap of " +
                                     std::to_string(vertex_cap));
  }
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<VertexId> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (is_vertex_cover(graph, pick)) return pick;
      std::size_t i = size;
      while (i > 0 && static_cast<std::size_t>(pick[i - 1]) == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

}  // namespace osn
