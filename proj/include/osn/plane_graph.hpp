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

#ifndef OSN_PLANE_GRAPH_HPP_
#define OSN_PLANE_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace osn {

using VertexId = std::int32_t;
using FaceId = std::int32_t;

// Directed edge slot `from -> to`.
struct Dart {
  VertexId from = 0;
  VertexId to = 0;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Face {
  FaceId id = 0;
  // Closed facial walk, starting at the smallest dart of the face.
  std::vector<Dart> boundary;
  // Sorted, without repetitions.
  std::vector<VertexId> incident_vertices;

  std::size_t length() const { return boundary.size(); }
  bool touches(VertexId v) const;
};

// The angular gap at `vertex` between rotation(vertex)[position] and its
// clockwise successor. Every gap belongs to exactly one face.
struct Corner {
  VertexId vertex = 0;
  int position = 0;
  FaceId face = 0;
};

// Named vertices listed in input order, each with its clockwise neighbors.
using Adjacency = std::vector<std::pair<std::string, std::vector<std::string>>>;

/// A connected graph with a rotation system, together with the faces the
/// rotation system induces.
///
/// Vertex ids are positions in the input order. Faces are traced with the
/// rule next(u -> v) = v -> successor of u in the rotation of v, and receive
/// ids by sorting their smallest darts. Graphs produced by vertex splits keep
/// the ids of faces they inherit instead (see split_engine.hpp), so ids are
/// not always contiguous.
///
/// Instances are immutable; every transformation returns a new value.
class PlaneGraph {
 public:
  // Validates symmetry, simplicity, connectivity and genus zero.
  static PlaneGraph build(const Adjacency& adjacency);
  static PlaneGraph from_rotation(std::vector<std::string> names,
                                  std::vector<std::vector<VertexId>> rotation);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t num_faces() const { return faces_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId require(std::string_view name) const;  // throws UnknownVertex

  std::span<const VertexId> rotation(VertexId v) const { return rotation_.at(v); }
  std::size_t degree(VertexId v) const { return rotation_.at(v).size(); }
  const std::vector<std::vector<VertexId>>& rotation_system() const { return rotation_; }
  bool adjacent(VertexId u, VertexId v) const;

  // Faces sorted by id.
  std::span<const Face> faces() const { return faces_; }
  const Face& face(FaceId id) const;  // throws UnknownFace
  bool has_face(FaceId id) const;
  std::vector<FaceId> face_ids() const;

  // Face containing the dart v -> rotation(v)[position].
  FaceId dart_face(VertexId v, int position) const {
    return dart_face_[v][position];
  }
  // Face of the gap between rotation(v)[position] and the next neighbor.
  FaceId corner_face(VertexId v, int position) const;
  std::vector<Corner> corners(VertexId v) const;

  std::optional<FaceId> outer_face() const { return outer_; }
  PlaneGraph with_outer_face(FaceId id) const;
  PlaneGraph without_outer_face() const;

  // Same rotation system with face ids re-derived from the sorted darts. The
  // outer designation, if any, follows its face.
  PlaneGraph canonical() const;

  // Assigns `labels[i]` to the face with canonical index i. Labels must be
  // distinct. Used by operations that preserve face identity.
  PlaneGraph relabeled(const std::vector<FaceId>& labels,
                       std::optional<FaceId> outer) const;

  // Structural equality of names, rotations, face ids and outer face.
  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b);

 private:
  PlaneGraph() = default;
  void trace_faces();

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> rotation_;
  // reverse_[v][k]: position of v in the rotation of rotation_[v][k].
  std::vector<std::vector<int>> reverse_;
  std::vector<std::vector<FaceId>> dart_face_;
  std::vector<Face> faces_;
  std::size_t num_edges_ = 0;
  std::optional<FaceId> outer_;
};

std::vector<Face> extract_faces(const PlaneGraph& graph);

// Multigraph over face ids with one edge per primal edge.
struct DualGraph {
  std::vector<FaceId> nodes;
  std::vector<std::pair<FaceId, FaceId>> edges;
  std::optional<FaceId> outer_node;

  std::size_t degree(FaceId node) const;
};

DualGraph dual(const PlaneGraph& graph);       // throws OuterFaceUnset
DualGraph weak_dual(const PlaneGraph& graph);  // throws OuterFaceUnset
// Dual without the outer-face requirement; outer_node mirrors the graph.
DualGraph dual_graph_of(const PlaneGraph& graph);

struct IncidenceGraph {
  std::vector<VertexId> left;
  std::vector<FaceId> right;
  // (vertex, face) pairs, sorted.
  std::vector<std::pair<VertexId, FaceId>> edges;
};

IncidenceGraph incidence_graph(const PlaneGraph& graph);

bool is_biconnected(const PlaneGraph& graph);
// Cut vertices in increasing id order.
std::vector<VertexId> cut_vertices(const PlaneGraph& graph);

// A face incident to every vertex: the designated outer face if it qualifies,
// otherwise the smallest qualifying id.
std::optional<FaceId> outerplane_face(const PlaneGraph& graph);
bool is_outerplane(const PlaneGraph& graph);

// Largest face, smallest id on ties. Used when an input does not designate
// an outer face.
FaceId default_outer_face(const PlaneGraph& graph);
PlaneGraph with_default_outer_face(const PlaneGraph& graph);

std::size_t min_degree(const PlaneGraph& graph);
// Every face is a triangle and there are 3n - 6 edges.
bool is_maximal_planar(const PlaneGraph& graph);

}  // namespace osn

#endif  // OSN_PLANE_GRAPH_HPP_
