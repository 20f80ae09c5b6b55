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

#ifndef OSN_SPLIT_ENGINE_HPP_
#define OSN_SPLIT_ENGINE_HPP_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "osn/plane_graph.hpp"

namespace osn {

// One embedding-preserving split. Faces are named by their ids in the graph
// the split is applied to.
struct SplitOp {
  std::string vertex;
  FaceId face_a = 0;
  FaceId face_b = 0;
  std::string copy_1;  // receives the neighbors from face_b's gap round to face_a's
  std::string copy_2;  // receives the neighbors from face_a's gap round to face_b's

  friend bool operator==(const SplitOp&, const SplitOp&) = default;
};

struct SplitSequence {
  std::vector<SplitOp> ops;
  // Every copy created by ops, mapped to the vertex of the source graph it
  // descends from.
  std::map<std::string, std::string> origin;
};

struct SplitResult {
  PlaneGraph graph;
  SplitOp op;
};

// Names of the two copies a split of `vertex` creates.
std::string first_copy_name(std::string_view vertex);
std::string second_copy_name(std::string_view vertex);

/// Splits `vertex` so that faces `face_a` and `face_b` merge into one.
///
/// With w_d, w_1 the neighbors bounding the gap of face_a and w_{i-1}, w_i
/// those bounding the gap of face_b (each pair in clockwise order), copy_2
/// gets w_1..w_{i-1} and copy_1 gets w_i..w_d. The merged face keeps the
/// smaller of the two ids, every other face keeps its id. When a face meets
/// the vertex in several gaps the first gap in rotation order is used.
SplitResult split_vertex(const PlaneGraph& graph, std::string_view vertex, FaceId face_a,
                         FaceId face_b);

// Same split, with the two gaps given as rotation positions of `vertex`.
SplitResult split_at_corners(const PlaneGraph& graph, VertexId vertex, int corner_a,
                             int corner_b);

struct MergeResult {
  PlaneGraph graph;
  std::vector<SplitOp> ops;
};

/// Merges all `faces` (each incident to `vertex`) into one face using
/// faces.size() - 1 splits at `vertex` and its copies. The smallest id is
/// merged with the others in clockwise order around `vertex`.
MergeResult merge_faces_at_vertex(const PlaneGraph& graph, std::string_view vertex,
                                  std::span<const FaceId> faces);

struct IncidenceEdge {
  VertexId vertex = 0;
  FaceId face = 0;

  friend auto operator<=>(const IncidenceEdge&, const IncidenceEdge&) = default;
};

// A connected face cover with a spanning tree of H[faces + V] as certificate.
struct FaceCover {
  std::vector<FaceId> faces;  // sorted
  FaceId root = 0;
  // Tree edges in breadth-first discovery order from `root`.
  std::vector<IncidenceEdge> tree;

  std::size_t size() const { return faces.size(); }
};

// Checks the two conditions directly, without building a certificate.
bool covers_all_vertices(const PlaneGraph& graph, std::span<const FaceId> faces);
bool is_connected_face_cover(const PlaneGraph& graph, std::span<const FaceId> faces);

// Builds the certificate: breadth-first search from the smallest face, with
// neighbors visited in id order. Throws InvalidCover.
FaceCover make_face_cover(const PlaneGraph& graph, std::vector<FaceId> faces);

// Splits that merge every face of `cover` into one; exactly size() - 1 ops.
SplitSequence realize_cover(const PlaneGraph& graph, const FaceCover& cover);

// Applies `sequence` op by op. Throws ReplayFailure.
PlaneGraph replay(const PlaneGraph& graph, const SplitSequence& sequence);

// Original faces merged into the all-incident face after replay.
// Throws ReplayFailure or NotOuterplane.
FaceCover extract_cover(const PlaneGraph& graph, const SplitSequence& sequence);

// Text format: one `SPLIT <v> <f_a> <f_b> -> <copy1> <copy2>` line per op.
std::string format_split_sequence(const SplitSequence& sequence);
// Throws ParseError. The origin map is rebuilt from the copy names.
SplitSequence parse_split_sequence(std::string_view text);

}  // namespace osn

#endif  // OSN_SPLIT_ENGINE_HPP_
