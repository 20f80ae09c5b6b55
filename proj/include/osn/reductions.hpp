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

#ifndef OSN_REDUCTIONS_HPP_
#define OSN_REDUCTIONS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "osn/plane_graph.hpp"
#include "osn/split_engine.hpp"

// Vertex cover on cubic plane graphs versus connected face cover on the
// subdivided dual. Used to generate structured instances and to cross-check
// the face cover oracle.
namespace osn {

// A cubic, biconnected plane graph with a vertex cover budget.
struct VcInstance {
  PlaneGraph graph;
  std::size_t k = 0;
};

// Throws NotCubic or NotBiconnected.
void validate_vc_instance(const VcInstance& instance);

// Every edge {u, v} becomes u - w - v, where w is named "u~v" (u listed first
// in input order) and takes the edge's place in both rotations.
PlaneGraph all_one_subdivision(const PlaneGraph& graph);

// The dual as a plane graph: face node "F<id>", neighbors ordered along the
// facial walk. Requires a simple dual; throws ParallelEdge otherwise.
PlaneGraph dual_plane_graph(const PlaneGraph& graph);

struct CfcInstance {
  // Subdivided dual: face nodes "F<id>" and one "u~v" node per primal edge.
  PlaneGraph dstar;
  // face_to_vertex[i] is the primal vertex inside the i-th face of dstar
  // (faces in id order); vertex_to_face is its inverse.
  std::vector<VertexId> face_to_vertex;
  std::vector<FaceId> vertex_to_face;
};

CfcInstance build_cfc_instance(const VcInstance& instance);

// Throws NotACover if the image is not a vertex cover.
std::vector<VertexId> cfc_to_vc(const VcInstance& instance, const CfcInstance& cfc,
                                const FaceCover& cover);
// Throws NotAVertexCover, or CertificateFailure if the image is not connected.
FaceCover vc_to_cfc(const VcInstance& instance, const CfcInstance& cfc,
                    std::span<const VertexId> vertices);

bool is_vertex_cover(const PlaneGraph& graph, std::span<const VertexId> vertices);

// Lexicographically least minimum vertex cover. Throws CapExceeded.
std::vector<VertexId> brute_min_vc(const PlaneGraph& graph, std::size_t vertex_cap = 30);

}  // namespace osn

#endif  // OSN_REDUCTIONS_HPP_
