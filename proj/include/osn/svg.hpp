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

#ifndef OSN_SVG_HPP_
#define OSN_SVG_HPP_

#include <array>
#include <string>
#include <vector>

#include "osn/plane_graph.hpp"

namespace osn {

using Position = std::array<double, 2>;

// Face drawn as the outer polygon: an all-incident face if there is one,
// else the designated outer face, else the largest face.
FaceId layout_face(const PlaneGraph& graph);

/// Barycentric (Tutte) layout. Vertices of the layout face sit on a regular
/// polygon in order of first appearance along its walk; every other vertex
/// is the weighted mean of its neighbors. Coincident vertices trigger
/// retries with perturbed weights, then LayoutFailure.
std::vector<Position> tutte_layout(const PlaneGraph& graph, FaceId outer);

// Standalone SVG: one <line> per edge, one labelled <circle> per vertex.
std::string svg_document(const PlaneGraph& graph);
void emit_svg(const PlaneGraph& graph, const std::string& path);

}  // namespace osn

#endif  // OSN_SVG_HPP_
