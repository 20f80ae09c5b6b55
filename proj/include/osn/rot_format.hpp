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

#ifndef OSN_ROT_FORMAT_HPP_
#define OSN_ROT_FORMAT_HPP_

#include <string>
#include <string_view>

#include "osn/plane_graph.hpp"

// The ".rot" rotation-system format:
//
//   # comment
//   3 3
//   a: b c
//   b: c a
//   c: a b
//   faces
//   outer: 0
//
// The header gives vertex and edge counts, then one line per vertex lists its
// neighbors in clockwise order. The optional `faces` section designates the
// outer face by its id in the parsed graph. `#` starts a comment anywhere.
namespace osn {

// Throws ParseError with "line L, column C" in the message; build errors
// pass through unchanged.
PlaneGraph parse_rot(std::string_view text);

// Writes canonical face ids, so parse_rot(format_rot(g)) == g.canonical().
// Faces are listed as comments after the `faces` marker.
std::string format_rot(const PlaneGraph& graph);

PlaneGraph read_rot_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);
std::string read_text_file(const std::string& path);

}  // namespace osn

#endif  // OSN_ROT_FORMAT_HPP_
