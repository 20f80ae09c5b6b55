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

#ifndef OSN_GENERATORS_HPP_
#define OSN_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "osn/plane_graph.hpp"

namespace osn {

// Vertices are named "0", "1", ... in insertion order.

inline constexpr int kMaxTreeDepth = 9;

// n_d = (3^(d+1) + 5) / 2.
std::size_t complete_3tree_order(int depth);

/// Complete planar 3-tree T_d. T_0 is K4 with center "3" and outer face
/// (0, 1, 2); T_d puts a new vertex into every inner face of T_{d-1}, in
/// face id order. The outer face is designated. Throws InfeasibleParameters
/// for depth outside [0, kMaxTreeDepth].
PlaneGraph complete_3tree(int depth);

PlaneGraph k4();
PlaneGraph cycle(std::size_t n);
// Path 1..n-1 plus hub 0 joined to all of them; outerplane.
PlaneGraph fan(std::size_t n);
PlaneGraph octahedron();
PlaneGraph icosahedron();
// Two k-cycles joined by a perfect matching; cubic. prism(4) is the cube.
PlaneGraph prism(std::size_t k);
PlaneGraph cube();

// Maximal planar graph on n >= 4 vertices: repeated insertion into a random
// face, then random edge flips that keep the minimum degree at 3 or more.
PlaneGraph random_triangulation(std::size_t n, std::uint64_t seed);

// Deletes random edges of a random triangulation while it stays
// biconnected, down to m edges. Retries with derived seeds; throws
// InfeasibleParameters when m is outside [n, 3n - 6] or no attempt succeeds.
PlaneGraph random_biconnected(std::size_t n, std::size_t m, std::uint64_t seed);

struct FamilySpec {
  std::string family;
  std::vector<std::int64_t> params;
  std::uint64_t seed = 0;
};

// Dispatches on family names: k4, cycle N, fan N, octahedron, icosahedron,
// cube, prism K, 3tree D, triangulation N, biconnected N M. Throws
// UnknownFamily or InfeasibleParameters.
PlaneGraph named(const FamilySpec& spec);

}  // namespace osn

#endif  // OSN_GENERATORS_HPP_
