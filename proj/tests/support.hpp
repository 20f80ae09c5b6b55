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

#ifndef OSN_TESTS_SUPPORT_HPP_
#define OSN_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "osn/generators.hpp"
#include "osn/plane_graph.hpp"

// Test-only oracles. Nothing here calls into the solver code paths.
namespace osn::testing {

struct Instance {
  std::string label;
  PlaneGraph graph;
};

// Orbits of the dart permutation u->v  =>  v->succ_v(u), recomputed from the
// rotation system alone.
inline std::size_t count_face_orbits(const PlaneGraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  std::size_t orbits = 0;
  const auto& rot = g.rotation_system();
  for (VertexId u = 0; u < static_cast<VertexId>(rot.size()); ++u) {
    for (const VertexId v : rot[u]) {
      if (seen.count({u, v})) continue;
      ++orbits;
      VertexId a = u, b = v;
      while (seen.insert({a, b}).second) {
        const auto& r = rot[b];
        const auto k = std::find(r.begin(), r.end(), a) - r.begin();
        const VertexId c = r[(k + 1) % r.size()];
        a = b;
        b = c;
      }
    }
  }
  return orbits;
}

// Union-find forest test on a multigraph; a removed endpoint drops the edge.
inline bool acyclic_without(const std::vector<FaceId>& nodes,
                            const std::vector<std::pair<FaceId, FaceId>>& edges,
                            const std::set<FaceId>& removed) {
  std::map<FaceId, FaceId> parent;
  for (const FaceId x : nodes) parent[x] = x;
  std::function<FaceId(FaceId)> root = [&](FaceId x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (const auto& [a, b] : edges) {
    if (removed.count(a) || removed.count(b)) continue;
    const FaceId ra = root(a), rb = root(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

// Smallest feedback vertex set size by subset enumeration.
inline std::size_t enumerate_min_fvs(const std::vector<FaceId>& nodes,
                                     const std::vector<std::pair<FaceId, FaceId>>& edges) {
  const std::size_t n = nodes.size();
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
    do {
      std::set<FaceId> removed;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) removed.insert(nodes[i]);
      }
      if (acyclic_without(nodes, edges, removed)) return size;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n;
}

inline bool all_degree(const PlaneGraph& g, std::size_t d) {
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

// Fixed families followed by seeded random biconnected graphs, all with at
// most `max_faces` faces.
inline std::vector<Instance> corpus(std::size_t max_faces, std::size_t random_count,
                                    std::uint64_t seed_base) {
  std::vector<Instance> out;
  auto keep = [&](std::string label, PlaneGraph g) {
    if (g.num_faces() <= max_faces) out.push_back({std::move(label), std::move(g)});
  };
  keep("k4", k4());
  keep("octahedron", octahedron());
  keep("cube", cube());
  keep("icosahedron", icosahedron());
  keep("3tree 0", complete_3tree(0));
  keep("3tree 1", complete_3tree(1));
  for (std::size_t n = 3; n <= 9; ++n) keep("cycle " + std::to_string(n), cycle(n));
  for (std::size_t n = 4; n <= 9; ++n) keep("fan " + std::to_string(n), fan(n));
  for (std::size_t k = 3; k <= 9; ++k) keep("prism " + std::to_string(k), prism(k));
  for (std::size_t n = 4; n <= 12; ++n) {
    keep("triangulation " + std::to_string(n), random_triangulation(n, seed_base + n));
  }
  std::uint64_t seed = seed_base;
  while (random_count > 0) {
    ++seed;
    // Face counts spread evenly over [2, max_faces]; faces = m - n + 2.
    const std::size_t f = 2 + seed % (max_faces - 1);
    const std::size_t n = std::max<std::size_t>(4, (f + 5) / 2) + (seed / max_faces) % 6;
    const std::size_t m = n + f - 2;
    PlaneGraph g = random_biconnected(n, m, seed);
    out.push_back({"biconnected " + std::to_string(n) + " " + std::to_string(m) + " seed " +
                       std::to_string(seed),
                   std::move(g)});
    --random_count;
  }
  return out;
}

}  // namespace osn::testing

#endif  // OSN_TESTS_SUPPORT_HPP_
