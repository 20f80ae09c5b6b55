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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "osn/cover_solver.hpp"
#include "osn/error.hpp"
#include "osn/generators.hpp"
#include "support.hpp"

namespace osn {
namespace {

using ::testing::ElementsAre;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

// Cubic graphs: duals of triangulations are cubic and biconnected.
std::vector<testing::Instance> cubic_corpus() {
  std::vector<testing::Instance> out{{"k4", k4()}, {"cube", cube()}, {"prism 3", prism(3)},
                                     {"prism 5", prism(5)}};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t n = 4 + seed % 4;
    out.push_back({"dual of triangulation " + std::to_string(n),
                   with_default_outer_face(dual_plane_graph(random_triangulation(n, seed)))});
  }
  return out;
}

TEST(ReductionsTest, SubdivisionCounts) {
  for (const auto& inst : testing::corpus(12, 10, 41)) {
    const PlaneGraph& g = inst.graph;
    const PlaneGraph s = all_one_subdivision(g);
    EXPECT_EQ(s.num_vertices(), g.num_vertices() + g.num_edges());
    EXPECT_EQ(s.num_edges(), 2 * g.num_edges());
    EXPECT_EQ(s.face_ids(), g.face_ids()) << inst.label;
    for (const auto& f : g.faces()) EXPECT_EQ(s.face(f.id).length(), 2 * f.length());
    EXPECT_EQ(s.outer_face(), g.outer_face());
  }
}

TEST(ReductionsTest, SubdivisionVerticesTouchTwoFaces) {
  for (const auto& inst : testing::corpus(12, 10, 42)) {
    const PlaneGraph s = all_one_subdivision(inst.graph);
    for (auto v = static_cast<VertexId>(inst.graph.num_vertices());
         v < static_cast<VertexId>(s.num_vertices()); ++v) {
      std::size_t touching = 0;
      for (const auto& f : s.faces()) touching += f.touches(v) ? 1 : 0;
      EXPECT_EQ(touching, 2u) << inst.label;
    }
  }
}

TEST(ReductionsTest, DualPlaneGraphOfTheCubeIsTheOctahedron) {
  const PlaneGraph d = dual_plane_graph(cube());
  EXPECT_EQ(d.num_vertices(), 6u);
  EXPECT_EQ(d.num_edges(), 12u);
  EXPECT_EQ(d.num_faces(), 8u);
  EXPECT_EQ(min_degree(d), 4u);
  EXPECT_EQ(d.name(0), "F0");
}

TEST(ReductionsTest, CfcInstanceShape) {
  for (const auto& inst : cubic_corpus()) {
    const PlaneGraph& g = inst.graph;
    const CfcInstance c = build_cfc_instance({g, 0});
    EXPECT_EQ(c.dstar.num_vertices(), g.num_faces() + g.num_edges()) << inst.label;
    EXPECT_EQ(c.dstar.num_edges(), 2 * g.num_edges());
    EXPECT_EQ(c.dstar.num_faces(), g.num_vertices());
    ASSERT_EQ(c.face_to_vertex.size(), g.num_vertices());
    for (std::size_t i = 0; i < c.face_to_vertex.size(); ++i) {
      EXPECT_EQ(c.vertex_to_face[c.face_to_vertex[i]], c.dstar.faces()[i].id);
      // Face of a degree-3 vertex: 3 face nodes and 3 edge nodes.
      EXPECT_EQ(c.dstar.faces()[i].length(), 6u);
    }
  }
}

TEST(ReductionsTest, VertexCoverEqualsCoverOfTheSubdividedDual) {
  for (const auto& inst : cubic_corpus()) {
    const VcInstance vc{inst.graph, 0};
    const CfcInstance c = build_cfc_instance(vc);
    const auto cover = brute_min_vc(inst.graph);
    const FaceCover faces = brute_min_cfc(c.dstar);
    EXPECT_EQ(cover.size(), faces.size()) << inst.label;
    EXPECT_TRUE(is_vertex_cover(inst.graph, cfc_to_vc(vc, c, faces)));
    EXPECT_EQ(vc_to_cfc(vc, c, cover).size(), cover.size());
  }
}

TEST(ReductionsTest, KnownVertexCoverSizes) {
  EXPECT_EQ(brute_min_vc(k4()).size(), 3u);
  EXPECT_EQ(brute_min_vc(cube()).size(), 4u);
  EXPECT_EQ(brute_min_vc(prism(5)).size(), 6u);
  EXPECT_THAT(brute_min_vc(cycle(4)), ElementsAre(0, 2));
}

TEST(ReductionsTest, Rejections) {
  EXPECT_EQ(kind_of([] { validate_vc_instance({octahedron(), 0}); }), ErrorKind::NotCubic);
  EXPECT_EQ(kind_of([] { build_cfc_instance({cycle(5), 0}); }), ErrorKind::NotCubic);
  const VcInstance vc{k4(), 0};
  const CfcInstance c = build_cfc_instance(vc);
  EXPECT_EQ(kind_of([&] { vc_to_cfc(vc, c, std::vector<VertexId>{0}); }),
            ErrorKind::NotAVertexCover);
  EXPECT_EQ(kind_of([&] { cfc_to_vc(vc, c, FaceCover{{c.dstar.faces()[0].id}, 0, {}}); }),
            ErrorKind::NotACover);
  EXPECT_EQ(kind_of([] { brute_min_vc(icosahedron(), 5); }), ErrorKind::CapExceeded);
}

}  // namespace
}  // namespace osn
