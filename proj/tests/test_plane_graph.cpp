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

#include "osn/plane_graph.hpp"

#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "osn/error.hpp"
#include "osn/generators.hpp"
#include "support.hpp"

namespace osn {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

// Square a-b-c-d with the chord a-c.
PlaneGraph square_with_chord() {
  return PlaneGraph::build({{"a", {"b", "c", "d"}},
                            {"b", {"c", "a"}},
                            {"c", {"d", "a", "b"}},
                            {"d", {"a", "c"}}});
}

TEST(PlaneGraphTest, CountsOfSquareWithChord) {
  const PlaneGraph g = square_with_chord();
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 5u);
  EXPECT_EQ(g.num_faces(), 3u);
  EXPECT_EQ(g.degree(g.require("a")), 3u);
  EXPECT_TRUE(g.adjacent(g.require("a"), g.require("c")));
  EXPECT_FALSE(g.adjacent(g.require("b"), g.require("d")));
}

TEST(PlaneGraphTest, FaceLengthsSumToTwiceTheEdges) {
  for (const auto& inst : testing::corpus(30, 20, 11)) {
    std::size_t total = 0;
    for (const auto& f : inst.graph.faces()) total += f.length();
    EXPECT_EQ(total, 2 * inst.graph.num_edges()) << inst.label;
  }
}

TEST(PlaneGraphTest, FaceCountMatchesIndependentTracing) {
  for (const auto& inst : testing::corpus(30, 40, 12)) {
    EXPECT_EQ(inst.graph.num_faces(), testing::count_face_orbits(inst.graph)) << inst.label;
    const auto v = static_cast<long>(inst.graph.num_vertices());
    const auto e = static_cast<long>(inst.graph.num_edges());
    const auto f = static_cast<long>(inst.graph.num_faces());
    EXPECT_EQ(v - e + f, 2) << inst.label;
  }
}

TEST(PlaneGraphTest, EveryDartBelongsToExactlyOneFace) {
  for (const auto& inst : testing::corpus(20, 20, 13)) {
    std::set<Dart> darts;
    for (const auto& f : inst.graph.faces()) {
      for (const Dart& d : f.boundary) {
        EXPECT_TRUE(darts.insert(d).second) << inst.label;
        const auto rot = inst.graph.rotation(d.from);
        const int k = static_cast<int>(std::find(rot.begin(), rot.end(), d.to) - rot.begin());
        EXPECT_EQ(inst.graph.dart_face(d.from, k), f.id);
      }
    }
    EXPECT_EQ(darts.size(), 2 * inst.graph.num_edges());
  }
}

TEST(PlaneGraphTest, CornersPartitionTheSlotsAroundAVertex) {
  const PlaneGraph g = complete_3tree(1);
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    const auto corners = g.corners(v);
    ASSERT_EQ(corners.size(), g.degree(v));
    for (std::size_t k = 0; k < corners.size(); ++k) {
      EXPECT_EQ(corners[k].position, static_cast<int>(k));
      EXPECT_TRUE(g.face(corners[k].face).touches(v));
    }
  }
}

TEST(PlaneGraphTest, RejectsMalformedRotations) {
  EXPECT_EQ(kind_of([] { PlaneGraph::build({{"a", {"b"}}, {"b", {}}}); }),
            ErrorKind::AsymmetricRotation);
  EXPECT_EQ(kind_of([] { PlaneGraph::build({{"a", {"a", "b"}}, {"b", {"a"}}}); }),
            ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { PlaneGraph::build({{"a", {"b", "b"}}, {"b", {"a", "a"}}}); }),
            ErrorKind::ParallelEdge);
  EXPECT_EQ(kind_of([] { PlaneGraph::build({{"a", {"z"}}, {"b", {}}}); }),
            ErrorKind::UnknownVertex);
  EXPECT_EQ(kind_of([] {
              PlaneGraph::build({{"a", {"b"}}, {"b", {"a"}}, {"c", {"d"}}, {"d", {"c"}}});
            }),
            ErrorKind::Disconnected);
  EXPECT_EQ(kind_of([] { PlaneGraph::build({{"a", {}}}); }), ErrorKind::TooSmall);
  // K4 with one rotation reversed has genus one.
  EXPECT_EQ(kind_of([] {
              PlaneGraph::build({{"0", {"1", "2", "3"}},
                                 {"1", {"0", "2", "3"}},
                                 {"2", {"0", "1", "3"}},
                                 {"3", {"0", "1", "2"}}});
            }),
            ErrorKind::NonPlanarRotation);
}

TEST(PlaneGraphTest, DualOfK4IsK4) {
  const PlaneGraph g = k4();
  const DualGraph d = dual(g);
  EXPECT_EQ(d.nodes.size(), 4u);
  EXPECT_EQ(d.edges.size(), 6u);
  for (const FaceId f : d.nodes) EXPECT_EQ(d.degree(f), 3u);
  const DualGraph w = weak_dual(g);
  EXPECT_EQ(w.nodes.size(), 3u);
  EXPECT_EQ(w.edges.size(), 3u);
}

TEST(PlaneGraphTest, DualOfACycleHasParallelEdges) {
  const DualGraph d = dual(cycle(5));
  ASSERT_EQ(d.nodes.size(), 2u);
  EXPECT_EQ(d.edges.size(), 5u);
  EXPECT_THAT(d.edges, ::testing::Each(std::pair<FaceId, FaceId>{d.nodes[0], d.nodes[1]}));
}

TEST(PlaneGraphTest, DualRequiresAnOuterFace) {
  EXPECT_EQ(kind_of([] { dual(k4().without_outer_face()); }), ErrorKind::OuterFaceUnset);
}

TEST(PlaneGraphTest, IncidenceGraphHasOneEdgePerDistinctVertexOnAFace) {
  const PlaneGraph g = square_with_chord();
  const IncidenceGraph inc = incidence_graph(g);
  EXPECT_EQ(inc.left.size(), 4u);
  EXPECT_EQ(inc.right.size(), 3u);
  EXPECT_EQ(inc.edges.size(), 3u + 3u + 4u);
}

TEST(PlaneGraphTest, CutVerticesOfTwoTrianglesSharingAVertex) {
  const PlaneGraph g = PlaneGraph::build({{"a", {"b", "c"}},
                                          {"b", {"c", "a"}},
                                          {"c", {"a", "b", "d", "e"}},
                                          {"d", {"e", "c"}},
                                          {"e", {"c", "d"}}});
  EXPECT_THAT(cut_vertices(g), ElementsAre(g.require("c")));
  EXPECT_FALSE(is_biconnected(g));
  EXPECT_TRUE(is_biconnected(square_with_chord()));
}

TEST(PlaneGraphTest, OuterplaneRecognition) {
  EXPECT_TRUE(is_outerplane(cycle(6)));
  EXPECT_TRUE(is_outerplane(fan(7)));
  EXPECT_TRUE(is_outerplane(square_with_chord()));
  EXPECT_FALSE(is_outerplane(k4()));
  EXPECT_FALSE(is_outerplane(cube()));
}

TEST(PlaneGraphTest, OuterplaneFacePrefersTheDesignatedFace) {
  const PlaneGraph g = cycle(4);
  for (const FaceId id : g.face_ids()) {
    EXPECT_EQ(outerplane_face(g.with_outer_face(id)), id);
  }
}

TEST(PlaneGraphTest, MaximalPlanarAndMinDegree) {
  EXPECT_TRUE(is_maximal_planar(k4()));
  EXPECT_TRUE(is_maximal_planar(icosahedron()));
  EXPECT_FALSE(is_maximal_planar(cube()));
  EXPECT_EQ(min_degree(icosahedron()), 5u);
  EXPECT_EQ(min_degree(octahedron()), 4u);
  EXPECT_EQ(min_degree(fan(5)), 2u);
}

TEST(PlaneGraphTest, CanonicalAndRelabeledRoundTrip) {
  const PlaneGraph g = complete_3tree(1);
  EXPECT_EQ(g.canonical(), g.canonical().canonical());
  std::vector<FaceId> labels;
  for (std::size_t i = 0; i < g.num_faces(); ++i) {
    labels.push_back(static_cast<FaceId>(100 + i));
  }
  const PlaneGraph r = g.relabeled(labels, std::nullopt);
  EXPECT_TRUE(r.has_face(100));
  EXPECT_FALSE(r.has_face(0));
  EXPECT_EQ(r.num_faces(), g.num_faces());
  EXPECT_EQ(kind_of([&] { r.face(0); }), ErrorKind::UnknownFace);
}

TEST(PlaneGraphTest, OuterFaceDesignation) {
  const PlaneGraph g = k4().without_outer_face();
  EXPECT_FALSE(g.outer_face().has_value());
  EXPECT_EQ(g.with_outer_face(2).outer_face(), 2);
  EXPECT_EQ(kind_of([&] { g.with_outer_face(99); }), ErrorKind::UnknownFace);
  const PlaneGraph p = prism(5);
  EXPECT_EQ(p.face(default_outer_face(p)).length(), 5u);
}

}  // namespace
}  // namespace osn
