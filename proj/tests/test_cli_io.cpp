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

#include <cmath>
#include <filesystem>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "osn/cli.hpp"
#include "osn/error.hpp"
#include "osn/generators.hpp"
#include "osn/rot_format.hpp"
#include "osn/split_engine.hpp"
#include "osn/svg.hpp"
#include "support.hpp"

namespace osn {
namespace {

using ::testing::HasSubstr;

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("osn_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(RotFormatTest, ParsesTheDocumentedExample) {
  const PlaneGraph g = parse_rot("# comment\n3 3\na: b c\nb: c a\nc: a b\nfaces\nouter: 0\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_faces(), 2u);
  EXPECT_EQ(g.outer_face(), 0);
}

TEST(RotFormatTest, RoundTripsEveryCorpusInstance) {
  for (const auto& inst : testing::corpus(30, 30, 51)) {
    const std::string text = format_rot(inst.graph);
    const PlaneGraph back = parse_rot(text);
    EXPECT_EQ(back, inst.graph.canonical()) << inst.label;
    EXPECT_EQ(format_rot(back), text) << inst.label;
  }
}

TEST(RotFormatTest, ParseErrorsCarryLineAndColumn) {
  auto message = [](std::string_view text) -> std::string {
    try {
      parse_rot(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
      return e.what();
    }
    ADD_FAILURE() << "no error for: " << text;
    return "";
  };
  EXPECT_THAT(message("3 x\n"), HasSubstr("line 1"));
  EXPECT_THAT(message("3 3\na: b c\nb: c a c\nc: a b\n"), HasSubstr("line 3"));
  EXPECT_THAT(message("3 3\na: b c\na: c b\nc: a b\n"), HasSubstr("line 3"));
  EXPECT_THAT(message("3 4\na: b c\nb: c a\nc: a b\n"), HasSubstr("ParseError"));
  EXPECT_THAT(message("3 3\na: b c\nb: c a\nc: a b\nfaces\nouter: 9\n"),
              HasSubstr("does not exist"));
}

TEST(RotFormatTest, BuildErrorsPassThrough) {
  try {
    parse_rot("3 2\na: b c\nb: a\nc: b\n");
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AsymmetricRotation);
  }
}

TEST(RotFormatTest, FileHelpers) {
  TempDir dir;
  write_text_file(dir.file("k4.rot"), format_rot(k4()));
  EXPECT_EQ(read_rot_file(dir.file("k4.rot")), k4().canonical());
  EXPECT_THROW(read_text_file(dir.file("missing.rot")), std::runtime_error);
}

TEST(SvgTest, TutteLayoutPutsInnerVerticesAtNeighborMeans) {
  const PlaneGraph g = complete_3tree(2);
  const auto pos = tutte_layout(g, *g.outer_face());
  ASSERT_EQ(pos.size(), g.num_vertices());
  const auto& outer = g.face(*g.outer_face());
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
    if (outer.touches(v)) continue;
    double x = 0, y = 0;
    for (const VertexId w : g.rotation(v)) {
      x += pos[w][0];
      y += pos[w][1];
    }
    const double d = static_cast<double>(g.degree(v));
    EXPECT_NEAR(pos[v][0], x / d, 1e-6);
    EXPECT_NEAR(pos[v][1], y / d, 1e-6);
  }
}

TEST(SvgTest, DocumentHasOneLinePerEdgeAndOneCirclePerVertex) {
  const PlaneGraph g = icosahedron();
  const std::string svg = svg_document(g);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto at = svg.find(needle); at != std::string::npos; at = svg.find(needle, at + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("<line"), g.num_edges());
  EXPECT_EQ(count("<circle"), g.num_vertices());
  EXPECT_THAT(svg, HasSubstr("<svg"));
  EXPECT_EQ(layout_face(cycle(5)), outerplane_face(cycle(5)));
}

TEST(CliTest, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"osn"}).code, kExitUsage);
}

TEST(CliTest, GenerateSolveAndReplay) {
  TempDir dir;
  const std::string rot = dir.file("t1.rot");
  ASSERT_EQ(run({"gen", "3tree", "1", "-o", rot}).code, kExitOk);
  const CliRun solved = run({"osn", rot});
  ASSERT_EQ(solved.code, kExitOk) << solved.err;
  EXPECT_THAT(solved.out, HasSubstr("osn 2\n"));

  const std::string seq = dir.file("t1.seq");
  write_text_file(seq, solved.out.substr(solved.out.find("SPLIT")));
  const std::string after = dir.file("after.rot");
  const CliRun applied = run({"split", "--apply", rot, seq, "-o", after});
  ASSERT_EQ(applied.code, kExitOk) << applied.err;
  EXPECT_THAT(applied.out, HasSubstr("outerplane yes"));
  EXPECT_TRUE(is_outerplane(read_rot_file(after)));

  const CliRun porcelain = run({"osn", rot, "--porcelain", "--svg", dir.file("a.svg"),
                                dir.file("b.svg")});
  ASSERT_EQ(porcelain.code, kExitOk) << porcelain.err;
  EXPECT_THAT(porcelain.out, HasSubstr("osn=2\n"));
  EXPECT_TRUE(std::filesystem::exists(dir.file("b.svg")));
}

TEST(CliTest, VerifyBoundsReduceOracle) {
  TempDir dir;
  const std::string cube_rot = dir.file("cube.rot");
  ASSERT_EQ(run({"gen", "cube", "-o", cube_rot}).code, kExitOk);
  const CliRun v = run({"verify", cube_rot, "--porcelain"});
  EXPECT_THAT(v.out, HasSubstr("euler=2\n"));
  EXPECT_THAT(v.out, HasSubstr("biconnected=yes\n"));
  EXPECT_THAT(v.out, HasSubstr("outerplane=no\n"));

  const CliRun o = run({"oracle", cube_rot, "--porcelain"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_THAT(o.out, HasSubstr("vc=4\n"));
  EXPECT_THAT(o.out, HasSubstr("cfc_dstar=4\n"));
  EXPECT_THAT(o.out, HasSubstr("agree=yes\n"));

  const std::string dstar = dir.file("dstar.rot");
  EXPECT_EQ(run({"reduce", cube_rot, "-o", dstar}).code, kExitOk);
  EXPECT_EQ(read_rot_file(dstar).num_faces(), 8u);

  const std::string ico = dir.file("ico.rot");
  ASSERT_EQ(run({"gen", "icosahedron", "-o", ico}).code, kExitOk);
  const CliRun b = run({"bounds", ico, "--solve", "--porcelain"});
  EXPECT_EQ(b.code, kExitOk) << b.err;
  EXPECT_THAT(b.out, HasSubstr("upper=5\n"));
  EXPECT_THAT(b.out, HasSubstr("osn=5\n"));
  EXPECT_THAT(b.out, HasSubstr("status=ok\n"));
  EXPECT_THAT(run({"bounds", cube_rot, "--porcelain"}).out, HasSubstr("upper=n/a\n"));
}

TEST(CliTest, ErrorsMapToExitCodes) {
  TempDir dir;
  const std::string bad = dir.file("bad.rot");
  write_text_file(bad, "3 2\na: b c\nb: a\nc: b\n");
  const CliRun r = run({"verify", bad});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_THAT(r.err, HasSubstr("AsymmetricRotation"));
  write_text_file(bad, "not a header\n");
  EXPECT_EQ(run({"verify", bad}).code, kExitUsage);
  EXPECT_EQ(run({"verify", dir.file("missing.rot")}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "petersen"}).code, kExitDomainError);
}

}  // namespace
}  // namespace osn
