// Copyright 2026 The Cagelift Authors
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

#include <random>
#include <string>
#include <vector>

#include "cagelift/constructions.h"
#include "cagelift/cycle_analysis.h"
#include "cagelift/graph6.h"
#include "cagelift/graph_analysis.h"
#include "cagelift/report_json.h"
#include "cagelift/text_formats.h"
#include "error_matchers.h"
#include "gtest/gtest.h"
#include "random_graphs.h"

namespace cagelift {
namespace {

SimpleGraph Petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return SimpleGraph::FromEdges(10, edges);
}

SimpleGraph CycleGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SimpleGraph::FromEdges(n, edges);
}

// Reference strings produced by networkx.to_graph6_bytes.
TEST(Graph6Test, MatchesReferenceEncoder) {
  EXPECT_EQ(WriteGraph6(BuildK33()), "EFz_");
  EXPECT_EQ(WriteGraph6(Petersen()), "IheA@GUAo");
  EXPECT_EQ(WriteGraph6(SimpleGraph::FromEdges(0, {})), "?");
  EXPECT_EQ(WriteGraph6(SimpleGraph::FromEdges(1, {})), "@");
  EXPECT_EQ(WriteGraph6(SimpleGraph::FromEdges(2, {})), "A?");
  std::vector<Edge> path = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  EXPECT_EQ(WriteGraph6(SimpleGraph::FromEdges(5, path)), "DhC");
  const std::string c64 = WriteGraph6(CycleGraph(64));
  EXPECT_EQ(c64,
            "~?@?hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_?"
            "??G???@????C????G????G????C????@?????G?????_????@?????@?????"
            "?_?????G?????@??????C??????G??????G??????C??????@???????G???"
            "????_??????@???????@????????_???????G???????@????????C??????"
            "??G????????G????????C????????@?????????G?????????_????????@?"
            "????????@??????????_?????????K?????????@");
  EXPECT_EQ(c64.size(), 4u + (64 * 63 / 2 + 5) / 6);
}

TEST(Graph6Test, DecodesReferenceStrings) {
  const SimpleGraph p = ReadGraph6("IheA@GUAo");
  EXPECT_EQ(p.Edges(), Petersen().Edges());
  EXPECT_EQ(ReadGraph6(">>graph6<<EFz_\n").Edges(), BuildK33().Edges());
  EXPECT_EQ(ReadGraph6("?").order(), 0);
}

TEST(Graph6Test, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 130)(rng);
    const SimpleGraph g = testing::RandomSimpleGraph(rng, n, 0.1);
    const std::string text = WriteGraph6(g);
    const SimpleGraph back = ReadGraph6(text);
    EXPECT_EQ(back.order(), n);
    EXPECT_EQ(back.Edges(), g.Edges());
    EXPECT_EQ(WriteGraph6(back), text);
  }
}

TEST(Graph6Test, RejectsMalformedInput) {
  EXPECT_CAGELIFT_ERROR(ReadGraph6(""), ErrorCode::kMalformedHeader);
  EXPECT_CAGELIFT_ERROR(ReadGraph6("~?"), ErrorCode::kMalformedHeader);
  // 5 encoded in the long form is not canonical.
  EXPECT_CAGELIFT_ERROR(ReadGraph6("~??DhC"), ErrorCode::kMalformedHeader);
  EXPECT_CAGELIFT_ERROR(ReadGraph6("Ih"), ErrorCode::kTruncatedBits);
  EXPECT_CAGELIFT_ERROR(ReadGraph6("D\x01"
                                   "C"),
                        ErrorCode::kNonPrintableChar);
  EXPECT_CAGELIFT_ERROR(ReadGraph6("DhCC"), ErrorCode::kParseError);
}

TEST(VoltageTextTest, RoundTripsConstructions) {
  for (const VoltageGraph& g :
       {BuildG6(1, 2), BuildG8(1, 2, 2, 1), BuildG10(), BuildH10(), BuildG12(),
        BuildH12(), BuildHeawoodBase(), BuildTreeT4t(3)}) {
    const std::string text = WriteVoltageGraph(g);
    const VoltageGraph back = ReadVoltageGraph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(WriteVoltageGraph(back), text);
  }
}

TEST(VoltageTextTest, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const VoltageGraph g = testing::RandomVoltageGraph(rng);
    EXPECT_EQ(ReadVoltageGraph(WriteVoltageGraph(g)), g);
  }
}

TEST(VoltageTextTest, Format) {
  const VoltageGraph g = VoltageGraph::Create({{"a"}, {"b"}, {"p*", true}},
                                              {{"a", "b", -3}, {"p*", "a", 0}});
  EXPECT_EQ(WriteVoltageGraph(g),
            "vertex a\nvertex b\nvertex p* pinned\n"
            "arc a b -3\narc p* a 0\n");
  EXPECT_EQ(ArcLine(g, 0), "arc a b -3");
  const VoltageGraph parsed = ReadVoltageGraph(
      "# comment\n\nvertex a   # trailing\nvertex b\n"
      "vertex p* pinned\narc a b -3\narc p* a 0\n");
  EXPECT_EQ(parsed, g);
}

TEST(VoltageTextTest, ErrorsCarryLineAndCode) {
  try {
    ReadVoltageGraph("vertex a\narc a b 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownEndpoint);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_CAGELIFT_ERROR(ReadVoltageGraph("vertex a\nvertex a\n"),
                        ErrorCode::kDuplicateName);
  EXPECT_CAGELIFT_ERROR(ReadVoltageGraph("vertex p pinned\n"),
                        ErrorCode::kParseError);
  EXPECT_CAGELIFT_ERROR(ReadVoltageGraph("vertex p*\n"),
                        ErrorCode::kParseError);
  EXPECT_CAGELIFT_ERROR(ReadVoltageGraph("vertex a\nvertex b\narc a b x\n"),
                        ErrorCode::kParseError);
  EXPECT_CAGELIFT_ERROR(
      ReadVoltageGraph("vertex p* pinned\nvertex q* pinned\narc p* q* 0\n"),
      ErrorCode::kPinnedToPinnedArc);
  EXPECT_CAGELIFT_ERROR(
      ReadVoltageGraph("vertex p* pinned\nvertex a\narc p* a 2\n"),
      ErrorCode::kNonzeroVoltageAtPinned);
  EXPECT_CAGELIFT_ERROR(ReadVoltageGraph("edge a b\n"), ErrorCode::kParseError);
}

TEST(EdgeListTest, RoundTripAndErrors) {
  const std::string text = WriteEdgeList(BuildK33());
  EXPECT_EQ(text.substr(0, 12), "order 6\n0 3\n");
  EXPECT_EQ(ReadEdgeList(text).Edges(), BuildK33().Edges());
  EXPECT_EQ(ReadEdgeList("# c\norder 3\n0 1 # x\n\n1 2\n").size(), 2);
  EXPECT_CAGELIFT_ERROR(ReadEdgeList("0 1\n"), ErrorCode::kParseError);
  EXPECT_CAGELIFT_ERROR(ReadEdgeList("order 2\n0 2\n"), ErrorCode::kParseError);
  EXPECT_CAGELIFT_ERROR(ReadEdgeList(""), ErrorCode::kParseError);
}

TEST(DotTest, VoltageGraph) {
  const VoltageGraph g = VoltageGraph::Create({{"a"}, {"p*", true}},
                                              {{"a", "a", 2}, {"p*", "a", 0}});
  EXPECT_EQ(ExportDot(g),
            "digraph G {\n  node [shape=circle];\n  \"a\";\n"
            "  \"p*\" [shape=box];\n  \"a\" -> \"a\" [label=\"2\"];\n"
            "  \"p*\" -> \"a\" [dir=none];\n}\n");
}

TEST(DotTest, SimpleGraph) {
  std::vector<Edge> edges = {{0, 1}};
  const SimpleGraph g = SimpleGraph::FromEdges(2, edges, {"u", "v"});
  EXPECT_EQ(
      ExportDot(g),
      "graph G {\n  0 [label=\"u\"];\n  1 [label=\"v\"];\n  0 -- 1;\n}\n");
}

TEST(DescribeTest, WalkAndWitness) {
  const VoltageGraph g = BuildHeawoodBase();
  const std::vector<Step> steps = {{1, true}, {2, false}};
  EXPECT_EQ(DescribeWalk(g, 0, steps), "A -[-1]- B -[-2]- A");
  const GirthCertificate cert = Certify(g, 8, std::vector<int>{7});
  ASSERT_TRUE(cert.verdicts[0].witness.has_value());
  const std::string text = DescribeWitness(g, *cert.verdicts[0].witness);
  EXPECT_EQ(text.rfind("closed-walk length=6", 0), 0u) << text;
}

TEST(JsonTest, ReportsUseNullForInfinity) {
  std::vector<Edge> edges = {{0, 1}};
  const std::string json =
      GraphReportToJson(Analyze(SimpleGraph::FromEdges(3, edges)));
  EXPECT_NE(json.find("\"girth\":null"), std::string::npos) << json;
  EXPECT_NE(json.find("\"diameter\":null"), std::string::npos) << json;
  EXPECT_EQ(json.find('\n'), std::string::npos);
}

}  // namespace
}  // namespace cagelift
