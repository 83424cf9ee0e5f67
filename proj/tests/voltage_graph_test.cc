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

#include "cagelift/voltage_graph.h"

#include <vector>

#include "cagelift/constructions.h"
#include "error_matchers.h"
#include "gtest/gtest.h"

namespace cagelift {
namespace {

VoltageGraph Triangle() {
  return VoltageGraph::Create(
      {{"a"}, {"b"}, {"c"}, {"p", true}},
      {{"a", "b", 1}, {"b", "c", -2}, {"c", "a", 0}, {"p", "a", 0}},
      "triangle");
}

TEST(VoltageGraphTest, IndexesVerticesAndArcs) {
  const VoltageGraph g = Triangle();
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_arcs(), 4);
  EXPECT_EQ(g.num_pinned(), 1);
  EXPECT_EQ(g.num_unpinned(), 3);
  EXPECT_EQ(g.Find("c"), 2);
  EXPECT_FALSE(g.Find("z").has_value());
  EXPECT_EQ(g.arc(1).tail, 1);
  EXPECT_EQ(g.arc(1).head, 2);
  EXPECT_EQ(g.arc(1).voltage, -2);
  EXPECT_EQ(g.description(), "triangle");
  EXPECT_TRUE(g.is_pinned(3));
  EXPECT_EQ(g.Degree(0), 3);
  EXPECT_EQ(g.Degree(3), 1);
}

TEST(VoltageGraphTest, IncidencesRecordDirection) {
  const VoltageGraph g = Triangle();
  // Arc 0 leaves a, arc 2 enters a, arc 3 enters a from p.
  const auto inc = g.incidences(0);
  ASSERT_EQ(inc.size(), 3u);
  int forward = 0;
  for (const Incidence& i : inc) {
    if (i.arc == 0) {
      EXPECT_TRUE(i.forward);
      EXPECT_EQ(i.other, 1);
      ++forward;
    } else {
      EXPECT_FALSE(i.forward);
    }
  }
  EXPECT_EQ(forward, 1);
}

TEST(VoltageGraphTest, LoopCountsTwice) {
  const VoltageGraph g = VoltageGraph::Create({{"a"}}, {{"a", "a", 3}});
  EXPECT_EQ(g.Degree(0), 2);
  EXPECT_TRUE(g.arc(0).is_loop());
}

TEST(VoltageGraphTest, RejectsDuplicateNames) {
  EXPECT_CAGELIFT_ERROR(VoltageGraph::Create({{"a"}, {"a"}}, {}),
                        ErrorCode::kDuplicateName);
}

TEST(VoltageGraphTest, RejectsUnknownEndpoint) {
  EXPECT_CAGELIFT_ERROR(VoltageGraph::Create({{"a"}}, {{"a", "b", 0}}),
                        ErrorCode::kUnknownEndpoint);
  EXPECT_CAGELIFT_ERROR(Triangle().Require("nope"),
                        ErrorCode::kUnknownEndpoint);
}

TEST(VoltageGraphTest, RejectsPinnedToPinned) {
  EXPECT_CAGELIFT_ERROR(
      VoltageGraph::Create({{"p", true}, {"q", true}}, {{"p", "q", 0}}),
      ErrorCode::kPinnedToPinnedArc);
}

TEST(VoltageGraphTest, RejectsVoltageAtPinned) {
  EXPECT_CAGELIFT_ERROR(
      VoltageGraph::Create({{"p", true}, {"a"}}, {{"a", "p", 1}}),
      ErrorCode::kNonzeroVoltageAtPinned);
}

TEST(VoltageGraphTest, WithVoltagesReplacesOnlyListedArcs) {
  const VoltageGraph g = Triangle();
  const std::vector<int> arcs = {0, 2};
  const std::vector<Voltage> volts = {7, -7};
  const VoltageGraph h = g.WithVoltages(arcs, volts);
  EXPECT_EQ(h.arc(0).voltage, 7);
  EXPECT_EQ(h.arc(1).voltage, -2);
  EXPECT_EQ(h.arc(2).voltage, -7);
  EXPECT_EQ(g.arc(0).voltage, 1);
  const std::vector<int> pinned_arc = {3};
  const std::vector<Voltage> one = {1};
  EXPECT_CAGELIFT_ERROR(g.WithVoltages(pinned_arc, one),
                        ErrorCode::kNonzeroVoltageAtPinned);
  const std::vector<int> bad = {9};
  EXPECT_CAGELIFT_ERROR(g.WithVoltages(bad, one), ErrorCode::kInvalidArgument);
}

TEST(VoltageGraphTest, SpecsRoundTrip) {
  const VoltageGraph g = BuildG10();
  EXPECT_EQ(VoltageGraph::Create(g.VertexSpecs(), g.ArcSpecs()), g);
}

TEST(VoltageGraphTest, SkeletonValidation) {
  EXPECT_TRUE(ValidateSemicubicSkeleton(BuildG12()).empty());
  const auto issues = ValidateSemicubicSkeleton(Triangle());
  // b and c have degree 2.
  ASSERT_EQ(issues.size(), 2u);
  EXPECT_EQ(issues[0].vertex, 1);
  EXPECT_EQ(issues[0].degree, 2);
  EXPECT_EQ(issues[0].expected, 3);
}

TEST(ErrorTest, WhatCarriesCodeName) {
  const Error e(ErrorCode::kBadM, "m too small");
  EXPECT_EQ(std::string(e.what()), "BadM: m too small");
  EXPECT_EQ(ErrorCodeName(ErrorCode::kTruncatedBits), "TruncatedBits");
}

}  // namespace
}  // namespace cagelift
