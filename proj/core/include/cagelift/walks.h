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

#ifndef CAGELIFT_WALKS_H_
#define CAGELIFT_WALKS_H_

#include <compare>
#include <span>
#include <vector>

#include "cagelift/voltage_graph.h"

namespace cagelift {

// One traversal of an arc. Forward goes tail -> head and adds the voltage;
// backward goes head -> tail and subtracts it.
struct Step {
  int arc = 0;
  bool forward = true;

  // Ordered by arc, forward before backward.
  int key() const { return 2 * arc + (forward ? 0 : 1); }
  friend bool operator==(const Step&, const Step&) = default;
  friend std::strong_ordering operator<=>(const Step& a, const Step& b) {
    return a.key() <=> b.key();
  }
};

// True when `next` undoes `prev` (same arc, opposite direction).
inline bool IsReversal(const Step& prev, const Step& next) {
  return prev.arc == next.arc && prev.forward != next.forward;
}

// A non-reversing closed walk, stored in canonical form: the step sequence is
// the least of its rotations. The two orientations are different walks.
struct ClosedWalk {
  int start_vertex = 0;
  std::vector<Step> steps;
  Voltage voltage_sum = 0;

  int length() const { return static_cast<int>(steps.size()); }
  friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
};

// Sorted by length, then step sequence.
bool WalkLess(const ClosedWalk& a, const ClosedWalk& b);

int StepTail(const VoltageGraph& g, const Step& s);
int StepHead(const VoltageGraph& g, const Step& s);
Voltage StepVoltage(const VoltageGraph& g, const Step& s);
Voltage WalkSum(const VoltageGraph& g, std::span<const Step> steps);

// Vertices visited from `start`, including the final one (steps + 1 entries).
// Throws InvalidArgument if the steps are not consecutive.
std::vector<int> WalkVertices(const VoltageGraph& g, int start,
                              std::span<const Step> steps);

// The same walk traversed backwards, re-canonicalized.
ClosedWalk Reversed(const VoltageGraph& g, const ClosedWalk& walk);

// Builds a canonical closed walk from an arbitrary rotation. Throws
// InvalidArgument if the steps do not close up or reverse somewhere
// (cyclically).
ClosedWalk MakeClosedWalk(const VoltageGraph& g, int start,
                          std::vector<Step> steps);

// Number of times the walk repeats its shortest period (1 for primitive).
int WrapCount(const ClosedWalk& walk);

// Directed simple cycles (no repeated vertex) of length 1..max_len, both
// orientations, sorted. Back-and-forth along a single arc is not a cycle;
// two parallel arcs form a 2-cycle and a loop a 1-cycle.
std::vector<ClosedWalk> EnumerateCycles(const VoltageGraph& g, int max_len);

// Cyclically non-reversing closed walks of length 1..max_len, sorted.
// Vertices and arcs may repeat. With `avoid_pinned`, walks never visit a
// pinned vertex.
std::vector<ClosedWalk> EnumerateClosedWalks(const VoltageGraph& g, int max_len,
                                             bool avoid_pinned = false);

// A simple path between two distinct pinned vertices whose interior avoids
// pinned vertices. Each path is listed once, from the lower-indexed end.
struct PinnedPath {
  int from = 0;
  int to = 0;
  std::vector<Step> steps;
  Voltage voltage_sum = 0;

  int length() const { return static_cast<int>(steps.size()); }
};

std::vector<PinnedPath> EnumeratePinnedPaths(const VoltageGraph& g,
                                             int max_len);

// A simple path of length p >= 1 from a pinned vertex to a vertex v of a
// simple cycle of length q, sharing only v with it. `cycle` is rotated to
// start at v (so it is not necessarily in canonical form). Both cycle
// orientations are listed.
struct Lollipop {
  int pinned = 0;
  std::vector<Step> path;
  ClosedWalk cycle;
  Voltage path_sum = 0;

  int path_length() const { return static_cast<int>(path.size()); }
  int cycle_length() const { return cycle.length(); }
  Voltage cycle_sum() const { return cycle.voltage_sum; }
  int score() const { return 2 * path_length() + cycle_length(); }
};

// All lollipops with 2p + q <= max_score, sorted by score.
std::vector<Lollipop> EnumerateLollipops(const VoltageGraph& g, int max_score);

}  // namespace cagelift

#endif  // CAGELIFT_WALKS_H_
