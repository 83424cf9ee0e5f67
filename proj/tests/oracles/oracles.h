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

// Slow reference implementations used to cross-check the library. They only
// read graph data and share no algorithmic code with it.

#ifndef CAGELIFT_TESTS_ORACLES_ORACLES_H_
#define CAGELIFT_TESTS_ORACLES_ORACLES_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "cagelift/simple_graph.h"
#include "cagelift/voltage_graph.h"

namespace cagelift::oracle {

inline constexpr int kInfinite = -1;

// Girth as min over edges uv of dist(u, v) in G - uv, plus one.
int Girth(const SimpleGraph& g);

// Recursive two-colouring.
bool IsBipartite(const SimpleGraph& g);

// All-pairs distances by Floyd-Warshall; kInfinite when unreachable.
std::vector<std::vector<int>> AllDistances(const SimpleGraph& g);

// Lift vertex numbering: vertices in declaration order, m consecutive slots
// per unpinned vertex and one per pinned vertex.
int LiftIndex(const VoltageGraph& g, int m, int vertex, int fiber);
int LiftOrder(const VoltageGraph& g, int m);

// Lift edge multiset written straight from the definition; duplicates and
// self-loops are kept so collisions are visible.
std::multiset<std::pair<int, int>> LiftEdges(const VoltageGraph& g, int m);

// Distinct vertices, consecutive ones joined by at least one lift edge.
bool IsCycle(const std::multiset<std::pair<int, int>>& edges,
             std::span<const int> cycle);

struct CycleCount {
  std::map<int, std::int64_t> by_length;  // directed, rotations merged
  std::set<std::int64_t> sums;
  std::int64_t total = 0;
};

// Directed simple cycles of length <= max_len, counted by enumerating every
// rooted traversal and dividing by the number of roots.
CycleCount CountCycles(const VoltageGraph& g, int max_len);

}  // namespace cagelift::oracle

#endif  // CAGELIFT_TESTS_ORACLES_ORACLES_H_
