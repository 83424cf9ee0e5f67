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

#ifndef CAGELIFT_GRAPH_ANALYSIS_H_
#define CAGELIFT_GRAPH_ANALYSIS_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cagelift/simple_graph.h"

namespace cagelift {

// A non-negative length or Infinite (acyclic graph, unreachable vertex).
class Length {
 public:
  constexpr Length() = default;  // Infinite
  constexpr explicit Length(int value) : value_(value) {}
  static constexpr Length Infinite() { return Length(); }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }
  // Precondition: is_finite().
  constexpr int value() const { return *value_; }

  std::string ToString() const;

  friend constexpr bool operator==(const Length&, const Length&) = default;
  friend constexpr std::strong_ordering operator<=>(const Length& a,
                                                    const Length& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }
  friend constexpr bool operator==(const Length& a, int b) {
    return a.is_finite() && *a.value_ == b;
  }

 private:
  std::optional<int> value_;
};

// Exact girth by one breadth-first search per vertex with cross-edge
// detection. Roots are processed in parallel.
Length Girth(const SimpleGraph& g);

struct Bipartition {
  bool bipartite = true;
  // 0/1 colour per vertex when bipartite.
  std::vector<int> color;
  // A closed odd cycle (vertex sequence, first vertex not repeated) when not.
  std::vector<int> odd_cycle;
};

Bipartition CheckBipartite(const SimpleGraph& g);
inline bool IsBipartite(const SimpleGraph& g) {
  return CheckBipartite(g).bipartite;
}

// BFS distances from `source`; unreachable vertices map to -1.
std::vector<int> BfsDistances(const SimpleGraph& g, int source);
Length Distance(const SimpleGraph& g, int u, int v);

// All unordered pairs {u, v}, u < v, at distance >= d (including pairs in
// different components), in lexicographic order.
std::vector<Edge> RemotePairs(const SimpleGraph& g, int d);

std::map<int, std::int64_t> DegreeHistogram(const SimpleGraph& g);

// True when `cycle` lists k >= 3 distinct vertices with consecutive ones
// (and the last and first) adjacent.
bool IsCycle(const SimpleGraph& g, std::span<const int> cycle);

struct GraphReport {
  int order = 0;
  std::int64_t size = 0;
  Length girth;
  bool bipartite = true;
  std::map<int, std::int64_t> degree_histogram;
  int components = 0;
  // Infinite when the graph is disconnected; see component_diameters.
  Length diameter;
  std::vector<int> component_diameters;
};

GraphReport Analyze(const SimpleGraph& g);

}  // namespace cagelift

#endif  // CAGELIFT_GRAPH_ANALYSIS_H_
