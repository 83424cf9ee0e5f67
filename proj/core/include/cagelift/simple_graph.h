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

#ifndef CAGELIFT_SIMPLE_GRAPH_H_
#define CAGELIFT_SIMPLE_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cagelift {

using Edge = std::pair<int, int>;

// Undirected simple graph with per-vertex labels and sorted adjacency.
// Immutable after construction.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Builds a graph on `n` vertices. Throws InvalidArgument on self-loops,
  // duplicate edges or out-of-range endpoints. Missing labels default to the
  // vertex index.
  static SimpleGraph FromEdges(int n, std::span<const Edge> edges,
                               std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::int64_t size() const { return num_edges_; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool HasEdge(int u, int v) const;
  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> Edges() const;
  int FindLabel(const std::string& label) const;  // -1 when absent

  // Vertex `v` of the result is vertex `perm[v]` of this graph.
  SimpleGraph Permuted(std::span<const int> perm) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
  std::int64_t num_edges_ = 0;
};

}  // namespace cagelift

#endif  // CAGELIFT_SIMPLE_GRAPH_H_
