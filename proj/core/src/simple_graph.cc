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

#include "cagelift/simple_graph.h"

#include <algorithm>

#include "cagelift/error.h"

namespace cagelift {

SimpleGraph SimpleGraph::FromEdges(int n, std::span<const Edge> edges,
                                   std::vector<std::string> labels) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative order");
  SimpleGraph g;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge {" + std::to_string(u) +
                                                   ", " + std::to_string(v) +
                                                   "} out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge at vertex " + std::to_string(v));
    }
  }
  g.num_edges_ = static_cast<std::int64_t>(edges.size());
  labels.resize(n);
  for (int v = 0; v < n; ++v) {
    if (labels[v].empty()) labels[v] = std::to_string(v);
  }
  g.labels_ = std::move(labels);
  return g;
}

bool SimpleGraph::HasEdge(int u, int v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> SimpleGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int SimpleGraph::FindLabel(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

SimpleGraph SimpleGraph::Permuted(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<int> inverse(n, -1);
  for (int v = 0; v < n; ++v) inverse[perm[v]] = v;
  std::vector<Edge> edges;
  edges.reserve(num_edges_);
  for (auto [u, v] : Edges()) edges.emplace_back(inverse[u], inverse[v]);
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = labels_[perm[v]];
  return FromEdges(n, edges, std::move(labels));
}

}  // namespace cagelift
